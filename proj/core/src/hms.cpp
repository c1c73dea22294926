#include "uakit/hms.hpp"

#include <stdexcept>

namespace uakit {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Plain: return "plain";
    case ModelKind::Complemented: return "complemented";
    case ModelKind::ImplicitKnowledgeBased: return "implicit-knowledge-based";
    case ModelKind::ComplementedImplicitKnowledgeBased: return "complemented-implicit-knowledge-based";
    case ModelKind::Incomplete: return "incomplete";
  }
  return "?";
}

ModelKind HMSModel::kind() const {
  const bool ikb = lambda.has_value() && alpha.has_value();
  if (pi && ikb) return ModelKind::ComplementedImplicitKnowledgeBased;
  if (pi && lambda) return ModelKind::Complemented;
  if (pi) return ModelKind::Plain;
  if (ikb) return ModelKind::ImplicitKnowledgeBased;
  return ModelKind::Incomplete;
}

HMSOperators::HMSOperators(const HMSModel& m) : m_(&m) {
  if (!m.pi) return;
  const HMSFrame& f = m.frame;
  pi_space_.assign(m.agents, std::vector<AtomSet>(f.num_states()));
  pi_confined_.assign(m.agents, std::vector<bool>(f.num_states(), false));
  for (int i = 0; i < m.agents; ++i) {
    for (StateId s = 0; s < f.num_states(); ++s) {
      const StateSet& p = (*m.pi)[i][s];
      auto first = p.find_first();
      if (first == StateSet::npos) continue;
      AtomSet sp = f.space_of(static_cast<StateId>(first));
      pi_space_[i][s] = sp;
      pi_confined_[i][s] = p.is_subset_of(f.space_set(sp));
    }
  }
}

void HMSOperators::require(bool present, const char* what) const {
  if (!present) throw ModelError(std::string("model has no ") + what + " correspondence");
}

AtomSet HMSOperators::pi_space(int agent, StateId s) const {
  require(m_->pi.has_value(), "possibility");
  if (!pi_confined_.at(agent)[s])
    throw ModelError("possibility set of agent " + std::to_string(agent + 1) + " at " + frame().name(s) +
                     " is not confined to one space");
  return pi_space_[agent][s];
}

Event HMSOperators::finish(const StateSet& raw, AtomSet space, const char* op, int agent) const {
  auto e = event_from_set(frame(), raw, space);
  const std::string label = std::string(op) + "_" + std::to_string(agent + 1);
  if (!e) throw ModelError(label + " produced " + frame().describe(raw) + ", which is not an event");
  if (e->space != space)
    throw ModelError(label + " produced an event based on S_{" + frame().vocabulary().key(e->space) +
                     "} instead of S_{" + frame().vocabulary().key(space) + "}");
  return *e;
}

Event HMSOperators::K(int agent, const Event& e) const {
  require(m_->pi.has_value(), "possibility");
  const auto& pi = (*m_->pi).at(agent);
  StateSet raw = frame().empty_set();
  for (StateId s = 0; s < frame().num_states(); ++s)
    if (pi[s].is_subset_of(e.ext)) raw.set(s);
  return finish(raw, e.space, "K", agent);
}

Event HMSOperators::A(int agent, const Event& e) const {
  require(m_->pi.has_value(), "possibility");
  StateSet raw = frame().empty_set();
  for (StateId s = 0; s < frame().num_states(); ++s)
    if (e.space.subset_of(pi_space(agent, s))) raw.set(s);
  return finish(raw, e.space, "A", agent);
}

Event HMSOperators::U(int agent, const Event& e) const { return neg(A(agent, e)); }

Event HMSOperators::L(int agent, const Event& e) const {
  require(m_->lambda.has_value(), "explicit-possibility");
  const auto& lam = (*m_->lambda).at(agent);
  StateSet raw = frame().empty_set();
  for (StateId s = 0; s < frame().num_states(); ++s)
    if (lam[s].is_subset_of(e.ext)) raw.set(s);
  return finish(raw, e.space, "L", agent);
}

Event HMSOperators::Astar(int agent, const Event& e) const {
  require(m_->alpha.has_value(), "awareness");
  const auto& al = (*m_->alpha).at(agent);
  StateSet raw = frame().empty_set();
  for (StateId s = 0; s < frame().num_states(); ++s)
    if (e.space.subset_of(al[s])) raw.set(s);
  return finish(raw, e.space, "A*", agent);
}

Event k_op(const HMSModel& m, int agent, const Event& e) { return HMSOperators(m).K(agent, e); }
Event a_op(const HMSModel& m, int agent, const Event& e) { return HMSOperators(m).A(agent, e); }
Event u_op(const HMSModel& m, int agent, const Event& e) { return HMSOperators(m).U(agent, e); }
Event l_op(const HMSModel& m, int agent, const Event& e) { return HMSOperators(m).L(agent, e); }
Event a_star_op(const HMSModel& m, int agent, const Event& e) { return HMSOperators(m).Astar(agent, e); }

HMSModel with_pi_star(const HMSModel& m) {
  HMSModel out = m;
  out.pi = derive_pi_star(m);
  return out;
}

}  // namespace uakit
