#include "uakit/semantics.hpp"

namespace uakit {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

}  // namespace

UndefinedFormula::UndefinedFormula(AtomSet atoms, std::vector<std::string> names)
    : std::runtime_error("undefined(" + join(names) + ")"), atoms_(atoms), names_(std::move(names)) {}

HMSChecker::HMSChecker(const HMSModel& m) : ops_(m) {
  const HMSFrame& f = m.frame;
  if (static_cast<int>(m.valuation.size()) != f.vocabulary().size())
    throw std::invalid_argument("valuation does not cover the vocabulary");
  for (const Event& v : m.valuation) decided_.push_back(v.ext | (f.above(v.space) - v.ext));
}

Event HMSChecker::modal(Op op, int agent, const Event& e) const {
  if (agent < 0 || agent >= model().agents)
    throw std::invalid_argument("agent " + std::to_string(agent + 1) + " is not in the model");
  const HMSModel& m = model();
  switch (op) {
    case Op::L: return ops_.L(agent, e);
    case Op::A:
      if (m.pi) return ops_.A(agent, e);
      if (m.alpha) return ops_.Astar(agent, e);
      throw ModelError("awareness needs a possibility correspondence or an awareness function");
    case Op::K:
      if (m.pi) return ops_.K(agent, e);
      if (m.lambda && m.alpha) return ops_.meet(ops_.L(agent, e), ops_.Astar(agent, e));
      throw ModelError("knowledge needs a possibility correspondence, or explicit possibility and awareness");
    default: break;
  }
  throw std::invalid_argument("not a modal operator");
}

Event HMSChecker::extension(const Formula& f) const {
  switch (f.op()) {
    case Op::Top: return top();
    case Op::Atom:
      if (f.index() >= static_cast<int>(model().valuation.size())) throw std::invalid_argument("atom outside the model");
      return atom(f.index());
    case Op::Not: return ops_.neg(extension(f.sub()));
    case Op::And: return ops_.meet(extension(f.lhs()), extension(f.rhs()));
    default: return modal(f.op(), f.index(), extension(f.sub()));
  }
}

StateSet HMSChecker::defined_set(AtomSet atoms) const {
  StateSet out = frame().empty_set();
  out.set();
  for (int p : atoms.members()) out &= decided_.at(p);
  return out;
}

AtomSet HMSChecker::undefined_atoms(StateId s, const Formula& f) const {
  AtomSet out;
  for (int p : f.atoms().members())
    if (!decided_.at(p).test(s)) out |= AtomSet::single(p);
  return out;
}

bool HMSChecker::defined_at(StateId s, const Formula& f) const { return undefined_atoms(s, f).empty(); }

bool HMSChecker::sat(StateId s, const Formula& f) const {
  AtomSet bad = undefined_atoms(s, f);
  if (!bad.empty()) throw UndefinedFormula(bad, frame().vocabulary().names_of(bad));
  return extension(f).ext.test(s);
}

bool HMSChecker::valid(const Formula& f) const { return defined_set(f.atoms()).is_subset_of(extension(f).ext); }

Event extension(const HMSModel& m, const Formula& f) { return HMSChecker(m).extension(f); }
bool defined_at(const HMSModel& m, StateId s, const Formula& f) { return HMSChecker(m).defined_at(s, f); }
bool hms_sat(const HMSModel& m, StateId s, const Formula& f) { return HMSChecker(m).sat(s, f); }
bool valid_in(const HMSModel& m, const Formula& f) { return HMSChecker(m).valid(f); }

bool valid_in(const FHCategory& c, const Formula& f) {
  for (const auto& [phi, k] : c.models) {
    if (!f.atoms().subset_of(phi)) continue;
    if (!FHChecker(k).extension(f).all()) return false;
  }
  return true;
}

}  // namespace uakit
