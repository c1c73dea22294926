#include "uakit/transforms.hpp"

#include <stdexcept>

#include "uakit/io.hpp"

namespace uakit {

namespace {

std::string count(std::size_t n, const char* noun) { return std::to_string(n) + " " + noun + (n == 1 ? "" : "s"); }

Transformed<HMSModel> t_transform_impl(const FHCategory& c) {
  if (c.at != c.vocabulary.all())
    throw std::invalid_argument("category atoms must be the whole vocabulary");
  auto report = validate_category(c);
  if (!report.ok()) throw std::invalid_argument("category does not validate:\n" + report.to_string());

  Transformed<HMSModel> out;
  const int agents = c.model(c.at).agents;
  FrameBuilder b(c.vocabulary);
  std::map<AtomSet, StateId> offset;
  for (const auto& [phi, k] : c.models) {
    offset[phi] = -1;
    for (int w = 0; w < k.num_worlds(); ++w) {
      StateId s = b.add_state(k.worlds[w], phi);
      if (w == 0) offset[phi] = s;
    }
  }
  for (const auto& [phi, k] : c.models) {
    for (int x : phi.members()) {
      const AtomSet psi = phi - AtomSet::single(x);
      const WorldMap& f = c.morphism(phi, psi);
      for (int w = 0; w < k.num_worlds(); ++w) b.set_projection(offset[phi] + w, psi, offset[psi] + f[w]);
    }
  }
  HMSModel& m = out.model;
  m.frame = b.build();
  m.agents = agents;
  const HMSFrame& fr = m.frame;
  const int n = fr.num_states();

  Correspondence lam(agents, std::vector<StateSet>(n, fr.empty_set()));
  AwarenessFn alpha(agents, std::vector<AtomSet>(n));
  for (const auto& [phi, k] : c.models) {
    for (int i = 0; i < agents; ++i) {
      for (const auto& block : k.relations[i]) {
        StateSet set = fr.empty_set();
        for (int w : block) set.set(offset[phi] + w);
        for (int w : block) lam[i][offset[phi] + w] = set;
      }
      for (int w = 0; w < k.num_worlds(); ++w) alpha[i][offset[phi] + w] = k.awareness[i][w];
    }
  }
  m.lambda = std::move(lam);
  m.alpha = std::move(alpha);

  const Vocabulary& v = c.vocabulary;
  for (int p = 0; p < v.size(); ++p) {
    StateSet raw = fr.empty_set();
    for (const auto& [phi, k] : c.models) {
      if (!phi.contains(p)) continue;
      const WorldSet& vp = k.valuation[p];
      for (auto w = vp.find_first(); w != WorldSet::npos; w = vp.find_next(w)) raw.set(offset[phi] + static_cast<int>(w));
    }
    auto e = event_from_set(fr, raw, AtomSet::single(p));
    if (!e) throw ModelError("the worlds where " + v.name(p) + " holds do not form an event");
    m.valuation.push_back(*e);
  }

  const int top_worlds = c.model(c.at).num_worlds();
  for (const auto& [phi, k] : c.models) {
    const WorldMap& f = c.morphism(c.at, phi);
    std::vector<StateId> row(top_worlds);
    for (int w = 0; w < top_worlds; ++w) row[w] = offset[phi] + f[w];
    out.trace.world_to_state.emplace(phi, std::move(row));
  }
  out.trace.target = "ikb";
  out.trace.steps.push_back("t-transform: " + count(c.models.size(), "space") + ", " + count(n, "state"));
  return out;
}

void compose_with_base(TransformTrace& t, const WorldMap& from_base) {
  for (auto& [phi, row] : t.world_to_state) {
    std::vector<StateId> composed(from_base.size());
    for (std::size_t w = 0; w < from_base.size(); ++w) composed[w] = row[from_base[w]];
    row = std::move(composed);
  }
}

Transformed<FHModel> to_fh(const HMSModel& m, bool star) {
  ValidationReport r = validate_hms(m);
  if (!m.lambda) r.error("lambda.reflexivity", "model has no explicit-possibility correspondence");
  if (star && !m.alpha) r.error("alpha.O", "model has no awareness function");
  if (!star && !m.pi) r.error("pi.confinement", "model has no possibility correspondence");
  if (!r.ok()) throw std::invalid_argument("model does not validate:\n" + r.to_string());

  const HMSFrame& fr = m.frame;
  const AtomSet at = fr.at();
  const auto& top = fr.space(at);
  std::vector<int> world_of(fr.num_states(), -1);
  for (std::size_t w = 0; w < top.size(); ++w) world_of[top[w]] = static_cast<int>(w);

  Transformed<FHModel> out;
  FHModel& k = out.model;
  k.vocabulary = fr.vocabulary();
  k.vocab = at;
  k.agents = m.agents;
  for (StateId s : top) k.worlds.push_back(fr.name(s));
  const int n = k.num_worlds();
  HMSOperators ops(m);
  k.relations.assign(m.agents, {});
  k.awareness.assign(m.agents, std::vector<AtomSet>(n));
  for (int i = 0; i < m.agents; ++i) {
    std::vector<bool> done(n, false);
    for (int w = 0; w < n; ++w) {
      const StateId s = top[w];
      k.awareness[i][w] = star ? (*m.alpha)[i][s] : ops.pi_space(i, s);
      if (done[w]) continue;
      std::vector<int> block;
      const StateSet& l = (*m.lambda)[i][s];
      for (auto t = l.find_first(); t != StateSet::npos; t = l.find_next(t)) {
        block.push_back(world_of[t]);
        done[world_of[t]] = true;
      }
      k.relations[i].push_back(std::move(block));
    }
  }
  k.valuation.assign(fr.vocabulary().size(), WorldSet(n));
  for (int p = 0; p < fr.vocabulary().size(); ++p)
    for (int w = 0; w < n; ++w)
      if (m.valuation[p].ext.test(top[w])) k.valuation[p].set(w);

  out.trace.source_digest = digest(hms_to_json(m));
  out.trace.target = star ? "fh-star" : "fh";
  out.trace.state_of_world.assign(top.begin(), top.end());
  out.trace.steps.push_back(std::string(star ? "fh-star" : "fh") + "-transform: " + count(n, "world"));
  return out;
}

}  // namespace

Transformed<HMSModel> t_transform(const FHCategory& c) {
  auto out = t_transform_impl(c);
  out.trace.source_digest = digest(category_to_json(c));
  return out;
}

Transformed<HMSModel> truncated_hms_transform(const FHModel& k, RestrictMode mode) {
  FHCategory c = build_category(k, mode);
  auto out = t_transform_impl(c);
  compose_with_base(out.trace, c.from_base);
  out.trace.source_digest = digest(fh_to_json(k));
  out.trace.steps.insert(out.trace.steps.begin(),
                         "build category (" + to_string(mode) + "): " + count(c.models.size(), "model"));
  return out;
}

Transformed<HMSModel> hms_transform(const FHModel& k, RestrictMode mode) {
  auto out = truncated_hms_transform(k, mode);
  out.model.pi = derive_pi_star(out.model);
  out.trace.steps.push_back("derive possibility sets from explicit possibility and awareness");
  out.model.alpha.reset();
  out.trace.steps.push_back("drop awareness functions");
  out.trace.target = "hms";
  return out;
}

Transformed<FHModel> fh_transform(const HMSModel& m) { return to_fh(m, false); }

Transformed<FHModel> fh_star_transform(const HMSModel& m) { return to_fh(m, true); }

}  // namespace uakit
