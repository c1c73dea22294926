#include "uakit/equivalence.hpp"

#include <stdexcept>

namespace uakit {

namespace {

void check_agent(int agent, int agents) {
  if (agent < 0 || agent >= agents) throw std::invalid_argument("agent " + std::to_string(agent + 1) + " is not in the model");
}

std::string truth(bool b) { return b ? "true" : "false"; }

}  // namespace

FHValue FHDomain::modal(Op op, int agent, const Value& a) const {
  check_agent(agent, checker_.model().agents);
  switch (op) {
    case Op::L: return {checker_.box(agent, a.ext), a.atoms};
    case Op::A: return {checker_.aware(agent, a.atoms), a.atoms};
    case Op::K: return {checker_.box(agent, a.ext) & checker_.aware(agent, a.atoms), a.atoms};
    default: break;
  }
  throw std::invalid_argument("not a modal operator");
}

std::size_t FHDomain::hash(const Value& v) {
  std::size_t h = v.atoms.bits();
  boost::hash_combine(h, boost::hash_value(v.ext));
  return h;
}

HMSValue HMSDomain::modal(Op op, int agent, const Value& a) const {
  Key key{op, agent, a.event};
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(std::move(key), checker_.modal(op, agent, a.event)).first;
  return {it->second, a.atoms};
}

std::size_t HMSDomain::KeyHash::operator()(const Key& k) const {
  std::size_t h = EventHash{}(k.event);
  boost::hash_combine(h, static_cast<int>(k.op));
  boost::hash_combine(h, k.agent);
  return h;
}

std::size_t HMSDomain::hash(const Value& v) {
  std::size_t h = EventHash{}(v.event);
  boost::hash_combine(h, v.atoms.bits());
  return h;
}

CategoryDomain::CategoryDomain(const FHCategory& c) {
  for (const auto& [phi, k] : c.models) {
    spaces_.push_back(phi);
    checkers_.emplace_back(k);
  }
}

CategoryValue CategoryDomain::top() const {
  Value v;
  for (const auto& ch : checkers_) v.ext.push_back(ch.all());
  return v;
}

CategoryValue CategoryDomain::atom(int p) const {
  Value v;
  v.atoms = AtomSet::single(p);
  for (std::size_t m = 0; m < spaces_.size(); ++m) v.ext.push_back(spaces_[m].contains(p) ? checkers_[m].atom(p) : WorldSet());
  return v;
}

CategoryValue CategoryDomain::neg(const Value& a) const {
  Value v = a;
  for (std::size_t m = 0; m < spaces_.size(); ++m)
    if (a.atoms.subset_of(spaces_[m])) v.ext[m].flip();
  return v;
}

CategoryValue CategoryDomain::conj(const Value& a, const Value& b) const {
  Value v;
  v.atoms = a.atoms | b.atoms;
  for (std::size_t m = 0; m < spaces_.size(); ++m)
    v.ext.push_back(v.atoms.subset_of(spaces_[m]) ? (a.ext[m] & b.ext[m]) : WorldSet());
  return v;
}

CategoryValue CategoryDomain::modal(Op op, int agent, const Value& a) const {
  Value v;
  v.atoms = a.atoms;
  for (std::size_t m = 0; m < spaces_.size(); ++m) {
    if (!a.atoms.subset_of(spaces_[m])) {
      v.ext.emplace_back();
      continue;
    }
    const FHChecker& ch = checkers_[m];
    check_agent(agent, ch.model().agents);
    switch (op) {
      case Op::L: v.ext.push_back(ch.box(agent, a.ext[m])); break;
      case Op::A: v.ext.push_back(ch.aware(agent, a.atoms)); break;
      case Op::K: v.ext.push_back(ch.box(agent, a.ext[m]) & ch.aware(agent, a.atoms)); break;
      default: throw std::invalid_argument("not a modal operator");
    }
  }
  return v;
}

std::size_t CategoryDomain::hash(const Value& v) {
  std::size_t h = v.atoms.bits();
  for (const auto& e : v.ext) boost::hash_combine(h, boost::hash_value(e));
  return h;
}

bool CategoryDomain::valid(const Value& v) const {
  for (std::size_t m = 0; m < spaces_.size(); ++m)
    if (v.atoms.subset_of(spaces_[m]) && !v.ext[m].all()) return false;
  return true;
}

void EquivalenceReport::add(Formula f, std::string detail) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back({std::move(f), std::move(detail)});
}

void EquivalenceReport::merge(const EquivalenceReport& o) {
  classes += o.classes;
  checks += o.checks;
  for (const auto& w : o.witnesses) add(w.formula, w.detail);
}

std::string EquivalenceReport::to_string(const Vocabulary& v) const {
  std::string out = std::to_string(classes) + " classes, " + std::to_string(checks) + " checks, " +
                    std::to_string(witnesses.size()) + " witnesses\n";
  for (const auto& w : witnesses) out += "  " + print_formula(w.formula, v) + ": " + w.detail + "\n";
  return out;
}

EquivalenceReport fh_modally_equivalent(const FHModel& a, const FHModel& b,
                                        const std::vector<std::pair<int, int>>& pairing, int depth) {
  if (a.vocab != b.vocab || a.agents != b.agents)
    throw std::invalid_argument("models differ in atoms or agents");
  FHDomain da(a), db(b);
  ProductDomain<FHDomain, FHDomain> d(da, db);
  SemanticClosure<decltype(d)> closure(d, a.vocab, a.agents, depth);
  EquivalenceReport r;
  r.classes = closure.size();
  for (const auto& c : closure.classes()) {
    for (auto [wa, wb] : pairing) {
      ++r.checks;
      const bool x = c.value.first.ext.test(wa);
      const bool y = c.value.second.ext.test(wb);
      if (x != y)
        r.add(c.witness, a.worlds[wa] + " is " + truth(x) + ", " + b.worlds[wb] + " is " + truth(y));
    }
  }
  return r;
}

EquivalenceReport check_category_equivalence(const FHCategory& c, int depth) {
  CategoryDomain d(c);
  const int agents = c.model(c.at).agents;
  SemanticClosure<CategoryDomain> closure(d, c.at, agents, depth);
  EquivalenceReport r;
  r.classes = closure.size();
  const auto& spaces = d.spaces();
  for (const auto& cl : closure.classes()) {
    const AtomSet atoms = cl.value.atoms;
    for (std::size_t hi = 0; hi < spaces.size(); ++hi) {
      if (!atoms.subset_of(spaces[hi])) continue;
      const FHModel& big = c.model(spaces[hi]);
      for (std::size_t lo = 0; lo < spaces.size(); ++lo) {
        if (!atoms.subset_of(spaces[lo]) || !spaces[lo].subset_of(spaces[hi])) continue;
        const FHModel& small = c.model(spaces[lo]);
        const WorldMap& f = c.morphism(spaces[hi], spaces[lo]);
        for (int w = 0; w < big.num_worlds(); ++w) {
          ++r.checks;
          const bool x = cl.value.ext[hi].test(w);
          const bool y = cl.value.ext[lo].test(f[w]);
          if (x != y) r.add(cl.witness, big.worlds[w] + " is " + truth(x) + ", " + small.worlds[f[w]] + " is " + truth(y));
        }
      }
    }
  }
  return r;
}

EquivalenceReport check_fh_hms_equivalence(const FHModel& k, const HMSModel& m, const TransformTrace& t, int depth) {
  FHDomain dk(k);
  HMSDomain dm(m);
  ProductDomain<FHDomain, HMSDomain> d(dk, dm);
  SemanticClosure<decltype(d)> closure(d, k.vocab, k.agents, depth);
  EquivalenceReport r;
  r.classes = closure.size();
  const HMSFrame& f = m.frame;
  for (const auto& c : closure.classes()) {
    const AtomSet atoms = c.value.first.atoms;
    const StateSet defined = dm.checker().defined_set(atoms);
    for (const auto& [phi, row] : t.world_to_state) {
      if (!atoms.subset_of(phi)) continue;
      for (int w = 0; w < k.num_worlds(); ++w) {
        ++r.checks;
        const StateId s = row.at(w);
        const bool x = c.value.first.ext.test(w);
        if (!defined.test(s)) {
          r.add(c.witness, "undefined at " + f.name(s));
          continue;
        }
        const bool y = c.value.second.event.ext.test(s);
        if (x != y) r.add(c.witness, k.worlds[w] + " is " + truth(x) + ", " + f.name(s) + " is " + truth(y));
      }
    }
  }
  return r;
}

EquivalenceReport check_hms_fh_equivalence(const HMSModel& m, const FHModel& k, const TransformTrace& t, int depth) {
  FHDomain dk(k);
  HMSDomain dm(m);
  ProductDomain<FHDomain, HMSDomain> d(dk, dm);
  SemanticClosure<decltype(d)> closure(d, k.vocab, k.agents, depth);
  EquivalenceReport r;
  r.classes = closure.size();
  const HMSFrame& f = m.frame;
  for (const auto& c : closure.classes()) {
    for (int w = 0; w < k.num_worlds(); ++w) {
      ++r.checks;
      const StateId s = t.state_of_world.at(w);
      const bool x = c.value.first.ext.test(w);
      const bool y = c.value.second.event.ext.test(s);
      if (x != y) r.add(c.witness, k.worlds[w] + " is " + truth(x) + ", " + f.name(s) + " is " + truth(y));
    }
  }
  return r;
}

EquivalenceReport check_round_trip(const FHModel& k, RestrictMode mode, int depth) {
  auto there = hms_transform(k, mode);
  auto back = fh_transform(there.model);
  std::vector<int> world_of_state(there.model.frame.num_states(), -1);
  for (std::size_t j = 0; j < back.trace.state_of_world.size(); ++j)
    world_of_state[back.trace.state_of_world[j]] = static_cast<int>(j);
  const auto& top = there.trace.world_to_state.at(k.vocab);
  std::vector<std::pair<int, int>> pairing;
  for (int w = 0; w < k.num_worlds(); ++w) pairing.emplace_back(w, world_of_state[top[w]]);
  return fh_modally_equivalent(k, back.model, pairing, depth);
}

}  // namespace uakit
