#include "uakit/frame.hpp"

#include <boost/functional/hash.hpp>
#include <stdexcept>

namespace uakit {

namespace {

// Precompute full projection tables up to this many atoms.
constexpr int kTableAtoms = 10;

}  // namespace

std::optional<StateId> HMSFrame::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

StateId HMSFrame::state(std::string_view name) const {
  auto s = find(name);
  if (!s) throw std::out_of_range("unknown state '" + std::string(name) + "'");
  return *s;
}

StateId HMSFrame::compose(StateId s, AtomSet psi) const {
  for (int x : (space_of_[s] - psi).members()) s = cover_[s][x];
  return s;
}

StateId HMSFrame::project(StateId s, AtomSet psi) const {
  if (!psi.subset_of(space_of_[s]))
    throw std::invalid_argument("cannot project " + names_[s] + " to {" + vocab_.key(psi) + "}");
  if (!table_.empty()) return table_[s][psi.bits()];
  return compose(s, psi);
}

StateSet HMSFrame::project_set(const StateSet& x, AtomSet psi) const {
  StateSet out(num_states());
  for (auto s = x.find_first(); s != StateSet::npos; s = x.find_next(s)) {
    if (psi.subset_of(space_of_[s])) out.set(project(static_cast<StateId>(s), psi));
  }
  return out;
}

StateSet HMSFrame::up(const StateSet& x) const {
  std::vector<AtomSet> touched;
  for (int m = 0; m < num_spaces(); ++m)
    if (x.intersects(space_sets_[m])) touched.push_back(AtomSet::from_bits(m));
  StateSet out(num_states());
  for (StateId t = 0; t < num_states(); ++t) {
    for (AtomSet phi : touched) {
      if (phi.subset_of(space_of_[t]) && x.test(project(t, phi))) {
        out.set(t);
        break;
      }
    }
  }
  return out;
}

std::string HMSFrame::describe(const StateSet& x) const {
  std::string out = "{";
  bool first = true;
  for (auto s = x.find_first(); s != StateSet::npos; s = x.find_next(s)) {
    if (!first) out += ", ";
    out += names_[s];
    first = false;
  }
  return out + "}";
}

FrameBuilder::FrameBuilder(Vocabulary vocab) : vocab_(std::move(vocab)) {}

StateId FrameBuilder::add_state(std::string name, AtomSet space) {
  if (!space.subset_of(vocab_.all())) throw ModelError("state " + name + " lives in a space outside the vocabulary");
  names_.push_back(std::move(name));
  spaces_.push_back(space);
  cover_.emplace_back(vocab_.size(), -1);
  return static_cast<StateId>(names_.size() - 1);
}

void FrameBuilder::set_projection(StateId from, AtomSet target, StateId to) {
  if (from < 0 || from >= static_cast<int>(names_.size()) || to < 0 || to >= static_cast<int>(names_.size()))
    throw ModelError("projection refers to an unknown state");
  const AtomSet src = spaces_[from];
  if (!target.subset_of(src)) throw ModelError("projection from " + names_[from] + " targets a larger space");
  if (spaces_[to] != target)
    throw ModelError("projection of " + names_[from] + " to {" + vocab_.key(target) + "} lands in the wrong space");
  const AtomSet gone = src - target;
  if (gone.size() == 1) {
    cover_[from][gone.members().front()] = to;
  } else {
    extra_.push_back({from, target, to});
  }
}

HMSFrame FrameBuilder::build() const {
  HMSFrame f;
  f.vocab_ = vocab_;
  f.names_ = names_;
  f.space_of_ = spaces_;
  f.cover_ = cover_;
  f.extra_ = extra_;
  const int n = static_cast<int>(names_.size());
  const int ns = 1 << vocab_.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw ModelError("duplicate state name '" + names_[i] + "'");

  f.spaces_.assign(ns, {});
  f.space_sets_.assign(ns, StateSet(n));
  f.above_.assign(ns, StateSet(n));
  for (StateId s = 0; s < n; ++s) {
    f.spaces_[spaces_[s].bits()].push_back(s);
    f.space_sets_[spaces_[s].bits()].set(s);
  }
  for (int m = 0; m < ns; ++m) {
    if (f.spaces_[m].empty()) throw ModelError("space {" + vocab_.key(AtomSet::from_bits(m)) + "} is empty");
    for (StateId s = 0; s < n; ++s)
      if (AtomSet::from_bits(m).subset_of(spaces_[s])) f.above_[m].set(s);
  }
  for (StateId s = 0; s < n; ++s) {
    for (int x : spaces_[s].members()) {
      if (cover_[s][x] < 0)
        throw ModelError("missing projection of " + names_[s] + " dropping " + vocab_.name(x));
    }
  }
  if (vocab_.size() <= kTableAtoms) {
    f.table_.assign(n, std::vector<StateId>(ns, -1));
    for (StateId s = 0; s < n; ++s)
      for (AtomSet psi : spaces_[s].subsets()) f.table_[s][psi.bits()] = f.compose(s, psi);
  }
  return f;
}

ValidationReport validate_frame(const HMSFrame& f) {
  ValidationReport r;
  const Vocabulary& v = f.vocabulary();
  for (int m = 0; m < f.num_spaces(); ++m) {
    AtomSet phi = AtomSet::from_bits(m);
    for (int x : phi.members()) {
      StateSet image(f.num_states());
      for (StateId s : f.space(phi)) image.set(f.cover(s, x));
      if (image != f.space_set(phi - AtomSet::single(x)))
        r.error("frame.surjective", "projection {" + v.key(phi) + "} -> {" + v.key(phi - AtomSet::single(x)) +
                                        "} is not onto");
    }
  }
  for (StateId s = 0; s < f.num_states(); ++s) {
    auto atoms = f.space_of(s).members();
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      for (std::size_t b = a + 1; b < atoms.size(); ++b) {
        StateId xy = f.cover(f.cover(s, atoms[a]), atoms[b]);
        StateId yx = f.cover(f.cover(s, atoms[b]), atoms[a]);
        if (xy != yx)
          r.error("frame.commutation", "dropping " + v.name(atoms[a]) + " and " + v.name(atoms[b]) + " from " +
                                           f.name(s) + " in different orders gives " + f.name(xy) + " and " + f.name(yx));
      }
    }
  }
  for (const auto& e : f.extra_projections()) {
    if (f.project(e.from, e.target) != e.to)
      r.error("frame.commutation", "given projection of " + f.name(e.from) + " to {" + v.key(e.target) +
                                       "} disagrees with the composed one");
  }
  return r;
}

std::size_t EventHash::operator()(const Event& e) const noexcept {
  std::size_t h = e.space.bits();
  boost::hash_combine(h, boost::hash_value(e.base));
  return h;
}

Event make_event(const HMSFrame& f, AtomSet space, const StateSet& base) {
  if (!base.is_subset_of(f.space_set(space)))
    throw std::invalid_argument("event base is not inside S_{" + f.vocabulary().key(space) + "}");
  Event e{space, base, StateSet(f.num_states())};
  const StateSet& above = f.above(space);
  for (auto t = above.find_first(); t != StateSet::npos; t = above.find_next(t))
    if (base.test(f.project(static_cast<StateId>(t), space))) e.ext.set(t);
  return e;
}

Event empty_event(const HMSFrame& f, AtomSet space) {
  return Event{space, f.empty_set(), f.empty_set()};
}

Event full_event(const HMSFrame& f, AtomSet space) { return Event{space, f.space_set(space), f.above(space)}; }

Event omega(const HMSFrame& f) { return full_event(f, AtomSet{}); }

const StateSet& up_closure(const Event& e) { return e.ext; }

Event event_negate(const HMSFrame& f, const Event& e) {
  return Event{e.space, f.space_set(e.space) - e.base, f.above(e.space) - e.ext};
}

Event event_intersect(const HMSFrame& f, const Event& a, const Event& b) {
  Event out{a.space | b.space, {}, a.ext & b.ext};
  out.base = out.ext & f.space_set(out.space);
  return out;
}

Event event_intersect(const HMSFrame& f, std::span<const Event> es) {
  if (es.empty()) throw std::invalid_argument("intersection of no events");
  Event out = es.front();
  for (std::size_t k = 1; k < es.size(); ++k) out = event_intersect(f, out, es[k]);
  return out;
}

Event event_union(const HMSFrame& f, const Event& a, const Event& b) {
  return event_negate(f, event_intersect(f, event_negate(f, a), event_negate(f, b)));
}

Event event_union(const HMSFrame& f, std::span<const Event> es) {
  if (es.empty()) throw std::invalid_argument("union of no events");
  std::vector<Event> negs;
  for (const auto& e : es) negs.push_back(event_negate(f, e));
  return event_negate(f, event_intersect(f, negs));
}

std::optional<Event> event_from_set(const HMSFrame& f, const StateSet& x, AtomSet empty_tag) {
  if (x.none()) return empty_event(f, empty_tag);
  AtomSet phi = f.at();
  for (auto s = x.find_first(); s != StateSet::npos; s = x.find_next(s)) phi = phi & f.space_of(static_cast<StateId>(s));
  StateSet base = x & f.space_set(phi);
  if (base.none()) return std::nullopt;
  Event e = make_event(f, phi, base);
  if (e.ext != x) return std::nullopt;
  return e;
}

std::vector<Event> enumerate_events(const HMSFrame& f) {
  std::vector<Event> out;
  for (int m = 0; m < f.num_spaces(); ++m) {
    AtomSet phi = AtomSet::from_bits(m);
    const auto& states = f.space(phi);
    if (states.size() > 20) throw std::length_error("space too large to enumerate its subsets");
    const std::uint32_t count = 1u << states.size();
    for (std::uint32_t sub = 0; sub < count; ++sub) {
      StateSet base(f.num_states());
      for (std::size_t k = 0; k < states.size(); ++k)
        if ((sub >> k) & 1u) base.set(states[k]);
      out.push_back(make_event(f, phi, base));
    }
  }
  return out;
}

}  // namespace uakit
