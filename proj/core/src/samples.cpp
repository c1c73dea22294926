#include "uakit/samples.hpp"

namespace uakit {

namespace {

const Vocabulary& pq() {
  static const Vocabulary v({"p", "q"});
  return v;
}

constexpr AtomSet kP = AtomSet::single(0);
constexpr AtomSet kQ = AtomSet::single(1);
constexpr AtomSet kPQ = AtomSet::from_bits(3);

HMSFrame lattice() {
  FrameBuilder b(pq());
  const StateId s_empty = b.add_state("s_empty", {});
  const StateId p = b.add_state("p", kP);
  const StateId np = b.add_state("np", kP);
  const StateId q = b.add_state("q", kQ);
  const StateId nq = b.add_state("nq", kQ);
  for (StateId s : {p, np, q, nq}) b.set_projection(s, {}, s_empty);
  const StateId top[] = {b.add_state("pq", kPQ), b.add_state("pnq", kPQ), b.add_state("npq", kPQ),
                         b.add_state("npnq", kPQ)};
  const StateId to_p[] = {p, p, np, np};
  const StateId to_q[] = {q, nq, q, nq};
  for (int k = 0; k < 4; ++k) {
    b.set_projection(top[k], kP, to_p[k]);
    b.set_projection(top[k], kQ, to_q[k]);
  }
  return b.build();
}

StateSet set_of(const HMSFrame& f, std::initializer_list<const char*> names) {
  StateSet s = f.empty_set();
  for (const char* n : names) s.set(f.state(n));
  return s;
}

HMSModel base_model() {
  HMSModel m;
  m.frame = lattice();
  const HMSFrame& f = m.frame;
  m.valuation = {make_event(f, kP, set_of(f, {"p"})), make_event(f, kQ, set_of(f, {"q"}))};
  return m;
}

Correspondence pi_knows_p(const HMSFrame& f) {
  std::vector<StateSet> row(f.num_states(), f.empty_set());
  for (const char* s : {"pq", "pnq", "p"}) row[f.state(s)] = set_of(f, {"p"});
  for (const char* s : {"npq", "npnq", "np"}) row[f.state(s)] = set_of(f, {"np"});
  for (const char* s : {"q", "nq", "s_empty"}) row[f.state(s)] = set_of(f, {"s_empty"});
  return {row};
}

Correspondence singletons(const HMSFrame& f) {
  std::vector<StateSet> row(f.num_states(), f.empty_set());
  for (StateId s = 0; s < f.num_states(); ++s) row[s].set(s);
  return {row};
}

FHModel four_worlds() {
  FHModel k;
  k.vocabulary = pq();
  k.vocab = kPQ;
  k.worlds = {"pq", "pnq", "npq", "npnq"};
  k.valuation = {WorldSet(4), WorldSet(4)};
  k.valuation[0].set(0).set(1);
  k.valuation[1].set(0).set(2);
  k.awareness = {std::vector<AtomSet>(4, kP)};
  return k;
}

}  // namespace

HMSModel unaware_q_model() {
  HMSModel m = base_model();
  const HMSFrame& f = m.frame;
  m.pi = pi_knows_p(f);
  std::vector<StateSet> row(f.num_states(), f.empty_set());
  for (const char* s : {"pq", "pnq"}) row[f.state(s)] = set_of(f, {"pq", "pnq"});
  for (const char* s : {"npq", "npnq"}) row[f.state(s)] = set_of(f, {"npq", "npnq"});
  for (const char* s : {"q", "nq"}) row[f.state(s)] = set_of(f, {"q", "nq"});
  for (const char* s : {"p", "np", "s_empty"}) row[f.state(s)] = set_of(f, {s});
  m.lambda = Correspondence{row};
  return m;
}

HMSModel implicit_q_model() {
  HMSModel m = base_model();
  m.pi = pi_knows_p(m.frame);
  m.lambda = singletons(m.frame);
  return m;
}

HMSModel implicit_q_ikb_model() {
  HMSModel m = base_model();
  const HMSFrame& f = m.frame;
  m.lambda = singletons(f);
  std::vector<AtomSet> row(f.num_states());
  for (const char* s : {"pq", "pnq", "npq", "npnq", "p", "np"}) row[f.state(s)] = kP;
  m.alpha = AwarenessFn{row};
  return m;
}

HMSModel unaware_q_ikb_model() {
  HMSModel m = unaware_q_model();
  m.pi.reset();
  m.alpha = implicit_q_ikb_model().alpha;
  return m;
}

HMSModel twins_model() {
  const Vocabulary v({"p"});
  FrameBuilder b(v);
  const StateId s = b.add_state("s_empty", {});
  const StateId a = b.add_state("a", kP);
  const StateId bb = b.add_state("b", kP);
  b.set_projection(a, {}, s);
  b.set_projection(bb, {}, s);
  HMSModel m;
  m.frame = b.build();
  const HMSFrame& f = m.frame;
  m.valuation = {make_event(f, kP, set_of(f, {"a"}))};
  m.lambda = singletons(f);
  m.pi = Correspondence{std::vector<StateSet>(f.num_states(), set_of(f, {"s_empty"}))};
  return m;
}

FHModel unaware_q_fh() {
  FHModel k = four_worlds();
  k.relations = {{{0, 1}, {2, 3}}};
  return k;
}

FHModel implicit_q_fh() {
  FHModel k = four_worlds();
  k.relations = {{{0}, {1}, {2}, {3}}};
  return k;
}

}  // namespace uakit
