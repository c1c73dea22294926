#include <gtest/gtest.h>

#include "support.hpp"
#include "uakit/harness.hpp"
#include "uakit/hms.hpp"
#include "uakit/samples.hpp"
#include "uakit/semantics.hpp"
#include "uakit/transforms.hpp"

namespace uakit {
namespace {

using test::states;

constexpr AtomSet kP = AtomSet::single(0);
constexpr AtomSet kQ = AtomSet::single(1);
constexpr AtomSet kPQ = AtomSet::from_bits(0b11);

std::vector<HMSModel> corpus() {
  std::vector<HMSModel> out{unaware_q_model(), implicit_q_model(), twins_model()};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const GenParams p{1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2)};
    out.push_back(gen_hms(p, seed, seed % 2 ? GenStrategy::Direct : GenStrategy::ViaTransform).model);
  }
  return out;
}

TEST(Frame, Projections) {
  const HMSFrame& f = unaware_q_model().frame;
  const StateId pq = f.state("pq");
  EXPECT_EQ(f.project(pq, kPQ), pq);
  EXPECT_EQ(f.project(pq, kP), f.state("p"));
  EXPECT_EQ(f.project(f.state("npnq"), kQ), f.state("nq"));
  EXPECT_THROW(f.project(f.state("p"), kQ), std::invalid_argument);
  // Both orders of dropping atoms reach the same state of S_empty.
  for (StateId s : f.space(kPQ)) {
    EXPECT_EQ(f.project(f.project(s, kP), {}), f.project(f.project(s, kQ), {}));
    EXPECT_EQ(f.project(s, {}), f.state("s_empty"));
  }
}

TEST(Frame, UpClosureMatchesDefinition) {
  for (const HMSModel& m : corpus()) {
    const HMSFrame& f = m.frame;
    std::mt19937_64 rng(f.num_states());
    for (int n = 0; n < 50; ++n) {
      StateSet x = f.empty_set();
      for (StateId s = 0; s < f.num_states(); ++s)
        if (rng() % 3 == 0) x.set(s);
      ASSERT_EQ(f.up(x), test::naive_up(f, x));
    }
  }
}

TEST(Frame, BuilderRejectsMissingProjection) {
  FrameBuilder b(Vocabulary({"p"}));
  b.add_state("e", {});
  b.add_state("a", kP);
  EXPECT_THROW(b.build(), ModelError);
  FrameBuilder dup(Vocabulary({"p"}));
  dup.add_state("e", {});
  dup.add_state("e", {});
  EXPECT_THROW(dup.build(), ModelError);
}

TEST(Events, Counts) {
  EXPECT_EQ(enumerate_events(unaware_q_model().frame).size(), 26u);
  FrameBuilder b(Vocabulary{});
  b.add_state("*", {});
  const HMSFrame one = b.build();
  const auto es = enumerate_events(one);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(es[0].ext.count() + es[1].ext.count(), 1u);
  // 2^n events on a space with n states.
  const HMSFrame& f = twins_model().frame;
  std::size_t on_p = 0;
  for (const Event& e : enumerate_events(f)) on_p += e.space == kP;
  EXPECT_EQ(on_p, 4u);
}

TEST(Events, UpClosureOfBase) {
  const HMSFrame& f = unaware_q_model().frame;
  EXPECT_EQ(make_event(f, kP, states(f, {"p"})).ext, states(f, {"p", "pq", "pnq"}));
  EXPECT_EQ(full_event(f, {}).ext.count(), static_cast<std::size_t>(f.num_states()));
  EXPECT_TRUE(empty_event(f, kPQ).ext.none());
  EXPECT_THROW(make_event(f, kP, states(f, {"q"})), std::invalid_argument);
}

TEST(Events, Algebra) {
  const HMSFrame& f = unaware_q_model().frame;
  const Event p = make_event(f, kP, states(f, {"p"}));
  const Event q = make_event(f, kQ, states(f, {"q"}));
  EXPECT_EQ(event_intersect(f, p, q), make_event(f, kPQ, states(f, {"pq"})));
  const Event excluded_middle = event_union(f, p, event_negate(f, p));
  EXPECT_EQ(excluded_middle.ext, full_event(f, kP).ext);
  EXPECT_NE(excluded_middle.ext, omega(f).ext);
  EXPECT_EQ(event_negate(f, event_negate(f, q)), q);
}

// Properties over every pair of events of each corpus frame, checked
// against set operations on extensions.
TEST(Events, SetSemantics) {
  for (const HMSModel& m : corpus()) {
    const HMSFrame& f = m.frame;
    const auto es = enumerate_events(f);
    if (es.size() > 300) continue;
    for (const Event& a : es) {
      ASSERT_EQ(event_negate(f, event_negate(f, a)), a);
      const Event na = event_negate(f, a);
      ASSERT_EQ(na.space, a.space);
      ASSERT_TRUE((na.ext & a.ext).none());
      ASSERT_EQ(na.ext | a.ext, full_event(f, a.space).ext);
      for (const Event& b : es) {
        const Event i = event_intersect(f, a, b);
        ASSERT_EQ(i.space, a.space | b.space);
        ASSERT_EQ(i.ext, a.ext & b.ext);
        const Event u = event_union(f, a, b);
        ASSERT_EQ(u.ext, (a.ext | b.ext) & full_event(f, a.space | b.space).ext);
      }
    }
  }
}

TEST(Events, FromSet) {
  const HMSFrame& f = unaware_q_model().frame;
  const Event p = make_event(f, kP, states(f, {"p"}));
  EXPECT_EQ(event_from_set(f, p.ext, {}), p);
  EXPECT_FALSE(event_from_set(f, states(f, {"p", "q"}), {}).has_value());
  EXPECT_EQ(event_from_set(f, f.empty_set(), kQ), empty_event(f, kQ));
}

// Naive operator definitions, read directly off the correspondences.
StateSet naive(const HMSModel& m, Op op, int i, const Event& e) {
  const HMSFrame& f = m.frame;
  StateSet out = f.empty_set();
  auto space_of_set = [&](const StateSet& x) { return f.space_of(static_cast<StateId>(x.find_first())); };
  for (StateId s = 0; s < f.num_states(); ++s) {
    bool in = false;
    switch (op) {
      case Op::K: in = (*m.pi)[i][s].is_subset_of(e.ext); break;
      case Op::A: in = e.space.subset_of(space_of_set((*m.pi)[i][s])); break;
      case Op::L: in = (*m.lambda)[i][s].is_subset_of(e.ext); break;
      default: in = e.space.subset_of((*m.alpha)[i][s]);
    }
    if (in) out.set(s);
  }
  return out;
}

TEST(Operators, MatchDefinitions) {
  for (const HMSModel& m : corpus()) {
    HMSOperators ops(m);
    const auto es = enumerate_events(m.frame);
    for (int i = 0; i < m.agents; ++i)
      for (const Event& e : es) {
        const Event k = ops.K(i, e);
        ASSERT_EQ(k.space, e.space);
        ASSERT_EQ(k.ext, naive(m, Op::K, i, e));
        ASSERT_EQ(ops.A(i, e).ext, naive(m, Op::A, i, e));
        ASSERT_EQ(ops.U(i, e), ops.neg(ops.A(i, e)));
        ASSERT_EQ(ops.L(i, e).ext, naive(m, Op::L, i, e));
      }
  }
}

TEST(Operators, UnawareSample) {
  const HMSModel m = unaware_q_model();
  const HMSFrame& f = m.frame;
  const StateId pq = f.state("pq");
  const Event p = m.valuation[0];
  const Event q = m.valuation[1];
  EXPECT_TRUE(k_op(m, 0, p).ext.test(pq));
  EXPECT_TRUE(u_op(m, 0, q).ext.test(pq));
  EXPECT_EQ(k_op(m, 0, omega(f)), omega(f));
  EXPECT_EQ(k_op(m, 0, u_op(m, 0, q)), empty_event(f, kQ));
  // Blockwise oracle for L: no block of S_{p,q} lies inside [q].
  StateSet top_l = l_op(m, 0, q).ext & f.space_set(kPQ);
  EXPECT_TRUE(top_l.none());
  EXPECT_THROW(a_star_op(m, 0, q), ModelError);
}

TEST(Operators, ImplicitSample) {
  const HMSModel m = implicit_q_model();
  const StateId pq = m.frame.state("pq");
  EXPECT_TRUE(l_op(m, 0, m.valuation[1]).ext.test(pq));
  EXPECT_TRUE(u_op(m, 0, m.valuation[1]).ext.test(pq));
  for (AtomSet phi : kPQ.subsets()) EXPECT_EQ(l_op(m, 0, full_event(m.frame, phi)), full_event(m.frame, phi));
}

TEST(Operators, AStar) {
  const HMSModel m = implicit_q_ikb_model();
  const HMSFrame& f = m.frame;
  EXPECT_EQ(a_star_op(m, 0, omega(f)), omega(f));
  EXPECT_FALSE(a_star_op(m, 0, m.valuation[1]).ext.test(f.state("pq")));
  const HMSModel derived = with_pi_star(m);
  for (const Event& e : enumerate_events(f)) EXPECT_EQ(a_star_op(m, 0, e), a_op(derived, 0, e));
}

TEST(Validators, Samples) {
  EXPECT_TRUE(validate_hms(unaware_q_model()).ok());
  EXPECT_TRUE(validate_hms(implicit_q_model()).ok());
  EXPECT_TRUE(validate_hms(implicit_q_ikb_model()).ok());
  EXPECT_TRUE(validate_hms(twins_model()).ok());
  EXPECT_EQ(unaware_q_model().kind(), ModelKind::Complemented);
  EXPECT_EQ(implicit_q_ikb_model().kind(), ModelKind::ImplicitKnowledgeBased);
}

TEST(Validators, ClauseLists) {
  EXPECT_EQ(alpha_clauses().size(), 5u);
  EXPECT_GE(pi_clauses().size(), 5u);
  EXPECT_GE(lambda_clauses().size(), 5u);
}

// Partitional pi on a frame with a single space reduces to an S5 check.
TEST(Validators, SingleSpacePartition) {
  FrameBuilder b(Vocabulary{});
  for (const char* n : {"a", "b", "c"}) b.add_state(n, {});
  HMSModel m;
  m.frame = b.build();
  const HMSFrame& f = m.frame;
  m.pi = Correspondence{{states(f, {"a", "b"}), states(f, {"a", "b"}), states(f, {"c"})}};
  m.lambda = m.pi;
  EXPECT_TRUE(validate_hms(m).ok());
  (*m.pi)[0][1] = states(f, {"b"});
  EXPECT_TRUE(validate_pi(m).fired("pi.stationarity"));
}

TEST(Validators, LambdaSplittingBlockBreaksPpik) {
  // Top blocks are singletons but the S_{p} projection keeps {p, np}.
  HMSModel m = implicit_q_model();
  const HMSFrame& f = m.frame;
  (*m.lambda)[0][f.state("p")] = states(f, {"p", "np"});
  (*m.lambda)[0][f.state("np")] = states(f, {"p", "np"});
  EXPECT_TRUE(validate_lambda(m).fired("lambda.ppik"));
}

TEST(Validators, AlphaExamples) {
  HMSModel m = implicit_q_ikb_model();
  const HMSFrame& f = m.frame;
  for (StateId s = 0; s < f.num_states(); ++s) (*m.alpha)[0][s] = f.space_of(s);
  EXPECT_TRUE(validate_alpha(m).ok());
  const HMSModel full = with_pi_star(m);
  EXPECT_EQ(*full.pi, *m.lambda);

  HMSModel bad = implicit_q_ikb_model();
  (*bad.alpha)[0][f.state("pq")] = kQ;
  (*bad.alpha)[0][f.state("q")] = kP;
  EXPECT_TRUE(validate_alpha(bad).fired("alpha.II"));
}

TEST(Validators, CoherenceWitnessWhenLambdaCoarserThanPi) {
  HMSModel m = unaware_q_model();
  const HMSFrame& f = m.frame;
  const StateSet top = f.space_set(kPQ);
  for (StateId s : f.space(kPQ)) (*m.lambda)[0][s] = top;
  const ValidationReport r = validate_lambda(m);
  EXPECT_TRUE(r.fired("lambda.coherence"));
  const PropertyReport pr = property_suite(m);
  EXPECT_FALSE(pr.ok());
  bool witnessed = false;
  for (const auto& res : pr.results)
    witnessed = witnessed || (res.name == "lambda.coherence" && res.failures > 0 && !res.witnesses.empty());
  EXPECT_TRUE(witnessed) << pr.to_string();
}

TEST(Validators, ValuationWarning) {
  HMSModel m = unaware_q_model();
  m.valuation[1] = make_event(m.frame, kPQ, states(m.frame, {"pq", "npq"}));
  const ValidationReport r = validate_valuation(m);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.findings().empty());
}

TEST(PiStar, ImplicitSample) {
  const HMSModel m = implicit_q_ikb_model();
  const Correspondence ps = derive_pi_star(m);
  const HMSFrame& f = m.frame;
  EXPECT_EQ(ps[0][f.state("pq")], states(f, {"p"}));
  EXPECT_TRUE(audit_pi_star(m, ps).ok());
  HMSModel with = with_pi_star(m);
  EXPECT_TRUE(validate_pi(with).ok());
}

TEST(PiStar, IllDefinedProjectionIsReported) {
  // Lambda at p no longer matches the projection of the top singletons.
  HMSModel m = implicit_q_ikb_model();
  const HMSFrame& f = m.frame;
  (*m.lambda)[0][f.state("p")] = states(f, {"p", "np"});
  (*m.lambda)[0][f.state("np")] = states(f, {"p", "np"});
  EXPECT_THROW(derive_pi_star(m), ModelError);
}

TEST(Semantics, SampleValues) {
  const HMSModel left = unaware_q_model();
  const HMSModel right = implicit_q_model();
  const Vocabulary& v = left.frame.vocabulary();
  const StateId pq = left.frame.state("pq");
  auto sat = [&](const HMSModel& m, const char* f) { return hms_sat(m, pq, parse_formula(f, v)); };
  EXPECT_TRUE(sat(left, "K1 p"));
  EXPECT_TRUE(sat(left, "~A1 q"));
  EXPECT_FALSE(sat(left, "L1 q"));
  EXPECT_TRUE(sat(right, "K1 p"));
  EXPECT_TRUE(sat(right, "L1 q"));
  EXPECT_FALSE(sat(right, "A1 q"));
  EXPECT_FALSE(sat(right, "K1 q"));
}

TEST(Semantics, Definedness) {
  const HMSModel m = unaware_q_model();
  const HMSFrame& f = m.frame;
  const Vocabulary& v = f.vocabulary();
  EXPECT_FALSE(defined_at(m, f.state("s_empty"), parse_formula("p", v)));
  EXPECT_TRUE(defined_at(m, f.state("pnq"), parse_formula("p", v)));
  EXPECT_TRUE(hms_sat(m, f.state("pq"), parse_formula("p", v)));
  EXPECT_FALSE(defined_at(m, f.state("q"), parse_formula("K1 p", v)));
  EXPECT_THROW(hms_sat(m, f.state("s_empty"), parse_formula("p", v)), UndefinedFormula);
  EXPECT_EQ(extension(m, Formula::top()), omega(f));
}

TEST(Semantics, Validity) {
  const HMSModel left = unaware_q_model();
  const Vocabulary& v = left.frame.vocabulary();
  EXPECT_TRUE(valid_in(left, Formula::top()));
  EXPECT_TRUE(valid_in(left, parse_formula("A1 p", v)));
  EXPECT_FALSE(valid_in(left, parse_formula("A1 q", v)));
  for (const HMSModel& m : corpus()) EXPECT_TRUE(valid_in(m, parse_formula("L1 p -> p", m.frame.vocabulary())));
}

TEST(Semantics, KnowledgeIsImplicitAndAware) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HMSModel m = gen_hms({2, 3, 1}, seed, GenStrategy::ViaTransform).model;
    const Vocabulary& v = m.frame.vocabulary();
    ASSERT_EQ(extension(m, parse_formula("K1 q", v)), extension(m, parse_formula("L1 q & A1 q", v))) << seed;
  }
}

TEST(Semantics, IkbModelsReadThroughLambdaAndAlpha) {
  const HMSModel m = implicit_q_ikb_model();
  const Vocabulary& v = m.frame.vocabulary();
  const StateId pq = m.frame.state("pq");
  EXPECT_TRUE(hms_sat(m, pq, parse_formula("K1 p", v)));
  EXPECT_FALSE(hms_sat(m, pq, parse_formula("A1 q", v)));
}

}  // namespace
}  // namespace uakit
