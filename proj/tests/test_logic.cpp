#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "uakit/countermodel.hpp"
#include "uakit/harness.hpp"
#include "uakit/io.hpp"
#include "uakit/logic.hpp"
#include "uakit/samples.hpp"
#include "uakit/semantics.hpp"

namespace uakit {
namespace {

const Vocabulary kPQ({"p", "q"});

Formula f(const char* text) { return parse_formula(text, kPQ); }

TEST(Table, Entries) {
  const auto& t = table_entries();
  EXPECT_EQ(t.size(), 15u);
  EXPECT_EQ(t.front().kind, EntryKind::Tautologies);
  EXPECT_EQ(axiom_schemas().size(), 12u);
  EXPECT_EQ(parse_schema("A12"), Schema::A12);
  EXPECT_FALSE(parse_schema("A6").has_value());
}

TEST(Instantiate, Examples) {
  const Substitution sp{Formula::atom(0), std::nullopt, 0, 0};
  EXPECT_EQ(instantiate(Schema::T, sp), f("L1 p -> p"));
  EXPECT_EQ(instantiate(Schema::A2, sp), f("A1 ~p <-> A1 p"));
  EXPECT_EQ(instantiate(Schema::EK, sp), f("K1 p <-> (L1 p & A1 p)"));
  EXPECT_THROW(instantiate(Schema::K, sp), std::invalid_argument);
  EXPECT_THROW(instantiate(Schema::T, Substitution{}), std::invalid_argument);
}

TEST(Instantiate, CountsPerSchema) {
  const std::vector<Formula> pool{Formula::atom(0)};
  std::size_t a5 = 0;
  for (const auto& inst : instantiate_axioms(pool, 2)) a5 += inst.schema == Schema::A5;
  EXPECT_EQ(a5, 4u);
  EXPECT_THROW(instantiate_axioms({}, 1), std::invalid_argument);
}

TEST(Tautology, Shapes) {
  EXPECT_TRUE(is_tautology_instance(f("p | ~p")));
  EXPECT_TRUE(is_tautology_instance(f("L1 p | ~L1 p")));
  EXPECT_FALSE(is_tautology_instance(f("L1 p")));
  EXPECT_FALSE(is_tautology_instance(f("L1 p -> p")));
  for (const auto& t : tautology_templates(f("A1 p"), f("K2 q"))) EXPECT_TRUE(is_tautology_instance(t));
}

// Oracle: a formula is a tautology iff its truth table over letters is all
// true; checked against brute force on random propositional formulas.
TEST(Tautology, MatchesTruthTables) {
  std::mt19937_64 rng(3);
  const Vocabulary v({"p", "q", "r"});
  for (int n = 0; n < 500; ++n) {
    Formula g = test::random_formula(rng, 3, 1, 4);
    // Keep the propositional skeleton only.
    std::function<Formula(const Formula&)> strip = [&](const Formula& x) -> Formula {
      switch (x.op()) {
        case Op::Top:
        case Op::Atom: return x;
        case Op::Not: return Formula::neg(strip(x.sub()));
        case Op::And: return Formula::conj(strip(x.lhs()), strip(x.rhs()));
        default: return strip(x.sub());
      }
    };
    g = strip(g);
    std::function<bool(const Formula&, int)> eval = [&](const Formula& x, int row) -> bool {
      switch (x.op()) {
        case Op::Top: return true;
        case Op::Atom: return (row >> x.index()) & 1;
        case Op::Not: return !eval(x.sub(), row);
        default: return eval(x.lhs(), row) && eval(x.rhs(), row);
      }
    };
    bool all = true;
    for (int row = 0; row < 8; ++row) all = all && eval(g, row);
    ASSERT_EQ(is_tautology_instance(g), all) << print_formula(g, v);
  }
}

Proof load(const std::string& name) { return proof_from_json(read_json_file(test::fixture(name))); }

TEST(Proof, ValidFixture) {
  const Proof p = load("proof-valid.json");
  const ProofCheck c = check_proof(p);
  EXPECT_TRUE(c.ok());
  EXPECT_TRUE(c.diagnostics.empty());
  EXPECT_EQ(proof_from_json(proof_to_json(p)).lines.size(), p.lines.size());
}

TEST(Proof, BrokenFixture) {
  const ProofCheck c = check_proof(load("proof-broken.json"));
  EXPECT_FALSE(c.ok());
  EXPECT_EQ(c.line_ok, (std::vector<bool>{false, false, false}));
  EXPECT_EQ(c.diagnostics.size(), 3u);
}

TEST(Proof, KnowledgeImpliesImplicitKnowledge) {
  const nlohmann::json doc = {
      {"lines",
       {{{"formula", "K1 p <-> (L1 p & A1 p)"}, {"by", {{"schema", "EK"}, {"subst", {{"phi", "p"}, {"i", 1}}}}}},
        {{"formula", "(K1 p <-> (L1 p & A1 p)) -> (K1 p -> L1 p)"}, {"by", {{"schema", "PL"}}}},
        {{"formula", "K1 p -> L1 p"}, {"by", {{"mp", {0, 1}}}}}}}};
  EXPECT_TRUE(check_proof(proof_from_json(doc)).ok());
}

TEST(Proof, MismatchedModusPonens) {
  const nlohmann::json doc = {
      {"lines",
       {{{"formula", "L1 p -> p"}, {"by", {{"schema", "T"}, {"subst", {{"phi", "p"}, {"i", 1}}}}}},
        {{"formula", "L1 q"}, {"by", {{"schema", "PL"}}}},
        {{"formula", "p"}, {"by", {{"mp", {1, 0}}}}}}}};
  const ProofCheck c = check_proof(proof_from_json(doc));
  EXPECT_TRUE(c.line_ok[0]);
  EXPECT_FALSE(c.line_ok[2]);
}

TEST(Proof, MalformedInput) {
  EXPECT_THROW(proof_from_json(nlohmann::json::object()), std::invalid_argument);
  const nlohmann::json bad_agent = {{"lines", {{{"formula", "p"}, {"by", {{"kinf", {{"line", 0}, {"agent", 0}}}}}}}}};
  EXPECT_THROW(proof_from_json(bad_agent), std::invalid_argument);
  const nlohmann::json bad_schema = {{"lines", {{{"formula", "p"}, {"by", {{"schema", "Z"}}}}}}};
  EXPECT_THROW(proof_from_json(bad_schema), std::invalid_argument);
}

TEST(Soundness, Samples) {
  const auto pool = enumerate_formulas(kPQ.all(), 1, 1);
  for (const HMSModel& m : {unaware_q_model(), implicit_q_model(), implicit_q_ikb_model()}) {
    const SoundnessReport r = soundness_suite(m, pool, 1);
    EXPECT_TRUE(r.ok()) << r.to_string(kPQ);
    EXPECT_GT(r.instances, 0u);
    EXPECT_EQ(r.pool, pool.size());
  }
  const SoundnessReport c = soundness_suite(build_category(unaware_q_fh(), RestrictMode::Copy), pool, 1);
  EXPECT_TRUE(c.ok());
}

TEST(Soundness, BrokenStationarityFailsSchemaFive) {
  // One agent, states a, b on a single space: a sees {a, b}, b sees {b}.
  FrameBuilder b(Vocabulary({"p"}));
  b.add_state("e", {});
  const StateId a = b.add_state("a", AtomSet::single(0));
  const StateId s = b.add_state("b", AtomSet::single(0));
  b.set_projection(a, {}, 0);
  b.set_projection(s, {}, 0);
  HMSModel m;
  m.frame = b.build();
  const HMSFrame& fr = m.frame;
  m.valuation = {make_event(fr, AtomSet::single(0), test::states(fr, {"a"}))};
  m.lambda = Correspondence{{test::states(fr, {"e"}), test::states(fr, {"a", "b"}), test::states(fr, {"b"})}};
  m.pi = m.lambda;
  ASSERT_TRUE(validate_lambda(m).fired("lambda.stationarity"));
  const Vocabulary v({"p"});
  const SoundnessReport r = soundness_suite(m, enumerate_formulas(AtomSet::single(0), 1, 1), 1);
  ASSERT_FALSE(r.ok());
  bool five = false;
  for (const auto& fail : r.failures) five = five || fail.schema == "5";
  EXPECT_TRUE(five) << r.to_string(v);
}

TEST(Soundness, EmptyAwarenessSatisfiesA12) {
  HMSModel m = implicit_q_ikb_model();
  for (auto& row : *m.alpha)
    for (auto& aw : row) aw = {};
  ASSERT_TRUE(validate_alpha(m).ok());
  for (const auto& phi : enumerate_formulas(kPQ.all(), 1, 1))
    EXPECT_TRUE(valid_in(m, instantiate(Schema::A12, {phi, std::nullopt, 0, 0})));
}

// The usual distribution form L(p -> q) -> (Lp -> Lq) is not in the table
// but should still hold wherever both sides are defined.
TEST(Soundness, StandardDistributionHolds) {
  std::vector<HMSModel> ms{unaware_q_model(), implicit_q_model(), implicit_q_ikb_model()};
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    ms.push_back(gen_hms({2, 3, 1 + static_cast<int>(seed % 2)}, seed, GenStrategy::ViaTransform).model);
  const auto pool = enumerate_formulas(kPQ.all(), 1, 1);
  for (const HMSModel& m : ms)
    for (int i = 0; i < m.agents; ++i)
      for (const auto& phi : pool)
        for (const auto& psi : pool) {
          const Formula g = Formula::implies(Formula::L(i, Formula::implies(phi, psi)),
                                             Formula::implies(Formula::L(i, phi), Formula::L(i, psi)));
          ASSERT_TRUE(valid_in(m, g)) << print_formula(g, kPQ);
        }
}

TEST(Countermodel, Examples) {
  const Vocabulary v({"p"});
  EXPECT_FALSE(bounded_countermodel_search(parse_formula("L1 p -> p", v), v, 3, 1, 1).has_value());
  const auto p = bounded_countermodel_search(parse_formula("p", v), v, 3, 1, 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->model.num_worlds(), 1);
  EXPECT_FALSE(p->model.valuation[0].test(p->world));
  const auto a = bounded_countermodel_search(parse_formula("A1 p", v), v, 3, 1, 1);
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->model.awareness[0][a->world].empty());
  // Schema 5 holds in every partition model.
  EXPECT_FALSE(bounded_countermodel_search(parse_formula("~L1 p -> L1 ~L1 p", v), v, 3, 1, 1).has_value());
}

TEST(Countermodel, FoundModelsFalsify) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 60; ++n) {
    const Formula g = test::random_formula(rng, 2, 1, 3);
    const auto cm = bounded_countermodel_search(g, kPQ, 2, 2, 1);
    if (!cm) continue;
    EXPECT_TRUE(validate_fh(cm->model).ok());
    EXPECT_FALSE(fh_sat(cm->model, cm->world, g)) << print_formula(g, kPQ);
  }
}

TEST(Countermodel, Bounds) {
  EXPECT_THROW(bounded_countermodel_search(f("p"), kPQ, kCountermodelMaxWorlds + 1, 1, 1), std::length_error);
  EXPECT_THROW(bounded_countermodel_search(f("p & q"), kPQ, 2, 1, 1), std::length_error);
  EXPECT_THROW(bounded_countermodel_search(f("L2 p"), kPQ, 2, 1, 1), std::invalid_argument);
  EXPECT_GT(countermodel_candidates(2, 1, 1), 0u);
}

}  // namespace
}  // namespace uakit
