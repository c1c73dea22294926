#include <gtest/gtest.h>

#include "support.hpp"
#include "uakit/category.hpp"
#include "uakit/equivalence.hpp"
#include "uakit/fh.hpp"
#include "uakit/harness.hpp"
#include "uakit/samples.hpp"

namespace uakit {
namespace {

const Vocabulary kPQ({"p", "q"});
constexpr AtomSet kP = AtomSet::single(0);
constexpr AtomSet kQ = AtomSet::single(1);

FHModel one_world(bool p_true, AtomSet aware) {
  FHModel k;
  k.vocabulary = Vocabulary({"p"});
  k.vocab = kP;
  k.worlds = {"w"};
  k.relations = {{{0}}};
  k.awareness = {{aware}};
  k.valuation = {WorldSet(1, p_true ? 1 : 0)};
  return k;
}

// Two worlds that differ only in q, same awareness.
FHModel q_twins() {
  FHModel k;
  k.vocabulary = kPQ;
  k.vocab = kPQ.all();
  k.worlds = {"a", "b"};
  k.relations = {{{0, 1}}};
  k.awareness = {{kP, kP}};
  k.valuation = {WorldSet(2, 0b11), WorldSet(2, 0b01)};
  return k;
}

TEST(FHValidate, SingleWorld) { EXPECT_TRUE(validate_fh(one_world(true, kP)).ok()); }

TEST(FHValidate, AwarenessConstancy) {
  FHModel k = q_twins();
  k.awareness[0][1] = kPQ.all();
  const ValidationReport r = validate_fh(k);
  EXPECT_TRUE(r.fired("fh.awareness_constancy"));
  EXPECT_EQ(r.failed_clauses().size(), 1u);
}

TEST(FHValidate, Partition) {
  FHModel k = q_twins();
  k.relations = {{{0}, {0, 1}}};
  EXPECT_TRUE(validate_fh(k).fired("fh.partition"));
  k.relations = {{{0}}};
  EXPECT_TRUE(validate_fh(k).fired("fh.partition"));
  EXPECT_THROW(FHChecker{k}, ModelError);
}

TEST(FHValidate, GeneratedModels) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GenParams p{1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 2)};
    ASSERT_TRUE(validate_fh(gen_fh(p, seed)).ok()) << seed;
  }
}

TEST(FHSemantics, AwContains) {
  const FHModel k = one_world(true, kP);
  const Vocabulary& v = k.vocabulary;
  EXPECT_TRUE(aw_contains(k, 0, 0, parse_formula("p & ~p", v)));
  EXPECT_TRUE(aw_contains(one_world(true, {}), 0, 0, Formula::top()));
  FHModel two = q_twins();
  EXPECT_FALSE(aw_contains(two, 0, 0, parse_formula("q", kPQ)));
  EXPECT_THROW(aw_contains(two, 1, 0, Formula::top()), std::out_of_range);
}

TEST(FHSemantics, ImplicitWithoutAwareness) {
  const Vocabulary v({"p"});
  EXPECT_TRUE(fh_sat(one_world(true, kP), 0, parse_formula("L1 p", v)));
  const FHModel blind = one_world(true, {});
  EXPECT_TRUE(fh_sat(blind, 0, parse_formula("L1 p", v)));
  EXPECT_FALSE(fh_sat(blind, 0, parse_formula("K1 p", v)));
}

TEST(FHSemantics, ImplicitQSample) {
  const FHModel k = unaware_q_fh();
  const FHModel r = implicit_q_fh();
  const int pq = r.world("pq");
  EXPECT_TRUE(fh_sat(r, pq, parse_formula("K1 p", kPQ)));
  EXPECT_TRUE(fh_sat(r, pq, parse_formula("L1 q", kPQ)));
  EXPECT_FALSE(fh_sat(r, pq, parse_formula("K1 q", kPQ)));
  EXPECT_FALSE(fh_sat(k, k.world("pq"), parse_formula("L1 q", kPQ)));
}

TEST(FHSemantics, KIsLAndA) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FHModel k = gen_fh({2, 3, 2}, seed);
    FHChecker c(k);
    for (const auto& f : enumerate_formulas(kPQ.all(), 2, 1)) {
      for (int i = 0; i < 2; ++i)
        ASSERT_EQ(c.extension(Formula::K(i, f)), c.extension(Formula::conj(Formula::L(i, f), Formula::A(i, f))));
    }
  }
}

TEST(FHSemantics, RejectsForeignFormulas) {
  FHChecker c(one_world(true, kP));
  EXPECT_THROW(c.extension(parse_formula("q", kPQ)), std::invalid_argument);
  EXPECT_THROW(c.extension(parse_formula("L2 p", kPQ)), std::invalid_argument);
}

TEST(FHEquivalence, SelfAndCorrupted) {
  const FHModel k = gen_fh({2, 3, 1}, 5);
  std::vector<std::pair<int, int>> id;
  for (int w = 0; w < k.num_worlds(); ++w) id.emplace_back(w, w);
  EXPECT_TRUE(fh_modally_equivalent(k, k, id, 3).ok());
  FHModel bad = k;
  bad.valuation[0].flip(0);
  const EquivalenceReport r = fh_modally_equivalent(k, bad, id, 3);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.witnesses.front().formula.atoms(), kP);
}

TEST(Restrict, CopyOfFullVocabulary) {
  const FHModel k = unaware_q_fh();
  const Restriction r = restrict_model(k, k.vocab, RestrictMode::Copy);
  EXPECT_EQ(r.model.num_worlds(), k.num_worlds());
  for (int w = 0; w < k.num_worlds(); ++w) EXPECT_EQ(r.morphism[w], w);
  EXPECT_TRUE(validate_bounded_morphism(k, r.model, r.morphism).ok());
}

TEST(Restrict, EmptyVocabulary) {
  const Restriction r = restrict_model(one_world(true, kP), {}, RestrictMode::Copy);
  EXPECT_EQ(r.model.num_worlds(), 1);
  EXPECT_TRUE(r.model.vocab.empty());
  EXPECT_TRUE(r.model.awareness[0][0].empty());
  EXPECT_TRUE(r.model.valuation[0].none());
}

TEST(Restrict, QuotientMergesWorldsDifferingOutside) {
  const FHModel k = q_twins();
  const Restriction r = restrict_model(k, kP, RestrictMode::Quotient);
  EXPECT_EQ(r.model.num_worlds(), 1);
  EXPECT_TRUE(validate_bounded_morphism(k, r.model, r.morphism).ok());
  // Oracle: the depth-3 formulas over {p} agree on both worlds.
  FHChecker c(k);
  for (const auto& f : enumerate_formulas(kP, 1, 2)) EXPECT_EQ(c.sat(0, f), c.sat(1, f));
}

// Oracle for bisimulation_classes: worlds share a class iff they agree on
// every formula over phi up to depth 3.
TEST(Restrict, BisimulationClassesMatchFormulas) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FHModel k = gen_fh({2, 4, 1}, seed);
    FHChecker c(k);
    for (AtomSet phi : k.vocab.subsets()) {
      const auto cls = bisimulation_classes(k, phi);
      const auto fs = enumerate_formulas(phi, 1, 2);
      for (int a = 0; a < k.num_worlds(); ++a)
        for (int b = 0; b < k.num_worlds(); ++b) {
          bool same = true;
          for (const auto& f : fs) same = same && c.sat(a, f) == c.sat(b, f);
          ASSERT_EQ(cls[a] == cls[b], same) << "seed " << seed << " phi " << phi.bits();
        }
    }
  }
}

TEST(Morphism, Violations) {
  const FHModel k = q_twins();
  const Restriction r = restrict_model(k, kPQ.all(), RestrictMode::Copy);
  EXPECT_TRUE(validate_bounded_morphism(k, k, {0, 1}).ok());
  EXPECT_TRUE(validate_bounded_morphism(k, r.model, {0, 0}).fired("morphism.surjectivity"));
  // Collapsing a and b onto a K_{p,q} world breaks harmony on q.
  FHModel target = k;
  target.worlds = {"a"};
  target.relations = {{{0}}};
  target.awareness = {{kP}};
  target.valuation = {WorldSet(1, 1), WorldSet(1, 1)};
  EXPECT_TRUE(validate_bounded_morphism(k, target, {0, 0}).fired("morphism.atomic_harmony"));
  FHModel aware = r.model;
  aware.awareness[0] = {kPQ.all(), kPQ.all()};
  EXPECT_TRUE(validate_bounded_morphism(k, aware, {0, 1}).fired("morphism.awareness_consistency"));
}

TEST(Category, Shape) {
  const FHCategory one = build_category(one_world(true, kP), RestrictMode::Copy);
  EXPECT_EQ(one.models.size(), 2u);
  EXPECT_EQ(one.morphisms.size(), 3u);
  const FHCategory two = build_category(unaware_q_fh(), RestrictMode::Copy);
  EXPECT_EQ(two.models.size(), 4u);
  const WorldMap& direct = two.morphism(kPQ.all(), {});
  const WorldMap& a = two.morphism(kPQ.all(), kP);
  const WorldMap& b = two.morphism(kP, {});
  for (int w = 0; w < 4; ++w) EXPECT_EQ(direct[w], b[a[w]]);
}

TEST(Category, ValidInBothModes) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FHModel k = gen_fh({static_cast<int>(seed % 3) + 1, 3, 1 + static_cast<int>(seed % 2)}, seed);
    for (RestrictMode m : {RestrictMode::Copy, RestrictMode::Quotient}) {
      const FHCategory c = build_category(k, m);
      ASSERT_TRUE(validate_category(c).ok()) << seed;
      ASSERT_TRUE(check_category_equivalence(c, 2).ok()) << seed;
    }
  }
}

TEST(Category, RepointedMorphismBreaksCommutation) {
  FHCategory c = build_category(gen_fh({2, 3, 1}, 3), RestrictMode::Copy);
  auto& f = c.morphisms.at({kPQ.all(), {}});
  ASSERT_GE(c.model({}).num_worlds(), 1);
  // Copy mode keeps every world, so two targets exist to swap between.
  std::swap(f[0], f[1]);
  EXPECT_FALSE(validate_category(c).ok());
}

TEST(Category, CorruptedAwarenessIsWitnessed) {
  FHCategory c = build_category(unaware_q_fh(), RestrictMode::Copy);
  FHModel& kp = c.models.at(kP);
  for (auto& aw : kp.awareness[0]) aw = aw.empty() ? kP : AtomSet{};
  const EquivalenceReport r = check_category_equivalence(c, 2);
  ASSERT_FALSE(r.ok());
}

TEST(Category, NoAtoms) {
  FHModel k;
  k.worlds = {"w"};
  k.relations = {{{0}}};
  k.awareness = {{AtomSet{}}};
  const FHCategory c = build_category(k, RestrictMode::Quotient);
  EXPECT_EQ(c.models.size(), 1u);
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_TRUE(check_category_equivalence(c, 3).ok());
}

TEST(Category, RejectsInvalidBase) {
  FHModel k = q_twins();
  k.awareness[0][1] = kQ;
  EXPECT_THROW(build_category(k, RestrictMode::Copy), std::invalid_argument);
}

}  // namespace
}  // namespace uakit
