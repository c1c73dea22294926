// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "uakit/category.hpp"
#include "uakit/equivalence.hpp"
#include "uakit/harness.hpp"
#include "uakit/io.hpp"
#include "uakit/logic.hpp"
#include "uakit/mutations.hpp"
#include "uakit/semantics.hpp"
#include "uakit/transforms.hpp"

namespace uakit {
namespace {

constexpr double kFixtureBudget = 1.0;
constexpr double kOperatorBudget = 60.0;
constexpr double kDerivationBudget = 60.0;
constexpr double kCategoryBudget = 120.0;
constexpr double kTransformBudget = 180.0;
constexpr double kParserBudget = 10.0;

constexpr int kOperatorModels = 200;
constexpr int kDerivationModels = 200;
constexpr int kCategoryModels = 50;
constexpr int kEquivalenceDepth = 3;
constexpr int kLpaDepth = 2;
constexpr int kParserAsts = 10000;
constexpr int kParserDepth = 4;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}
  void fail(const std::string& why) {
    if (failures_++ < 5) log_ << "    " << why << '\n';
  }
  int failures() const { return failures_; }

 private:
  std::ostringstream& log_;
  int failures_ = 0;
};

GenParams hms_params(int seed) { return {1 + seed % 3, 1 + (seed / 3) % 3, 2}; }
GenStrategy strategy_for(int seed) { return seed % 2 ? GenStrategy::Direct : GenStrategy::ViaTransform; }
GenParams fh_params(int seed) { return {1 + seed % 2, 1 + (seed / 2) % 3, 1 + (seed / 6) % 2}; }

// Models collected for the soundness criterion.
struct Corpus {
  std::vector<HMSModel> hms;
  std::vector<FHCategory> categories;
};

Outcome sample_fixtures() {
  std::ostringstream log;
  Criterion c(log);
  const HMSModel left = hms_from_json(read_json_file(test::fixture("unaware-q.json")));
  const HMSModel right = hms_from_json(read_json_file(test::fixture("implicit-q.json")));
  const struct {
    const HMSModel* m;
    const char* formula;
    bool want;
  } cases[] = {
      {&left, "K1 p", true},   {&left, "~A1 q", true},  {&left, "L1 q", false}, {&right, "K1 p", true},
      {&right, "L1 q", true},  {&right, "A1 q", false}, {&right, "K1 q", false},
  };
  for (const auto& k : cases) {
    const Vocabulary& v = k.m->frame.vocabulary();
    const bool got = hms_sat(*k.m, k.m->frame.state("pq"), parse_formula(k.formula, v));
    if (got != k.want) c.fail(std::string(k.m == &left ? "unaware-q" : "implicit-q") + " at pq: " + k.formula);
  }
  return {c.failures() == 0, std::to_string(std::size(cases)) + " values\n" + log.str()};
}

Outcome operator_algebra(Corpus& corpus) {
  std::ostringstream log;
  Criterion c(log);
  std::size_t instances = 0;
  for (int seed = 0; seed < kOperatorModels; ++seed) {
    const Generated g = gen_hms(hms_params(seed), seed, strategy_for(seed));
    if (g.model.kind() != ModelKind::Complemented) c.fail("seed " + std::to_string(seed) + ": not complemented");
    const PropertyReport r = property_suite(g.model).filter({"knowledge", "awareness", "implicit", "interaction"});
    instances += r.instances();
    for (const auto& res : r.results)
      if (res.failures)
        c.fail("seed " + std::to_string(seed) + ": " + res.name + (res.witnesses.empty() ? "" : " " + res.witnesses[0]));
    corpus.hms.push_back(g.model);
  }
  return {c.failures() == 0, std::to_string(kOperatorModels) + " models, " + std::to_string(instances) + " checks\n" +
                                 log.str()};
}

Outcome derivation_chain(Corpus& corpus) {
  std::ostringstream log;
  Criterion c(log);
  for (int seed = 0; seed < kDerivationModels; ++seed) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    const Generated g = gen_ikb(hms_params(seed), seed, strategy_for(seed));
    try {
      const HMSModel star = with_pi_star(g.model);
      const ValidationReport pi = validate_pi(star);
      for (const auto& clause : pi.failed_clauses()) c.fail(tag + clause);
      const ValidationReport lam = validate_lambda(star);
      for (const char* clause : {"lambda.explicit_measurability", "lambda.implicit_measurability"})
        if (lam.fired(clause)) c.fail(tag + clause);
      const PropertyReport r = property_suite(g.model).filter({"derived"});
      if (r.results.empty()) c.fail(tag + "no derived checks ran");
      for (const auto& res : r.results)
        if (res.failures) c.fail(tag + res.name);
      corpus.hms.push_back(g.model);
      corpus.hms.push_back(star);
    } catch (const std::exception& e) {
      c.fail(tag + e.what());
    }
  }
  return {c.failures() == 0, std::to_string(kDerivationModels) + " models\n" + log.str()};
}

Outcome category_equivalence(Corpus& corpus) {
  std::ostringstream log;
  Criterion c(log);
  std::size_t checks = 0;
  for (int seed = 0; seed < kCategoryModels; ++seed) {
    const FHModel k = gen_fh(fh_params(seed), seed);
    for (RestrictMode mode : {RestrictMode::Copy, RestrictMode::Quotient}) {
      const std::string tag = "seed " + std::to_string(seed) + " " + to_string(mode) + ": ";
      const FHCategory cat = build_category(k, mode);
      const ValidationReport v = validate_category(cat);
      for (const auto& clause : v.failed_clauses()) c.fail(tag + clause);
      const EquivalenceReport e = check_category_equivalence(cat, kEquivalenceDepth);
      checks += e.checks;
      if (!e.ok()) c.fail(tag + e.to_string(cat.vocabulary));
      corpus.categories.push_back(cat);
    }
  }
  return {c.failures() == 0, std::to_string(kCategoryModels) + " models, 2 modes, " + std::to_string(checks) +
                                 " checks\n" + log.str()};
}

Outcome transform_equivalence(Corpus& corpus) {
  std::ostringstream log;
  Criterion c(log);
  for (int seed = 0; seed < kCategoryModels; ++seed) {
    const FHModel k = gen_fh(fh_params(seed), seed);
    const Vocabulary& v = k.vocabulary;
    for (RestrictMode mode : {RestrictMode::Copy, RestrictMode::Quotient}) {
      const std::string tag = "seed " + std::to_string(seed) + " " + to_string(mode) + ": ";
      const auto to_hms = hms_transform(k, mode);
      const EquivalenceReport a = check_fh_hms_equivalence(k, to_hms.model, to_hms.trace, kEquivalenceDepth);
      if (!a.ok()) c.fail(tag + "fh to hms " + a.to_string(v));
      const auto to_fh = fh_transform(to_hms.model);
      const EquivalenceReport b = check_hms_fh_equivalence(to_hms.model, to_fh.model, to_fh.trace, kEquivalenceDepth);
      if (!b.ok()) c.fail(tag + "hms to fh " + b.to_string(v));
      const EquivalenceReport r = check_round_trip(k, mode, kEquivalenceDepth);
      if (!r.ok()) c.fail(tag + "round trip " + r.to_string(v));
      corpus.hms.push_back(to_hms.model);
      corpus.hms.push_back(truncated_hms_transform(k, mode).model);
    }
  }
  return {c.failures() == 0, std::to_string(kCategoryModels) + " models, 2 modes\n" + log.str()};
}

Outcome lpa_soundness(const Corpus& corpus) {
  std::ostringstream log;
  Criterion c(log);
  std::map<std::string, std::size_t> per_entry;
  std::size_t models = 0;
  auto absorb = [&](const SoundnessReport& r, const std::string& tag, const Vocabulary& v) {
    ++models;
    for (const auto& [k, n] : r.per_schema) per_entry[k] += n;
    for (const auto& f : r.failures) c.fail(tag + f.schema + " " + print_formula(f.instance, v) + " " + f.witness);
  };
  for (std::size_t n = 0; n < corpus.hms.size(); ++n) {
    const HMSModel& m = corpus.hms[n];
    const Vocabulary& v = m.frame.vocabulary();
    const auto pool = enumerate_formulas(v.all() & AtomSet::first(2), m.agents, kLpaDepth);
    absorb(soundness_suite(m, pool, m.agents), "hms " + std::to_string(n) + ": ", v);
  }
  for (std::size_t n = 0; n < corpus.categories.size(); ++n) {
    const FHCategory& cat = corpus.categories[n];
    const auto pool = enumerate_formulas(cat.at & AtomSet::first(2), cat.base.agents, kLpaDepth);
    absorb(soundness_suite(cat, pool, cat.base.agents), "category " + std::to_string(n) + ": ", cat.vocabulary);
  }
  for (const auto& entry : table_entries()) {
    const std::string key = entry.kind == EntryKind::Tautologies ? "PL" : entry.tag;
    if (!per_entry.count(key)) c.fail("no instances of " + key);
  }
  std::size_t total = 0;
  for (const auto& [k, n] : per_entry) total += n;
  return {c.failures() == 0, std::to_string(models) + " models, " + std::to_string(table_entries().size()) +
                                 " entries, " + std::to_string(total) + " instances\n" + log.str()};
}

Outcome mutation_sensitivity() {
  std::ostringstream log;
  Criterion c(log);
  int caught = 0;
  const auto& catalog = mutation_catalog();
  for (const Mutation& mu : catalog) {
    const HMSModel m = hms_from_json(read_json_file(test::fixture("mutations/" + mu.clause + ".json")));
    const auto fired = fired_assumptions(m);
    const bool hit = std::find(fired.begin(), fired.end(), mu.clause) != fired.end();
    if (hit && fired == expected_assumptions(mu)) {
      ++caught;
    } else {
      std::string got;
      for (const auto& f : fired) got += " " + f;
      c.fail(mu.clause + ": fired" + got);
    }
  }
  return {caught == static_cast<int>(catalog.size()) && catalog.size() == 15,
          std::to_string(caught) + "/" + std::to_string(catalog.size()) + " caught\n" + log.str()};
}

Outcome parser_round_trip() {
  std::ostringstream log;
  Criterion c(log);
  const Vocabulary v({"p", "q", "r"});
  std::mt19937_64 rng(2024);
  for (int n = 0; n < kParserAsts; ++n) {
    const Formula f = test::random_formula(rng, 3, 2, kParserDepth);
    const std::string once = print_formula(f, v);
    const Formula back = parse_formula(once, v);
    const std::string twice = print_formula(back, v);
    if (!(back == f) || twice != once) c.fail(once + " -> " + twice);
  }
  return {c.failures() == 0, std::to_string(kParserAsts) + " ASTs\n" + log.str()};
}

}  // namespace
}  // namespace uakit

int main() {
  using namespace uakit;
  using Clock = std::chrono::steady_clock;
  Corpus corpus;
  const struct {
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  } criteria[] = {
      {"1 sample fixtures", kFixtureBudget, sample_fixtures},
      {"2 operator algebra", kOperatorBudget, [&] { return operator_algebra(corpus); }},
      {"3 derivation chain", kDerivationBudget, [&] { return derivation_chain(corpus); }},
      {"4 category equivalence", kCategoryBudget, [&] { return category_equivalence(corpus); }},
      {"5 transform equivalence", kTransformBudget, [&] { return transform_equivalence(corpus); }},
      {"6 axiom soundness", 0, [&] { return lpa_soundness(corpus); }},
      {"7 mutation sensitivity", 0, mutation_sensitivity},
      {"8 parser round trip", kParserBudget, parser_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what() + "\n"};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.budget == 0 || secs < c.budget;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s %-24s %8.2f s%s  %s", pass ? "PASS" : "FAIL", c.name, secs,
                in_time ? "" : " (over budget)", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
