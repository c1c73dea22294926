#include "commands.hpp"

#include <atomic>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "uakit/category.hpp"
#include "uakit/countermodel.hpp"
#include "uakit/equivalence.hpp"
#include "uakit/harness.hpp"
#include "uakit/io.hpp"
#include "uakit/logic.hpp"
#include "uakit/semantics.hpp"
#include "uakit/transforms.hpp"

namespace uakit::cli {

namespace {

void run_parallel(const std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        tasks[k]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void emit(const json& doc, const std::string& path, bool pretty) {
  if (path.empty() || path == "-") {
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n';
  } else {
    write_json_file(path, doc, pretty);
  }
}

std::string undefined_text(const Vocabulary& v, AtomSet atoms) {
  std::vector<std::string> names = v.names_of(atoms);
  std::sort(names.begin(), names.end());
  std::string out = "undefined(";
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "," : "") + names[k];
  return out + ")";
}

std::string world_list(const FHModel& k, const WorldSet& ws) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < k.num_worlds(); ++w) {
    if (!ws.test(w)) continue;
    out += (first ? "" : ", ") + k.worlds[w];
    first = false;
  }
  return out + "}";
}

std::vector<Formula> lpa_pool(const Vocabulary& v, int agents, int depth) {
  return enumerate_formulas(v.all() & AtomSet::first(2), agents, depth);
}

struct Section {
  std::string name;
  bool ok = true;
  json doc;
  std::string text;
};

Section from_validation(std::string name, const ValidationReport& r) {
  return {std::move(name), r.ok(), report_to_json(r), r.findings().empty() ? "" : r.to_string()};
}

Section from_properties(std::string name, const PropertyReport& r) {
  return {std::move(name), r.ok(), report_to_json(r), r.to_string()};
}

Section from_soundness(std::string name, const SoundnessReport& r, const Vocabulary& v) {
  return {std::move(name), r.ok(), report_to_json(r, v), r.to_string(v)};
}

Section from_equivalence(std::string name, const EquivalenceReport& r, const Vocabulary& v) {
  return {std::move(name), r.ok(), report_to_json(r, v), r.to_string(v)};
}

bool wants(const std::string& suite, const char* name) { return suite == "all" || suite == name; }

/// Section builders for one HMS model; `label` prefixes section names.
void hms_sections(const HMSModel& m, const std::string& suite, int eq_depth, int lpa_depth, const std::string& label,
                  std::vector<std::function<Section()>>& out) {
  const auto* mp = &m;
  const std::string pre = label.empty() ? "" : label + " ";
  if (m.pi && wants(suite, "pi")) {
    out.push_back([mp, pre] { return from_validation(pre + "pi clauses", validate_pi(*mp)); });
    out.push_back([mp, pre] {
      return from_properties(pre + "explicit knowledge and awareness", property_suite(*mp).filter({"knowledge", "awareness"}));
    });
  }
  if (m.lambda && wants(suite, "lambda")) {
    out.push_back([mp, pre] { return from_validation(pre + "lambda clauses", validate_lambda(*mp)); });
    out.push_back([mp, pre] {
      return from_properties(pre + "implicit knowledge", property_suite(*mp).filter({"implicit", "interaction", "lemma"}));
    });
  }
  if (m.alpha && wants(suite, "alpha")) {
    out.push_back([mp, pre] { return from_validation(pre + "alpha clauses", validate_alpha(*mp)); });
    if (m.lambda)
      out.push_back([mp, pre] { return from_properties(pre + "derived possibility", property_suite(*mp).filter({"derived"})); });
  }
  if (wants(suite, "operators")) {
    out.push_back([mp, pre] {
      ValidationReport r = validate_hms(*mp);
      return from_validation(pre + "model", r);
    });
    if (suite == "operators")
      out.push_back([mp, pre] { return from_properties(pre + "operator properties", property_suite(*mp)); });
  }
  if (wants(suite, "equivalence")) {
    if (m.pi && m.lambda)
      out.push_back([mp, pre, eq_depth] {
        auto t = fh_transform(*mp);
        return from_equivalence(pre + "fh transform equivalence", check_hms_fh_equivalence(*mp, t.model, t.trace, eq_depth),
                                mp->frame.vocabulary());
      });
    if (m.lambda && m.alpha)
      out.push_back([mp, pre, eq_depth] {
        auto t = fh_star_transform(*mp);
        return from_equivalence(pre + "fh* transform equivalence",
                                check_hms_fh_equivalence(*mp, t.model, t.trace, eq_depth), mp->frame.vocabulary());
      });
  }
  if (wants(suite, "lpa")) {
    out.push_back([mp, pre, lpa_depth] {
      const Vocabulary& v = mp->frame.vocabulary();
      return from_soundness(pre + "axiom soundness", soundness_suite(*mp, lpa_pool(v, mp->agents, lpa_depth), mp->agents), v);
    });
  }
}

}  // namespace

int run_validate(const ValidateArgs& a) {
  const json doc = read_json_file(a.file);
  const std::string kind = document_kind(doc);
  ValidationReport r;
  std::string what;
  if (kind == "fh") {
    r = validate_fh(fh_from_json(doc));
    what = "fh model";
  } else if (kind == "hms") {
    const HMSModel m = hms_from_json(doc);
    r = validate_hms(m);
    what = to_string(m.kind()) + " hms model";
  } else if (kind == "fh-category") {
    r = validate_category(category_from_json(doc));
    what = "fh category";
  } else if (doc.is_object() && doc.contains("lines")) {
    return run_check_proof({a.file, a.json});
  } else {
    throw FormatError("unrecognized document kind '" + kind + "'");
  }
  if (a.json) {
    json out = report_to_json(r);
    out["document"] = what;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (r.ok() ? "valid " : "invalid ") << what << '\n' << r.to_string();
  }
  return r.ok() ? kOk : kFailed;
}

int run_eval(const EvalArgs& a) {
  const json doc = read_json_file(a.file);
  const std::string kind = document_kind(doc);
  if (kind == "hms") {
    const HMSModel m = hms_from_json(doc);
    const Vocabulary& v = m.frame.vocabulary();
    const Formula f = parse_formula(a.formula, v);
    const auto s = m.frame.find(a.state);
    if (!s) throw UsageError("unknown state '" + a.state + "'");
    HMSChecker checker(m);
    const AtomSet undefined = checker.undefined_atoms(*s, f);
    if (!undefined.empty()) {
      std::cout << undefined_text(v, undefined) << '\n';
    } else {
      std::cout << (checker.sat(*s, f) ? "true" : "false") << '\n';
    }
    if (a.show_event) std::cout << "event " << event_label(m.frame, checker.extension(f)) << '\n';
    return kOk;
  }
  if (kind == "fh") {
    const FHModel k = fh_from_json(doc);
    const Formula f = parse_formula(a.formula, k.vocabulary);
    const auto w = k.find_world(a.state);
    if (!w) throw UsageError("unknown world '" + a.state + "'");
    if (!f.atoms().subset_of(k.vocab)) {
      std::cout << undefined_text(k.vocabulary, f.atoms() - k.vocab) << '\n';
      return kOk;
    }
    FHChecker checker(k);
    const WorldSet ext = checker.extension(f);
    std::cout << (ext.test(*w) ? "true" : "false") << '\n';
    if (a.show_event) std::cout << "worlds " << world_list(k, ext) << '\n';
    return kOk;
  }
  throw UsageError("eval needs an fh or hms model, got '" + kind + "'");
}

int run_transform(const TransformArgs& a) {
  const json doc = read_json_file(a.file);
  const std::string kind = document_kind(doc);
  const RestrictMode mode = parse_restrict_mode(a.mode);
  json out;
  json trace;
  if (kind == "fh") {
    const FHModel k = fh_from_json(doc);
    if (a.to == "hms" || a.to == "ikb") {
      auto t = a.to == "hms" ? hms_transform(k, mode) : truncated_hms_transform(k, mode);
      out = hms_to_json(t.model);
      trace = trace_to_json(t.trace, k, t.model);
    } else if (a.to == "category") {
      out = category_to_json(build_category(k, mode));
    } else {
      throw UsageError("an fh model transforms to hms, ikb or category");
    }
  } else if (kind == "fh-category") {
    const FHCategory c = category_from_json(doc);
    if (a.to == "ikb") {
      auto t = t_transform(c);
      out = hms_to_json(t.model);
      trace = trace_to_json(t.trace, c.model(c.at), t.model);
    } else if (a.to == "hms") {
      auto t = hms_transform(c.base, c.mode);
      out = hms_to_json(t.model);
      trace = trace_to_json(t.trace, c.base, t.model);
    } else if (a.to == "category") {
      out = category_dump(c);
    } else {
      throw UsageError("a category transforms to ikb, hms, or category (full dump)");
    }
  } else if (kind == "hms") {
    const HMSModel m = hms_from_json(doc);
    if (a.to == "fh" || a.to == "fh-star") {
      auto t = a.to == "fh" ? fh_transform(m) : fh_star_transform(m);
      out = fh_to_json(t.model);
      trace = trace_to_json(t.trace, m, t.model);
    } else {
      throw UsageError("an hms model transforms to fh or fh-star");
    }
  } else {
    throw FormatError("unrecognized document kind '" + kind + "'");
  }
  if (!a.trace.empty()) {
    if (trace.is_null()) throw UsageError("this transform has no trace");
    write_json_file(a.trace, trace, true);
  }
  emit(out, a.output, a.pretty);
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  const json doc = read_json_file(a.file);
  const std::string kind = document_kind(doc);
  const int eq_depth = a.depth.value_or(3);
  const int lpa_depth = a.depth.value_or(2);
  std::vector<std::function<Section()>> builders;

  HMSModel hms_model;
  std::optional<FHCategory> category;
  HMSModel complemented;
  HMSModel ikb;
  if (kind == "hms") {
    hms_model = hms_from_json(doc);
    const ValidationReport r = validate_hms(hms_model);
    if (!r.ok()) {
      // Operator suites assume a valid model; report the validator alone.
      Section s = from_validation("model", r);
      if (a.json)
        std::cout << json{{"ok", false}, {"sections", json{{s.name, s.doc}}}}.dump(2) << '\n';
      else
        std::cout << "== model: FAIL\n" << s.text;
      return kFailed;
    }
    hms_sections(hms_model, a.suite, eq_depth, lpa_depth, "", builders);
  } else if (kind == "fh" || kind == "fh-category") {
    if (kind == "fh") {
      const FHModel k = fh_from_json(doc);
      const ValidationReport r = validate_fh(k);
      if (!r.ok()) {
        std::cout << (a.json ? report_to_json(r).dump(2) + "\n" : "== model: FAIL\n" + r.to_string());
        return kFailed;
      }
      category = build_category(k, parse_restrict_mode(a.mode));
    } else {
      category = category_from_json(doc);
    }
    const FHCategory* c = &*category;
    complemented = hms_transform(c->base, c->mode).model;
    ikb = truncated_hms_transform(c->base, c->mode).model;
    if (wants(a.suite, "operators") || wants(a.suite, "alpha"))
      builders.push_back([c] { return from_properties("category", property_suite(*c)); });
    if (wants(a.suite, "equivalence")) {
      builders.push_back([c, eq_depth] {
        return from_equivalence("sublanguage invariance", check_category_equivalence(*c, eq_depth), c->vocabulary);
      });
      builders.push_back([c, eq_depth] {
        auto t = hms_transform(c->base, c->mode);
        return from_equivalence("hms transform equivalence", check_fh_hms_equivalence(c->base, t.model, t.trace, eq_depth),
                                c->vocabulary);
      });
      builders.push_back([c, eq_depth] {
        return from_equivalence("round trip", check_round_trip(c->base, c->mode, eq_depth), c->vocabulary);
      });
    }
    if (wants(a.suite, "lpa"))
      builders.push_back([c, lpa_depth] {
        return from_soundness("category axiom soundness",
                              soundness_suite(*c, lpa_pool(c->vocabulary, c->base.agents, lpa_depth), c->base.agents),
                              c->vocabulary);
      });
    const std::string sub = a.suite == "all" || a.suite == "lpa" || a.suite == "equivalence" ? "operators" : a.suite;
    if (a.suite != "lpa" && a.suite != "equivalence") {
      hms_sections(complemented, sub, eq_depth, lpa_depth, "hms transform:", builders);
      if (a.suite == "alpha") hms_sections(ikb, "alpha", eq_depth, lpa_depth, "truncated transform:", builders);
    }
  } else {
    throw FormatError("unrecognized document kind '" + kind + "'");
  }

  if (builders.empty()) throw UsageError("suite '" + a.suite + "' does not apply to this model");
  std::vector<Section> sections(builders.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t k = 0; k < builders.size(); ++k) tasks.push_back([&, k] { sections[k] = builders[k](); });
  run_parallel(tasks, a.jobs);

  bool ok = true;
  for (const auto& s : sections) ok = ok && s.ok;
  if (a.json) {
    json out{{"ok", ok}};
    json secs = json::object();
    for (const auto& s : sections) secs[s.name] = s.doc;
    out["sections"] = std::move(secs);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& s : sections) {
      std::cout << "== " << s.name << ": " << (s.ok ? "ok" : "FAIL") << '\n' << s.text;
    }
    std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
  }
  return ok ? kOk : kFailed;
}

int run_random(const RandomArgs& a) {
  const GenParams p{a.atoms, a.worlds, a.agents};
  check_params(p);
  const GenStrategy strategy = parse_gen_strategy(a.strategy);
  if (!a.output_dir.empty()) std::filesystem::create_directories(a.output_dir);

  struct Outcome {
    json model;
    std::string note;
    bool ok = true;
    std::string summary;
  };
  std::vector<Outcome> outcomes(a.count);
  std::vector<std::function<void()>> tasks;
  for (int k = 0; k < a.count; ++k) {
    tasks.push_back([&, k] {
      const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(k);
      Outcome& o = outcomes[k];
      PropertyReport rep;
      if (a.kind == "fh") {
        const FHModel m = gen_fh(p, seed);
        o.model = fh_to_json(m);
        if (a.verify) rep = property_suite(build_category(m, RestrictMode::Copy));
      } else {
        const Generated g = a.kind == "hms" ? gen_hms(p, seed, strategy) : gen_ikb(p, seed, strategy);
        if (g.fell_back) o.note = "seed " + std::to_string(seed) + ": direct generation fell back to via-transform";
        o.model = hms_to_json(g.model);
        if (a.verify) rep = property_suite(g.model);
      }
      if (a.verify) {
        o.ok = rep.ok();
        std::ostringstream os;
        os << "seed " << seed << ": " << (o.ok ? "ok" : "FAIL") << ", " << rep.instances() << " checks";
        if (!o.ok) os << ", " << rep.failures() << " failed\n" << rep.to_string();
        o.summary = os.str();
      }
    });
  }
  run_parallel(tasks, a.verify ? a.jobs : 1);

  bool ok = true;
  for (int k = 0; k < a.count; ++k) {
    const Outcome& o = outcomes[k];
    if (!o.note.empty()) std::cerr << o.note << '\n';
    ok = ok && o.ok;
    if (a.verify) {
      std::cout << o.summary << '\n';
    } else if (!a.output_dir.empty()) {
      const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(k);
      write_json_file((std::filesystem::path(a.output_dir) / ("model-" + std::to_string(seed) + ".json")).string(),
                      o.model, a.pretty);
    } else {
      std::cout << (a.pretty ? o.model.dump(2) : o.model.dump()) << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

int run_check_proof(const ProofArgs& a) {
  const json doc = read_json_file(a.file);
  Proof proof;
  try {
    proof = proof_from_json(doc);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const ProofCheck pc = check_proof(proof);
  if (a.json) {
    std::cout << json{{"ok", pc.ok()}, {"lines", pc.line_ok}, {"diagnostics", pc.diagnostics}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < proof.lines.size(); ++k)
      std::cout << "line " << k << ": " << (pc.line_ok[k] ? "ok    " : "FAIL  ")
                << print_formula(proof.lines[k].formula, proof.vocabulary) << '\n';
    for (const auto& d : pc.diagnostics) std::cout << d << '\n';
    std::cout << (pc.ok() ? "proof valid" : "proof invalid") << '\n';
  }
  return pc.ok() ? kOk : kFailed;
}

int run_countermodel(const CountermodelArgs& a) {
  std::vector<std::string> names;
  if (a.atoms.empty()) {
    names = scan_atom_names(a.formula);
  } else {
    std::stringstream ss(a.atoms);
    for (std::string n; std::getline(ss, n, ',');)
      if (!n.empty()) names.push_back(n);
  }
  const Vocabulary v(names);
  const Formula f = parse_formula(a.formula, v);
  auto found = bounded_countermodel_search(f, v, a.max_worlds, a.max_atoms, a.agents);
  json out{{"formula", a.formula}, {"found", found.has_value()}};
  if (found) {
    out["world"] = found->model.worlds[found->world];
    out["model"] = fh_to_json(found->model);
  }
  std::cout << (a.pretty ? out.dump(2) : out.dump()) << '\n';
  return kOk;
}

}  // namespace uakit::cli
