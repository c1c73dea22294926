#include "uakit/logic.hpp"

#include <stdexcept>
#include <unordered_map>

#include "uakit/equivalence.hpp"

namespace uakit {

namespace {

using nlohmann::json;

std::string line_label(std::size_t n) { return "line " + std::to_string(n); }

// Compiled propositional skeleton: letters, constants, negation, conjunction.
struct Skeleton {
  struct Node {
    enum Kind { Letter, True, Not, And } kind;
    int a = -1, b = -1;  // letter index, or child nodes
  };
  std::vector<Node> nodes;
  std::unordered_map<Formula, int> letters;

  int compile(const Formula& f) {
    switch (f.op()) {
      case Op::Top: nodes.push_back({Node::True}); break;
      case Op::Not: {
        int c = compile(f.sub());
        nodes.push_back({Node::Not, c});
        break;
      }
      case Op::And: {
        int l = compile(f.lhs());
        int r = compile(f.rhs());
        nodes.push_back({Node::And, l, r});
        break;
      }
      default: {
        auto it = letters.find(f);
        int id = it == letters.end() ? static_cast<int>(letters.size()) : it->second;
        if (it == letters.end()) letters.emplace(f, id);
        nodes.push_back({Node::Letter, id});
      }
    }
    return static_cast<int>(nodes.size()) - 1;
  }
};

constexpr std::uint64_t kLetterPattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                             0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

// Domain value of a formula, bottom-up.
template <class D>
typename D::Value value_of(const D& d, const Formula& f) {
  switch (f.op()) {
    case Op::Top: return d.top();
    case Op::Atom: return d.atom(f.index());
    case Op::Not: return d.neg(value_of(d, f.sub()));
    case Op::And: return d.conj(value_of(d, f.lhs()), value_of(d, f.rhs()));
    default: return d.modal(f.op(), f.index(), value_of(d, f.sub()));
  }
}

template <class D, class WitnessFn>
SoundnessReport run_soundness(const D& d, const std::vector<Formula>& pool, int agents, WitnessFn witness) {
  using Value = typename D::Value;
  struct Hasher {
    std::size_t operator()(const Value& v) const { return D::hash(v); }
  };
  SoundnessReport r;
  r.pool = pool.size();
  std::vector<Value> vals;
  std::vector<Formula> reps;
  std::unordered_map<Value, std::size_t, Hasher> seen;
  for (const auto& f : pool) {
    Value v = value_of(d, f);
    if (seen.emplace(v, vals.size()).second) {
      vals.push_back(std::move(v));
      reps.push_back(f);
    }
  }
  r.classes = vals.size();
  const std::size_t n = vals.size();

  auto fail = [&](std::string tag, const Formula& inst, const Value& v) {
    if (r.failures.size() < SoundnessReport::kMaxFailures) r.failures.push_back({std::move(tag), inst, witness(v)});
  };
  auto count = [&](const std::string& tag) {
    ++r.instances;
    ++r.per_schema[tag];
  };
  FormulaAlgebra fa;

  for (const auto& info : axiom_schemas()) {
    for (int i = 0; i < agents; ++i) {
      for (int j = 0; j < (info.uses_j ? agents : 1); ++j) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < (info.uses_psi ? n : 1); ++b) {
            count(info.tag);
            Value v = build_schema(d, info.id, vals[a], vals[b], i, j);
            if (!d.valid(v)) fail(info.tag, build_schema(fa, info.id, reps[a], reps[b], i, j), v);
          }
        }
      }
    }
  }

  // Tautology sample: each class against itself and against its successor.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : {a, (a + 1) % n}) {
      auto shapes = tautology_templates(reps[a], reps[b]);
      for (const auto& t : shapes) {
        count("PL");
        Value v = value_of(d, t);
        if (!d.valid(v)) fail("PL", t, v);
      }
    }
  }

  auto imp = [&](const Value& x, const Value& y) { return d.neg(d.conj(x, d.neg(y))); };
  std::vector<bool> valid(n);
  for (std::size_t a = 0; a < n; ++a) valid[a] = d.valid(vals[a]);
  for (std::size_t a = 0; a < n; ++a) {
    if (!valid[a]) continue;
    for (int i = 0; i < agents; ++i) {
      count("KInf");
      Value v = d.modal(Op::L, i, vals[a]);
      if (!d.valid(v)) fail("KInf", Formula::L(i, reps[a]), v);
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (valid[b]) continue;
      count("MP");
      if (d.valid(imp(vals[a], vals[b]))) fail("MP", reps[b], vals[b]);
    }
  }
  return r;
}

}  // namespace

const std::vector<SchemaInfo>& axiom_schemas() {
  static const std::vector<SchemaInfo> s{
      {Schema::K, "K", "Distribution", true, false},
      {Schema::EK, "EK", "Explicit Knowledge", false, false},
      {Schema::A1, "A1", "Awareness Distribution", true, false},
      {Schema::A2, "A2", "Symmetry", false, false},
      {Schema::A3, "A3", "Awareness of Explicit Knowledge", false, true},
      {Schema::A4, "A4", "Awareness Reflection", false, true},
      {Schema::A5, "A5", "Awareness of Implicit Knowledge", false, true},
      {Schema::A11, "A11", "Awareness Introspection", false, false},
      {Schema::A12, "A12", "Unawareness Introspection", false, false},
      {Schema::T, "T", "Truth", false, false},
      {Schema::Four, "4", "Positive Introspection", false, false},
      {Schema::Five, "5", "Negative Introspection", false, false},
  };
  return s;
}

const SchemaInfo& schema_info(Schema s) {
  for (const auto& info : axiom_schemas())
    if (info.id == s) return info;
  throw std::invalid_argument("unknown schema");
}

std::optional<Schema> parse_schema(std::string_view tag) {
  for (const auto& info : axiom_schemas())
    if (info.tag == tag) return info.id;
  return std::nullopt;
}

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> t = [] {
    std::vector<TableEntry> out{{EntryKind::Tautologies, "PL", "Propositional tautologies"}};
    for (const auto& s : axiom_schemas()) out.push_back({EntryKind::Axiom, s.tag, s.title});
    out.push_back({EntryKind::Rule, "MP", "Modus Ponens"});
    out.push_back({EntryKind::Rule, "KInf", "K-Inference"});
    return out;
  }();
  return t;
}

Formula instantiate(Schema s, const Substitution& sub) {
  const SchemaInfo& info = schema_info(s);
  if (!sub.phi) throw std::invalid_argument("schema " + info.tag + " needs phi");
  if (info.uses_psi && !sub.psi) throw std::invalid_argument("schema " + info.tag + " needs psi");
  if (sub.i < 0 || sub.j < 0) throw std::invalid_argument("agents must be positive");
  const Formula& psi = sub.psi ? *sub.psi : *sub.phi;
  return build_schema(FormulaAlgebra{}, s, *sub.phi, psi, sub.i, sub.j);
}

std::vector<AxiomInstance> instantiate_axioms(const std::vector<Formula>& pool, int agents) {
  if (pool.empty()) throw std::invalid_argument("empty formula pool");
  std::vector<AxiomInstance> out;
  FormulaAlgebra fa;
  for (const auto& info : axiom_schemas())
    for (int i = 0; i < agents; ++i)
      for (int j = 0; j < (info.uses_j ? agents : 1); ++j)
        for (const auto& phi : pool)
          for (std::size_t b = 0; b < (info.uses_psi ? pool.size() : 1); ++b)
            out.push_back({info.id, build_schema(fa, info.id, phi, pool[b], i, j)});
  return out;
}

std::vector<Formula> tautology_templates(const Formula& phi, const Formula& psi) {
  return {
      Formula::disj(phi, Formula::neg(phi)),
      Formula::implies(phi, Formula::implies(psi, phi)),
      Formula::implies(Formula::conj(phi, psi), psi),
      Formula::iff(Formula::neg(Formula::neg(phi)), phi),
      Formula::implies(Formula::conj(phi, Formula::implies(phi, psi)), psi),
      Formula::iff(Formula::conj(phi, psi), Formula::conj(psi, phi)),
  };
}

bool is_tautology_instance(const Formula& f) {
  Skeleton sk;
  const int root = sk.compile(f);
  const int letters = static_cast<int>(sk.letters.size());
  if (letters > 16) throw std::length_error("formula has " + std::to_string(letters) + " propositional letters");
  const std::uint64_t low = letters >= 6 ? ~0ull : ((1ull << (1u << letters)) - 1);
  const std::uint64_t blocks = letters > 6 ? (1ull << (letters - 6)) : 1;
  std::vector<std::uint64_t> val(sk.nodes.size());
  for (std::uint64_t blk = 0; blk < blocks; ++blk) {
    for (std::size_t k = 0; k < sk.nodes.size(); ++k) {
      const auto& nd = sk.nodes[k];
      switch (nd.kind) {
        case Skeleton::Node::True: val[k] = ~0ull; break;
        case Skeleton::Node::Letter:
          val[k] = nd.a < 6 ? kLetterPattern[nd.a] : (((blk >> (nd.a - 6)) & 1u) ? ~0ull : 0ull);
          break;
        case Skeleton::Node::Not: val[k] = ~val[nd.a]; break;
        case Skeleton::Node::And: val[k] = val[nd.a] & val[nd.b]; break;
      }
    }
    if ((val[root] & low) != low) return false;
  }
  return true;
}

bool ProofCheck::ok() const {
  for (bool b : line_ok)
    if (!b) return false;
  return true;
}

ProofCheck check_proof(const Proof& p) {
  ProofCheck out;
  out.line_ok.assign(p.lines.size(), false);
  const Vocabulary& v = p.vocabulary;
  auto diag = [&](std::size_t n, const std::string& msg) { out.diagnostics.push_back(line_label(n) + ": " + msg); };
  for (std::size_t n = 0; n < p.lines.size(); ++n) {
    const ProofLine& line = p.lines[n];
    const Justification& by = line.by;
    auto earlier = [&](int k) { return k >= 0 && static_cast<std::size_t>(k) < n; };
    switch (by.kind) {
      case Justification::Kind::Tautology: {
        try {
          if (is_tautology_instance(line.formula)) out.line_ok[n] = true;
          else diag(n, "not a propositional tautology");
        } catch (const std::length_error& e) {
          diag(n, e.what());
        }
        break;
      }
      case Justification::Kind::Axiom: {
        try {
          Formula expect = instantiate(by.schema, by.subst);
          if (expect == line.formula) out.line_ok[n] = true;
          else diag(n, "instance of " + schema_info(by.schema).tag + " is " + print_formula(expect, v));
        } catch (const std::invalid_argument& e) {
          diag(n, e.what());
        }
        break;
      }
      case Justification::Kind::MP: {
        if (!earlier(by.premise) || !earlier(by.implication)) {
          diag(n, "modus ponens must cite earlier lines");
          break;
        }
        const Formula expect = Formula::implies(p.lines[by.premise].formula, line.formula);
        if (p.lines[by.implication].formula == expect) out.line_ok[n] = true;
        else diag(n, line_label(by.implication) + " is not " + print_formula(expect, v));
        break;
      }
      case Justification::Kind::KInf: {
        if (!earlier(by.premise)) {
          diag(n, "K-inference must cite an earlier line");
          break;
        }
        const Formula expect = Formula::L(by.agent, p.lines[by.premise].formula);
        if (line.formula == expect) out.line_ok[n] = true;
        else diag(n, "K-inference from " + line_label(by.premise) + " gives " + print_formula(expect, v));
        break;
      }
    }
  }
  return out;
}

Proof proof_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array())
    throw std::invalid_argument("proof needs a \"lines\" array");
  Proof p;
  if (doc.contains("atoms")) {
    p.vocabulary = Vocabulary(doc["atoms"].get<std::vector<std::string>>());
  } else {
    std::vector<std::string> names;
    auto collect = [&](const std::string& text) {
      for (auto& a : scan_atom_names(text))
        if (std::find(names.begin(), names.end(), a) == names.end()) names.push_back(a);
    };
    for (const auto& line : doc["lines"]) {
      collect(line.at("formula").get<std::string>());
      const json& by = line.at("by");
      if (by.contains("subst"))
        for (const auto& [key, val] : by["subst"].items())
          if (val.is_string()) collect(val.get<std::string>());
    }
    p.vocabulary = Vocabulary(names);
  }
  auto agent = [](const json& j) {
    int a = j.get<int>();
    if (a < 1) throw std::invalid_argument("agents are numbered from 1");
    return a - 1;
  };
  for (const auto& line : doc["lines"]) {
    ProofLine pl{parse_formula(line.at("formula").get<std::string>(), p.vocabulary), {}};
    const json& by = line.at("by");
    Justification& j = pl.by;
    if (by.contains("mp")) {
      const json& mp = by["mp"];
      if (!mp.is_array() || mp.size() != 2) throw std::invalid_argument("\"mp\" takes two line numbers");
      j.kind = Justification::Kind::MP;
      j.premise = mp[0].get<int>();
      j.implication = mp[1].get<int>();
    } else if (by.contains("kinf")) {
      j.kind = Justification::Kind::KInf;
      j.premise = by["kinf"].at("line").get<int>();
      j.agent = agent(by["kinf"].at("agent"));
    } else if (by.contains("schema")) {
      const std::string tag = by["schema"].get<std::string>();
      if (tag == "PL") {
        j.kind = Justification::Kind::Tautology;
      } else {
        auto s = parse_schema(tag);
        if (!s) throw std::invalid_argument("unknown schema '" + tag + "'");
        j.kind = Justification::Kind::Axiom;
        j.schema = *s;
        const json sub = by.value("subst", json::object());
        if (sub.contains("phi")) j.subst.phi = parse_formula(sub["phi"].get<std::string>(), p.vocabulary);
        if (sub.contains("psi")) j.subst.psi = parse_formula(sub["psi"].get<std::string>(), p.vocabulary);
        if (sub.contains("i")) j.subst.i = agent(sub["i"]);
        if (sub.contains("j")) j.subst.j = agent(sub["j"]);
      }
    } else {
      throw std::invalid_argument("line justification must be a schema, \"mp\" or \"kinf\"");
    }
    p.lines.push_back(std::move(pl));
  }
  return p;
}

json proof_to_json(const Proof& p) {
  const Vocabulary& v = p.vocabulary;
  json lines = json::array();
  for (const auto& line : p.lines) {
    const Justification& j = line.by;
    json by;
    switch (j.kind) {
      case Justification::Kind::Tautology: by = {{"schema", "PL"}}; break;
      case Justification::Kind::Axiom: {
        json sub = json::object();
        if (j.subst.phi) sub["phi"] = print_formula(*j.subst.phi, v);
        if (j.subst.psi) sub["psi"] = print_formula(*j.subst.psi, v);
        sub["i"] = j.subst.i + 1;
        if (schema_info(j.schema).uses_j) sub["j"] = j.subst.j + 1;
        by = {{"schema", schema_info(j.schema).tag}, {"subst", sub}};
        break;
      }
      case Justification::Kind::MP: by = {{"mp", {j.premise, j.implication}}}; break;
      case Justification::Kind::KInf: by = {{"kinf", {{"line", j.premise}, {"agent", j.agent + 1}}}}; break;
    }
    lines.push_back({{"formula", print_formula(line.formula, v)}, {"by", by}});
  }
  return json{{"atoms", v.names()}, {"lines", lines}};
}

std::string SoundnessReport::to_string(const Vocabulary& v) const {
  std::string out = std::to_string(pool) + " pool formulas, " + std::to_string(classes) + " classes, " +
                    std::to_string(instances) + " instances, " + std::to_string(failures.size()) + " failures\n";
  for (const auto& f : failures) out += "  " + f.schema + ": " + print_formula(f.instance, v) + " fails " + f.witness + "\n";
  return out;
}

SoundnessReport soundness_suite(const HMSModel& m, const std::vector<Formula>& pool, int agents) {
  HMSDomain d(m);
  const HMSFrame& f = m.frame;
  return run_soundness(d, pool, agents, [&](const HMSValue& v) {
    StateSet bad = d.checker().defined_set(v.atoms) - v.event.ext;
    auto s = bad.find_first();
    return s == StateSet::npos ? std::string("nowhere") : "at " + f.name(static_cast<StateId>(s));
  });
}

SoundnessReport soundness_suite(const FHCategory& c, const std::vector<Formula>& pool, int agents) {
  CategoryDomain d(c);
  return run_soundness(d, pool, agents, [&](const CategoryValue& v) {
    for (std::size_t m = 0; m < d.spaces().size(); ++m) {
      if (!v.atoms.subset_of(d.spaces()[m])) continue;
      const WorldSet& e = v.ext[m];
      for (std::size_t w = 0; w < e.size(); ++w)
        if (!e.test(w)) return "at " + c.model(d.spaces()[m]).worlds[w];
    }
    return std::string("nowhere");
  });
}

}  // namespace uakit
