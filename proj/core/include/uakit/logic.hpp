#ifndef UAKIT_LOGIC_HPP
#define UAKIT_LOGIC_HPP

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uakit/category.hpp"
#include "uakit/formula.hpp"
#include "uakit/hms.hpp"

namespace uakit {

enum class Schema { K, EK, A1, A2, A3, A4, A5, A11, A12, T, Four, Five };

struct SchemaInfo {
  Schema id;
  std::string tag;  // "K", "EK", "A1", ..., "4", "5"
  std::string title;
  bool uses_psi = false;
  bool uses_j = false;
};

/// The named axiom schemas.
const std::vector<SchemaInfo>& axiom_schemas();
const SchemaInfo& schema_info(Schema s);
/// Accepts the tags of axiom_schemas().
std::optional<Schema> parse_schema(std::string_view tag);

enum class EntryKind { Tautologies, Axiom, Rule };

struct TableEntry {
  EntryKind kind;
  std::string tag;
  std::string title;
};

/// Every entry of the axiom system: tautologies, the named schemas, and
/// the two inference rules.
const std::vector<TableEntry>& table_entries();

/// Builds a schema instance in any algebra offering neg, conj and
/// modal(op, agent, x). Implication and equivalence use the same
/// desugaring as Formula::implies and Formula::iff.
template <class Alg, class V>
V build_schema(const Alg& a, Schema s, const V& phi, const V& psi, int i, int j) {
  auto imp = [&](const V& x, const V& y) { return a.neg(a.conj(x, a.neg(y))); };
  auto iff = [&](const V& x, const V& y) { return a.conj(imp(x, y), imp(y, x)); };
  auto L = [&](int ag, const V& x) { return a.modal(Op::L, ag, x); };
  auto A = [&](int ag, const V& x) { return a.modal(Op::A, ag, x); };
  auto K = [&](int ag, const V& x) { return a.modal(Op::K, ag, x); };
  switch (s) {
    case Schema::K: return imp(a.conj(L(i, phi), imp(L(i, phi), L(i, psi))), L(i, psi));
    case Schema::EK: return iff(K(i, phi), a.conj(L(i, phi), A(i, phi)));
    case Schema::A1: return iff(A(i, a.conj(phi, psi)), a.conj(A(i, phi), A(i, psi)));
    case Schema::A2: return iff(A(i, a.neg(phi)), A(i, phi));
    case Schema::A3: return iff(A(i, K(j, phi)), A(i, phi));
    case Schema::A4: return iff(A(i, A(j, phi)), A(i, phi));
    case Schema::A5: return iff(A(i, L(j, phi)), A(i, phi));
    case Schema::A11: return imp(A(i, phi), L(i, A(i, phi)));
    case Schema::A12: return imp(a.neg(A(i, phi)), L(i, a.neg(A(i, phi))));
    case Schema::T: return imp(L(i, phi), phi);
    case Schema::Four: return imp(L(i, phi), L(i, L(i, phi)));
    case Schema::Five: return imp(a.neg(L(i, phi)), L(i, a.neg(L(i, phi))));
  }
  return phi;
}

/// Formula algebra for build_schema.
struct FormulaAlgebra {
  Formula neg(const Formula& x) const { return Formula::neg(x); }
  Formula conj(const Formula& x, const Formula& y) const { return Formula::conj(x, y); }
  Formula modal(Op op, int agent, const Formula& x) const { return Formula::modal(op, agent, x); }
};

/// Agents are 0-based here.
struct Substitution {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  int i = 0;
  int j = 0;
};

/// Throws std::invalid_argument when the substitution lacks a metavariable.
Formula instantiate(Schema s, const Substitution& sub);

struct AxiomInstance {
  Schema schema;
  Formula formula;
};

/// Every schema under every choice of pool formulas and agents.
/// Throws std::invalid_argument on an empty pool.
std::vector<AxiomInstance> instantiate_axioms(const std::vector<Formula>& pool, int agents);

/// Propositional-tautology shapes used as the tautology sample, over phi and psi.
std::vector<Formula> tautology_templates(const Formula& phi, const Formula& psi);

/// True iff f is a propositional tautology once its atoms and maximal modal
/// subformulas are read as letters. Throws std::length_error past 16 letters.
bool is_tautology_instance(const Formula& f);

struct Justification {
  enum class Kind { Tautology, Axiom, MP, KInf };
  Kind kind = Kind::Tautology;
  Schema schema = Schema::K;
  Substitution subst;
  int premise = -1;      // MP: the antecedent line; KInf: the line
  int implication = -1;  // MP: the implication line
  int agent = 0;         // KInf, 0-based
};

struct ProofLine {
  Formula formula;
  Justification by;
};

struct Proof {
  Vocabulary vocabulary;
  std::vector<ProofLine> lines;
};

struct ProofCheck {
  std::vector<bool> line_ok;
  std::vector<std::string> diagnostics;  // "line n: ..."
  bool ok() const;
};

ProofCheck check_proof(const Proof& p);

/// Reads {"atoms":[...]?, "lines":[{"formula":..., "by":...}]}. Agents in
/// the file are 1-based. Without "atoms" the vocabulary is collected from
/// the formulas in order of appearance. Throws std::invalid_argument or
/// ParseError on malformed input.
Proof proof_from_json(const nlohmann::json& doc);
nlohmann::json proof_to_json(const Proof& p);

struct SoundnessFailure {
  std::string schema;  // tag, "PL", "MP" or "KInf"
  Formula instance;
  std::string witness;
};

struct SoundnessReport {
  std::size_t pool = 0;       // formulas offered
  std::size_t classes = 0;    // semantic classes among them
  std::size_t instances = 0;  // instances checked, one per class combination
  std::map<std::string, std::size_t> per_schema;
  std::vector<SoundnessFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string to_string(const Vocabulary& v) const;
  static constexpr std::size_t kMaxFailures = 16;
};

/// Checks validity of every schema instance over the pool, a tautology
/// sample, and preservation of validity under both rules. Pool formulas
/// with the same meaning in the model are checked once.
SoundnessReport soundness_suite(const HMSModel& m, const std::vector<Formula>& pool, int agents);
SoundnessReport soundness_suite(const FHCategory& c, const std::vector<Formula>& pool, int agents);

}  // namespace uakit

#endif
