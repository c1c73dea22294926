#ifndef UAKIT_FORMULA_HPP
#define UAKIT_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uakit/atoms.hpp"

namespace uakit {

enum class Op : std::uint8_t { Top, Atom, Not, And, L, A, K };

/// Immutable formula tree with shared subterms.
///
/// Atoms carry their vocabulary id; modal nodes carry a 0-based agent.
/// Depth, atom set and a structural hash are cached at construction.
class Formula {
 public:
  static Formula top();
  static Formula atom(int id);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula L(int agent, Formula f);
  static Formula A(int agent, Formula f);
  static Formula K(int agent, Formula f);
  static Formula modal(Op op, int agent, Formula f);

  // Surface sugar, expressed with the primitive connectives.
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);

  Op op() const { return node_->op; }
  /// Atom id for Atom nodes, agent for modal nodes.
  int index() const { return node_->index; }
  const Formula& sub() const { return *node_->lhs; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  int depth() const { return node_->depth; }
  AtomSet atoms() const { return node_->atoms; }
  std::size_t hash() const { return node_->hash; }
  /// Largest agent index used, or -1.
  int max_agent() const { return node_->max_agent; }

  bool is_modal() const { return op() == Op::L || op() == Op::A || op() == Op::K; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    int index = 0;
    std::unique_ptr<Formula> lhs, rhs;
    int depth = 0;
    int max_agent = -1;
    AtomSet atoms;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, int index, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

AtomSet atoms_of(const Formula& f);
bool in_sublanguage(const Formula& f, AtomSet phi);
/// Replace every K(i, g) by L(i, g') & A(i, g'), innermost first.
Formula expand_k(const Formula& f);

/// All formulas over `atoms` with depth <= max_depth, level by level,
/// without duplicates. Agents are 0..agents-1.
std::vector<Formula> enumerate_formulas(AtomSet atoms, int agents, int max_depth);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parse the surface syntax. Every atom must belong to `allowed`.
Formula parse_formula(std::string_view text, const Vocabulary& vocab, AtomSet allowed);
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

/// Identifiers that look like atoms, in order of first occurrence.
std::vector<std::string> scan_atom_names(std::string_view text);

/// Fully parenthesized printing; agents are printed 1-based.
std::string print_formula(const Formula& f, const Vocabulary& vocab);

}  // namespace uakit

template <>
struct std::hash<uakit::Formula> {
  std::size_t operator()(const uakit::Formula& f) const noexcept { return f.hash(); }
};

#endif
