#ifndef UAKIT_SEMANTICS_HPP
#define UAKIT_SEMANTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "uakit/category.hpp"
#include "uakit/formula.hpp"
#include "uakit/hms.hpp"

namespace uakit {

/// Raised when a formula is evaluated at a state where some of its atoms
/// have no truth value.
class UndefinedFormula : public std::runtime_error {
 public:
  UndefinedFormula(AtomSet atoms, std::vector<std::string> names);
  AtomSet atoms() const { return atoms_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  AtomSet atoms_;
  std::vector<std::string> names_;
};

/// Model checker for HMS models. k and a are read through pi when the
/// model has one, otherwise through lambda and alpha.
class HMSChecker {
 public:
  explicit HMSChecker(const HMSModel& m);

  const HMSModel& model() const { return ops_.model(); }
  const HMSOperators& ops() const { return ops_; }

  /// Throws ModelError when a modality needs a correspondence the model lacks,
  /// std::invalid_argument for atoms or agents outside the model.
  Event extension(const Formula& f) const;

  /// States where every atom in `atoms` is decided.
  StateSet defined_set(AtomSet atoms) const;
  bool defined_at(StateId s, const Formula& f) const;
  /// Atoms of f undecided at s.
  AtomSet undefined_atoms(StateId s, const Formula& f) const;
  /// Throws UndefinedFormula when f is undefined at s.
  bool sat(StateId s, const Formula& f) const;
  /// Every defined state satisfies f.
  bool valid(const Formula& f) const;

  Event top() const { return omega(frame()); }
  const Event& atom(int id) const { return model().valuation.at(id); }
  Event modal(Op op, int agent, const Event& e) const;

 private:
  const HMSFrame& frame() const { return ops_.frame(); }

  HMSOperators ops_;
  std::vector<StateSet> decided_;  // [atom]
};

Event extension(const HMSModel& m, const Formula& f);
bool defined_at(const HMSModel& m, StateId s, const Formula& f);
bool hms_sat(const HMSModel& m, StateId s, const Formula& f);
bool valid_in(const HMSModel& m, const Formula& f);
/// Truth at every world of every K_psi whose atoms cover those of f.
bool valid_in(const FHCategory& c, const Formula& f);

}  // namespace uakit

#endif
