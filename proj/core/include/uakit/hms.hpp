#ifndef UAKIT_HMS_HPP
#define UAKIT_HMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "uakit/frame.hpp"

namespace uakit {

/// Possibility sets per agent and state: [agent][state].
using Correspondence = std::vector<std::vector<StateSet>>;
/// Awareness level per agent and state, as the index of a space.
using AwarenessFn = std::vector<std::vector<AtomSet>>;

enum class ModelKind { Plain, Complemented, ImplicitKnowledgeBased, ComplementedImplicitKnowledgeBased, Incomplete };

std::string to_string(ModelKind k);

struct HMSModel {
  HMSFrame frame;
  int agents = 1;
  std::vector<Event> valuation;  // by atom id
  std::optional<Correspondence> pi;
  std::optional<Correspondence> lambda;
  std::optional<AwarenessFn> alpha;

  ModelKind kind() const;
};

/// Event operators of one model. Each operator computes its raw set over
/// all states and reads it back as an event based on S(E); a raw set that
/// is not such an event raises ModelError.
class HMSOperators {
 public:
  explicit HMSOperators(const HMSModel& m);

  const HMSModel& model() const { return *m_; }
  const HMSFrame& frame() const { return m_->frame; }

  Event K(int agent, const Event& e) const;
  Event A(int agent, const Event& e) const;
  Event U(int agent, const Event& e) const;
  Event L(int agent, const Event& e) const;
  Event Astar(int agent, const Event& e) const;

  Event neg(const Event& e) const { return event_negate(frame(), e); }
  Event meet(const Event& a, const Event& b) const { return event_intersect(frame(), a, b); }
  Event join(const Event& a, const Event& b) const { return event_union(frame(), a, b); }

  /// Space containing pi(agent, s); throws ModelError if pi is not confined to one space.
  AtomSet pi_space(int agent, StateId s) const;

 private:
  Event finish(const StateSet& raw, AtomSet space, const char* op, int agent) const;
  void require(bool present, const char* what) const;

  const HMSModel* m_;
  std::vector<std::vector<AtomSet>> pi_space_;
  std::vector<std::vector<bool>> pi_confined_;
};

Event k_op(const HMSModel& m, int agent, const Event& e);
Event a_op(const HMSModel& m, int agent, const Event& e);
Event u_op(const HMSModel& m, int agent, const Event& e);
Event l_op(const HMSModel& m, int agent, const Event& e);
Event a_star_op(const HMSModel& m, int agent, const Event& e);

/// Confinement, Generalized Reflexivity, Stationarity, PPI and PPK, plus
/// the comparable-spaces consequence.
ValidationReport validate_pi(const HMSModel& m);
/// Reflexivity, Stationarity, PPIK and (with pi) both measurability
/// properties, plus derived consequences.
ValidationReport validate_lambda(const HMSModel& m);
/// Properties O and I to IV of awareness functions.
ValidationReport validate_alpha(const HMSModel& m);
/// Valuation shape; warns when S(v(p)) is not S_{p}.
ValidationReport validate_valuation(const HMSModel& m);
/// Frame, valuation, and every correspondence present.
ValidationReport validate_hms(const HMSModel& m);

/// Clause ids checked by each validator, in report order.
const std::vector<std::string>& pi_clauses();
const std::vector<std::string>& lambda_clauses();
const std::vector<std::string>& alpha_clauses();

/// Explicit sets obtained by projecting lambda onto alpha at each state.
/// Throws ModelError when the defining equation fails for some (state,
/// subspace) pair; the message carries the lambda and alpha reports.
Correspondence derive_pi_star(const HMSModel& m);

/// Re-check pi_star(w_phi) = lambda(w) projected to alpha(w_phi) for all w, phi.
ValidationReport audit_pi_star(const HMSModel& m, const Correspondence& pi_star);

/// Copy of m with pi replaced by the derived correspondence.
HMSModel with_pi_star(const HMSModel& m);

}  // namespace uakit

#endif
