#ifndef UAKIT_MUTATIONS_HPP
#define UAKIT_MUTATIONS_HPP

#include <string>
#include <vector>

#include "uakit/hms.hpp"

namespace uakit {

/// One changed entry of a correspondence or awareness function.
struct MutationEdit {
  enum class Target { Pi, Lambda, Alpha };
  Target target = Target::Pi;
  int agent = 0;
  std::string state;
  std::vector<std::string> states;  // new set, for Pi and Lambda
  std::vector<std::string> atoms;   // new awareness, for Alpha
};

struct Mutation {
  std::string clause;  // the clause expected to fire
  std::string base;    // a sample_model name
  std::string description;
  std::vector<MutationEdit> edits;
  std::vector<std::string> drop;  // "pi", "lambda" or "alpha", removed before editing
  /// Other assumption clauses that necessarily fire with this one.
  std::vector<std::string> entailed;
};

/// The fifteen assumption clauses: five each for pi, lambda and alpha.
std::vector<std::string> assumption_clauses();

/// One mutation per assumption clause, in assumption_clauses() order.
const std::vector<Mutation>& mutation_catalog();

/// Names accepted by sample_model.
const std::vector<std::string>& sample_names();

/// The named sample model; throws std::invalid_argument for unknown names.
HMSModel sample_model(const std::string& name);

/// Base model with the edits applied. Throws std::out_of_range for unknown states.
HMSModel apply_mutation(const Mutation& mu);

/// Expected assumption clauses for a mutation: its clause plus the entailed ones, sorted.
std::vector<std::string> expected_assumptions(const Mutation& mu);

/// Assumption clauses with errors in validate_hms(m), in assumption_clauses() order.
std::vector<std::string> fired_assumptions(const HMSModel& m);

}  // namespace uakit

#endif
