#ifndef UAKIT_COUNTERMODEL_HPP
#define UAKIT_COUNTERMODEL_HPP

#include <cstdint>
#include <optional>

#include "uakit/fh.hpp"
#include "uakit/formula.hpp"

namespace uakit {

struct Countermodel {
  FHModel model;
  int world = 0;
};

/// Bounds accepted by the search.
inline constexpr int kCountermodelMaxWorlds = 4;
inline constexpr int kCountermodelMaxAtoms = 2;
/// Candidate models the search will enumerate before refusing.
inline constexpr std::uint64_t kCountermodelBudget = 4'000'000;

/// Enumerates partitional FH models whose awareness is generated by atoms
/// and constant on blocks, up to `max_worlds` worlds over the atoms of f
/// (named from `vocab`), and returns a world where f is false.
///
/// Throws std::length_error when the bounds exceed the limits above, f has
/// more than `max_atoms` atoms, or the candidate count exceeds the budget.
/// Throws std::invalid_argument when f uses an agent beyond `agents`.
std::optional<Countermodel> bounded_countermodel_search(const Formula& f, const Vocabulary& vocab, int max_worlds,
                                                        int max_atoms, int agents);

/// Candidate models enumerated for the given shape.
std::uint64_t countermodel_candidates(int max_worlds, int atoms, int agents);

}  // namespace uakit

#endif
