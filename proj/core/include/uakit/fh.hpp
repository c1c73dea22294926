#ifndef UAKIT_FH_HPP
#define UAKIT_FH_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uakit/atoms.hpp"
#include "uakit/formula.hpp"
#include "uakit/report.hpp"

namespace uakit {

using WorldSet = boost::dynamic_bitset<std::uint64_t>;

/// Finite awareness model over the sublanguage `vocab`.
///
/// Relations are stored as per-agent partitions, awareness as the
/// generating atom set of each agent at each world.
struct FHModel {
  Vocabulary vocabulary;  // names for every atom id that may occur
  AtomSet vocab;          // the atoms this model speaks about
  int agents = 1;
  std::vector<std::string> worlds;
  std::vector<std::vector<std::vector<int>>> relations;  // [agent][block] -> worlds
  std::vector<std::vector<AtomSet>> awareness;           // [agent][world]
  std::vector<WorldSet> valuation;                       // [atom id], sized to worlds

  int num_worlds() const { return static_cast<int>(worlds.size()); }
  std::optional<int> find_world(std::string_view name) const;
  /// Throws std::out_of_range for an unknown name.
  int world(std::string_view name) const;
};

ValidationReport validate_fh(const FHModel& k);

/// Evaluates formulas on one FH model by computing extensions.
class FHChecker {
 public:
  /// Throws ModelError when the relations are not partitions.
  explicit FHChecker(const FHModel& k);

  const FHModel& model() const { return *k_; }
  int num_worlds() const { return k_->num_worlds(); }

  WorldSet all() const { return WorldSet(num_worlds()).set(); }
  const WorldSet& atom(int id) const { return k_->valuation.at(id); }
  /// Worlds whose block for `agent` lies inside x.
  WorldSet box(int agent, const WorldSet& x) const;
  /// Worlds where `agent` is aware of every atom in `atoms`.
  WorldSet aware(int agent, AtomSet atoms) const;

  /// Throws std::invalid_argument if f leaves the model's sublanguage or
  /// names an agent the model does not have.
  WorldSet extension(const Formula& f) const;
  bool sat(int world, const Formula& f) const;

  int block_of(int agent, int world) const { return block_of_[agent][world]; }

 private:
  WorldSet eval(const Formula& f) const;

  const FHModel* k_;
  std::vector<std::vector<int>> block_of_;
  std::vector<std::vector<WorldSet>> block_sets_;
};

bool aw_contains(const FHModel& k, int agent, int world, const Formula& f);
bool fh_sat(const FHModel& k, int world, const Formula& f);

}  // namespace uakit

#endif
