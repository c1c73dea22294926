#ifndef UAKIT_CATEGORY_HPP
#define UAKIT_CATEGORY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uakit/fh.hpp"

namespace uakit {

enum class RestrictMode { Copy, Quotient };

std::string to_string(RestrictMode m);
/// Accepts "copy" or "quotient".
RestrictMode parse_restrict_mode(const std::string& s);

/// World map of a bounded morphism; source and target are held elsewhere.
using WorldMap = std::vector<int>;

ValidationReport validate_bounded_morphism(const FHModel& source, const FHModel& target, const WorldMap& f);

struct Restriction {
  FHModel model;
  WorldMap morphism;  // K_At worlds -> restricted worlds
};

/// The subjective view of k_at for the atoms phi. Worlds get the tag
/// "@{phi}" so that restrictions to different sets never share names.
Restriction restrict_model(const FHModel& k_at, AtomSet phi, RestrictMode mode);

/// Class of each world in the coarsest partition that refines (valuation
/// on phi, awareness on phi) and is stable under every agent's relation.
/// Classes are numbered by first occurrence.
std::vector<int> bisimulation_classes(const FHModel& k, AtomSet phi);

class FHCategory {
 public:
  Vocabulary vocabulary;
  AtomSet at;
  RestrictMode mode = RestrictMode::Copy;
  std::map<AtomSet, FHModel> models;
  std::map<std::pair<AtomSet, AtomSet>, WorldMap> morphisms;  // (phi, psi) with psi within phi
  FHModel base;
  WorldMap from_base;  // worlds of the base model -> worlds of model(at)

  const FHModel& model(AtomSet phi) const;
  const WorldMap& morphism(AtomSet phi, AtomSet psi) const;
};

/// Throws std::invalid_argument if k_at fails validate_fh or has too many atoms.
FHCategory build_category(const FHModel& k_at, RestrictMode mode);

ValidationReport validate_category(const FHCategory& c);

}  // namespace uakit

#endif
