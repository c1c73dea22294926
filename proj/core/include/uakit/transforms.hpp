#ifndef UAKIT_TRANSFORMS_HPP
#define UAKIT_TRANSFORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "uakit/category.hpp"
#include "uakit/hms.hpp"

namespace uakit {

struct TransformTrace {
  std::string source_digest;
  std::string target;  // "hms", "ikb", "fh", "fh-star"
  std::vector<std::string> steps;
  /// FH to HMS: the state in S_phi paired with each world of the source model.
  std::map<AtomSet, std::vector<StateId>> world_to_state;
  /// HMS to FH: the top-space state behind each world of the result.
  std::vector<StateId> state_of_world;
};

template <class Model>
struct Transformed {
  Model model;
  TransformTrace trace;
};

/// Implicit-knowledge-based model whose spaces are the world sets of the
/// category. Throws std::invalid_argument if the category does not validate
/// and ModelError if some valuation is not an event. The trace pairs worlds
/// of model(at) with states.
Transformed<HMSModel> t_transform(const FHCategory& c);

/// Category construction followed by t_transform; the trace pairs worlds of k.
Transformed<HMSModel> truncated_hms_transform(const FHModel& k, RestrictMode mode = RestrictMode::Copy);

/// truncated_hms_transform, then derive_pi_star, then drop awareness.
Transformed<HMSModel> hms_transform(const FHModel& k, RestrictMode mode = RestrictMode::Copy);

/// FH model on S_At with awareness read off the spaces of the possibility
/// sets. Throws std::invalid_argument unless m validates with pi and lambda.
Transformed<FHModel> fh_transform(const HMSModel& m);

/// As fh_transform, with awareness taken from alpha.
Transformed<FHModel> fh_star_transform(const HMSModel& m);

}  // namespace uakit

#endif
