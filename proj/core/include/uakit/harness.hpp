#ifndef UAKIT_HARNESS_HPP
#define UAKIT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uakit/category.hpp"
#include "uakit/hms.hpp"

namespace uakit {

struct GenParams {
  int atoms = 2;   // at most 3
  int worlds = 3;  // at most 4; for direct HMS generation, states in the top space
  int agents = 1;  // at most 2
};

/// Throws std::invalid_argument when params exceed the caps.
void check_params(const GenParams& p);

/// Atom names used by the generators: p, q, r, then p3, p4, ...
Vocabulary standard_vocabulary(int atoms);

/// Random FH model; deterministic in (params, seed) and always valid.
FHModel gen_fh(const GenParams& p, std::uint64_t seed);

enum class GenStrategy { ViaTransform, Direct };

std::string to_string(GenStrategy s);
/// Accepts "via-transform" or "direct".
GenStrategy parse_gen_strategy(const std::string& s);

struct Generated {
  HMSModel model;
  GenStrategy used = GenStrategy::ViaTransform;
  int attempts = 0;
  bool fell_back = false;
};

/// Raised when direct generation runs out of retries.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Implicit-knowledge-based model (lambda and alpha). ViaTransform runs the
/// truncated transform on gen_fh; Direct builds a random lattice and
/// correspondences, retrying up to `retries` times.
Generated gen_ikb(const GenParams& p, std::uint64_t seed, GenStrategy s, int retries = 32);

/// Complemented model (pi and lambda). Direct derives pi from a direct ikb
/// model. When direct generation fails the result falls back to
/// ViaTransform and says so.
Generated gen_hms(const GenParams& p, std::uint64_t seed, GenStrategy s, int retries = 32);

/// Direct generation without fallback; throws GenerationError.
HMSModel gen_ikb_direct(const GenParams& p, std::uint64_t seed, int retries, int* attempts = nullptr);

struct PropertyResult {
  std::string group;  // "knowledge", "awareness", "implicit", "interaction", "derived", "lemma", "category"
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // capped

  static constexpr std::size_t kMaxWitnesses = 4;
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool ok() const;
  std::size_t failures() const;
  std::size_t instances() const;
  /// Only the results whose group is in `groups`.
  PropertyReport filter(const std::vector<std::string>& groups) const;
  std::string to_string() const;
};

struct PropertyOptions {
  /// Conjunction laws are checked on all pairs of events and on triples;
  /// 0 checks every triple, otherwise a fixed-seed sample of this size.
  std::size_t triple_limit = 0;
  int depth = 3;  // formula depth for category checks
};

/// Every operator property the model's correspondences support: explicit
/// knowledge and awareness with pi, implicit knowledge with lambda, their
/// interaction with both, and derived-correspondence checks with lambda and alpha.
PropertyReport property_suite(const HMSModel& m, const PropertyOptions& opts = {});

/// Category validity, sublanguage invariance across morphisms, and the
/// class membership of its transform.
PropertyReport property_suite(const FHCategory& c, const PropertyOptions& opts = {});

/// Short label of an event: base states and base space.
std::string event_label(const HMSFrame& f, const Event& e);

/// A state bijection between two models respecting spaces, projections,
/// valuation and every correspondence present in both, if one exists.
/// Intended for small models.
std::optional<std::vector<StateId>> find_isomorphism(const HMSModel& a, const HMSModel& b);

}  // namespace uakit

#endif
