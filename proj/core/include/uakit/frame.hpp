#ifndef UAKIT_FRAME_HPP
#define UAKIT_FRAME_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uakit/atoms.hpp"
#include "uakit/report.hpp"

namespace uakit {

using StateId = int;
using StateSet = boost::dynamic_bitset<std::uint64_t>;

/// Lattice of disjoint state spaces indexed by subsets of the vocabulary,
/// with projections stored on covering pairs phi -> phi minus one atom.
///
/// Construct through FrameBuilder.
class HMSFrame {
 public:
  HMSFrame() = default;

  const Vocabulary& vocabulary() const { return vocab_; }
  AtomSet at() const { return vocab_.all(); }
  int num_states() const { return static_cast<int>(names_.size()); }
  int num_spaces() const { return 1 << vocab_.size(); }

  AtomSet space_of(StateId s) const { return space_of_[s]; }
  const std::vector<StateId>& space(AtomSet phi) const { return spaces_[phi.bits()]; }
  /// S_phi as a set over all states.
  const StateSet& space_set(AtomSet phi) const { return space_sets_[phi.bits()]; }
  /// States in spaces at least as expressive as S_phi.
  const StateSet& above(AtomSet phi) const { return above_[phi.bits()]; }
  StateSet empty_set() const { return StateSet(num_states()); }

  const std::string& name(StateId s) const { return names_[s]; }
  std::optional<StateId> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  StateId state(std::string_view name) const;

  /// Throws std::invalid_argument unless psi is within space_of(s).
  StateId project(StateId s, AtomSet psi) const;
  /// Covering projection dropping `atom`, or -1 if atom is not in the space.
  StateId cover(StateId s, int atom) const { return cover_[s][atom]; }

  /// Image of x in S_psi; members whose space does not contain psi are skipped.
  StateSet project_set(const StateSet& x, AtomSet psi) const;
  /// Union of the up-closures of the parts of x in each space.
  StateSet up(const StateSet& x) const;

  /// Extra projection pairs given in input files (non-covering), kept for validation.
  struct ExtraProjection {
    StateId from;
    AtomSet target;
    StateId to;
  };
  const std::vector<ExtraProjection>& extra_projections() const { return extra_; }

  std::string describe(const StateSet& x) const;

 private:
  friend class FrameBuilder;
  StateId compose(StateId s, AtomSet psi) const;

  Vocabulary vocab_;
  std::vector<std::string> names_;
  std::vector<AtomSet> space_of_;
  std::vector<std::vector<StateId>> spaces_;
  std::vector<StateSet> space_sets_;
  std::vector<StateSet> above_;
  std::vector<std::vector<StateId>> cover_;  // [state][atom]
  std::vector<std::vector<StateId>> table_;  // [state][mask], empty when too large
  std::vector<ExtraProjection> extra_;
};

class FrameBuilder {
 public:
  explicit FrameBuilder(Vocabulary vocab);

  StateId add_state(std::string name, AtomSet space);
  /// For covering pairs this defines the projection; other pairs are
  /// recorded and checked against the composed projection.
  void set_projection(StateId from, AtomSet target, StateId to);

  /// Throws ModelError if a name repeats, a space is empty, or a covering
  /// projection is missing or lands in the wrong space.
  HMSFrame build() const;

 private:
  Vocabulary vocab_;
  std::vector<std::string> names_;
  std::vector<AtomSet> spaces_;
  std::vector<std::vector<StateId>> cover_;
  std::vector<HMSFrame::ExtraProjection> extra_;
};

/// Surjectivity of covering projections, agreement of composition paths,
/// and consistency of any extra projections.
ValidationReport validate_frame(const HMSFrame& f);

/// An event: base-space, base, and the materialized up-closure.
///
/// Equality compares base-space and base only; the extension follows.
struct Event {
  AtomSet space;
  StateSet base;
  StateSet ext;

  bool empty() const { return base.none(); }
  friend bool operator==(const Event& a, const Event& b) { return a.space == b.space && a.base == b.base; }
};

struct EventHash {
  std::size_t operator()(const Event& e) const noexcept;
};

/// Base must lie in S_space; throws std::invalid_argument otherwise.
Event make_event(const HMSFrame& f, AtomSet space, const StateSet& base);
/// The vacuous event tagged with S_space.
Event empty_event(const HMSFrame& f, AtomSet space);
/// S_space^up.
Event full_event(const HMSFrame& f, AtomSet space);
/// Every state; the same as full_event(f, {}).
Event omega(const HMSFrame& f);

const StateSet& up_closure(const Event& e);
Event event_negate(const HMSFrame& f, const Event& e);
/// Throws std::invalid_argument on an empty list.
Event event_intersect(const HMSFrame& f, std::span<const Event> es);
Event event_intersect(const HMSFrame& f, const Event& a, const Event& b);
Event event_union(const HMSFrame& f, std::span<const Event> es);
Event event_union(const HMSFrame& f, const Event& a, const Event& b);

/// Reads an arbitrary set of states as an event. Empty sets get the tag
/// `empty_tag`. Returns nullopt if x is not up-closed over a single minimal space.
std::optional<Event> event_from_set(const HMSFrame& f, const StateSet& x, AtomSet empty_tag);

/// Every (space, subset of the space) pair, spaces in mask order.
std::vector<Event> enumerate_events(const HMSFrame& f);

}  // namespace uakit

#endif
