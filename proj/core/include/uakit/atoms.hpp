#ifndef UAKIT_ATOMS_HPP
#define UAKIT_ATOMS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uakit {

/// Hard ceiling on vocabulary size; spaces are indexed by 32-bit masks.
inline constexpr int kAtomCeiling = 16;

/// Effective cap: UAKIT_MAX_ATOMS if set (clamped to [0, 16]), else 16.
int max_atoms();

/// A subset of a vocabulary, stored as a bitmask over atom ids.
class AtomSet {
 public:
  constexpr AtomSet() = default;

  static constexpr AtomSet from_bits(std::uint32_t bits) {
    AtomSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr AtomSet single(int atom) { return from_bits(std::uint32_t{1} << atom); }
  static constexpr AtomSet first(int n) {
    return from_bits(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int atom) const { return (bits_ >> atom) & 1u; }
  constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr AtomSet operator|(AtomSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr AtomSet operator-(AtomSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr AtomSet& operator|=(AtomSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool operator==(const AtomSet&) const = default;
  constexpr auto operator<=>(const AtomSet&) const = default;

  /// Atom ids in ascending order.
  std::vector<int> members() const;

  /// Every subset of this set, in increasing mask order.
  std::vector<AtomSet> subsets() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Ordered list of atom names; the position of a name is its id.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int atom) const { return names_.at(atom); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  AtomSet all() const { return AtomSet::first(size()); }

  /// Comma-joined sorted names, "" for the empty set.
  std::string key(AtomSet s) const;
  /// Inverse of key(); throws std::invalid_argument on unknown names.
  AtomSet parse_key(std::string_view key) const;
  /// Names of the members of s, in id order.
  std::vector<std::string> names_of(AtomSet s) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Atom names must match [a-z][A-Za-z0-9_]*.
bool valid_atom_name(std::string_view name);

}  // namespace uakit

template <>
struct std::hash<uakit::AtomSet> {
  std::size_t operator()(uakit::AtomSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

#endif
