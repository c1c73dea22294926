#include "uakit/atoms.hpp"

#include <algorithm>
#include <cstdlib>

namespace uakit {

int max_atoms() {
  const char* env = std::getenv("UAKIT_MAX_ATOMS");
  if (env == nullptr || *env == '\0') return kAtomCeiling;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return kAtomCeiling;
  return static_cast<int>(std::clamp<long>(v, 0, kAtomCeiling));
}

std::vector<int> AtomSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<AtomSet> AtomSet::subsets() const {
  // Enumerate submasks, then sort so the order is by mask value.
  std::vector<AtomSet> out;
  std::uint32_t s = bits_;
  while (true) {
    out.push_back(from_bits(s));
    if (s == 0) break;
    s = (s - 1) & bits_;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Vocabulary::Vocabulary(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > max_atoms())
    throw std::invalid_argument("vocabulary has " + std::to_string(names_.size()) +
                                " atoms; the cap is " + std::to_string(max_atoms()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_atom_name(names_[i])) throw std::invalid_argument("invalid atom name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw std::invalid_argument("duplicate atom name '" + names_[i] + "'");
  }
}

std::optional<int> Vocabulary::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::string> Vocabulary::names_of(AtomSet s) const {
  std::vector<std::string> out;
  for (int a : s.members()) out.push_back(name(a));
  return out;
}

std::string Vocabulary::key(AtomSet s) const {
  auto names = names_of(s);
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

AtomSet Vocabulary::parse_key(std::string_view key) const {
  AtomSet out;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t end = key.find(',', start);
    if (end == std::string_view::npos) end = key.size();
    auto part = key.substr(start, end - start);
    auto id = find(part);
    if (!id) throw std::invalid_argument("unknown atom '" + std::string(part) + "' in space key");
    out |= AtomSet::single(*id);
    start = end + 1;
  }
  return out;
}

}  // namespace uakit
