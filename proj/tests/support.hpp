#ifndef UAKIT_TESTS_SUPPORT_HPP
#define UAKIT_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>

#include "uakit/formula.hpp"
#include "uakit/frame.hpp"
#include "uakit/hms.hpp"

namespace uakit::test {

inline std::string fixture(const std::string& name) { return std::string(UAKIT_FIXTURE_DIR) + "/" + name; }

inline StateSet states(const HMSFrame& f, std::initializer_list<const char*> names) {
  StateSet s = f.empty_set();
  for (const char* n : names) s.set(f.state(n));
  return s;
}

/// Random AST over the first `atoms` atoms, using every constructor the
/// parser accepts, including the sugared ones.
inline Formula random_formula(std::mt19937_64& rng, int atoms, int agents, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (depth == 0 || pick(4) == 0) {
    const int k = pick(atoms + 1);
    return k == atoms ? Formula::top() : Formula::atom(k);
  }
  auto sub = [&] { return random_formula(rng, atoms, agents, depth - 1); };
  switch (pick(8)) {
    case 0: return Formula::neg(sub());
    case 1: return Formula::conj(sub(), sub());
    case 2: return Formula::disj(sub(), sub());
    case 3: return Formula::implies(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    case 5: return Formula::L(pick(agents), sub());
    case 6: return Formula::A(pick(agents), sub());
    default: return Formula::K(pick(agents), sub());
  }
}

/// Up-closure by definition: states whose projection to some space lands in x.
inline StateSet naive_up(const HMSFrame& f, const StateSet& x) {
  StateSet out = f.empty_set();
  for (StateId s = 0; s < f.num_states(); ++s)
    for (StateId t = 0; t < f.num_states(); ++t)
      if (x.test(t) && f.space_of(t).subset_of(f.space_of(s)) && f.project(s, f.space_of(t)) == t) out.set(s);
  return out;
}

}  // namespace uakit::test

#endif
