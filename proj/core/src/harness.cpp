#include "uakit/harness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "uakit/transforms.hpp"

namespace uakit {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

AtomSet random_subset(Rng& rng, AtomSet of) {
  AtomSet out;
  for (int a : of.members())
    if (rng() & 1u) out |= AtomSet::single(a);
  return out;
}

/// Restricted growth string: block index of each element.
std::vector<int> random_partition(Rng& rng, int n) {
  std::vector<int> block(n, 0);
  int next = 1;
  for (int w = 1; w < n; ++w) {
    block[w] = pick(rng, next + 1);
    if (block[w] == next) ++next;
  }
  return block;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::string tag(const Vocabulary& v, AtomSet phi) { return "@{" + v.key(phi) + "}"; }

std::optional<HMSModel> try_direct_ikb(const GenParams& p, Rng& rng) {
  const Vocabulary vocab = standard_vocabulary(p.atoms);
  const AtomSet at = vocab.all();
  const int n = p.worlds;
  const int spaces = 1 << p.atoms;

  // Indistinguishability of top states in each space; coarser for smaller spaces.
  std::vector<UnionFind> eq(spaces, UnionFind(n));
  std::vector<AtomSet> order = at.subsets();
  std::sort(order.begin(), order.end(), [](AtomSet a, AtomSet b) { return a.size() > b.size(); });
  for (AtomSet phi : order) {
    UnionFind& u = eq[phi.bits()];
    for (int a : (at - phi).members()) {
      UnionFind& up = eq[(phi | AtomSet::single(a)).bits()];
      for (int w = 0; w < n; ++w) u.unite(w, up.find(w));
    }
    if (phi == at) continue;
    for (int w = 0; w < n; ++w)
      for (int x = w + 1; x < n; ++x)
        if (pick(rng, 3) == 0) u.unite(w, x);
  }

  FrameBuilder b(vocab);
  std::vector<std::vector<StateId>> state_of(spaces, std::vector<StateId>(n, -1));  // [space][top state]
  for (AtomSet phi : at.subsets()) {
    UnionFind& u = eq[phi.bits()];
    for (int w = 0; w < n; ++w) {
      const int r = u.find(w);
      if (state_of[phi.bits()][r] < 0)
        state_of[phi.bits()][r] = b.add_state(phi == at ? "w" + std::to_string(r) : "w" + std::to_string(r) + tag(vocab, phi), phi);
      state_of[phi.bits()][w] = state_of[phi.bits()][r];
    }
  }
  for (AtomSet phi : at.subsets())
    for (int a : phi.members())
      for (int w = 0; w < n; ++w)
        b.set_projection(state_of[phi.bits()][w], phi - AtomSet::single(a), state_of[(phi - AtomSet::single(a)).bits()][w]);
  HMSFrame f = b.build();

  HMSModel m;
  m.agents = p.agents;
  Correspondence lam(p.agents, std::vector<StateSet>(f.num_states(), f.empty_set()));
  AwarenessFn alpha(p.agents, std::vector<AtomSet>(f.num_states()));
  for (int i = 0; i < p.agents; ++i) {
    UnionFind blocks(n);
    std::vector<int> part = random_partition(rng, n);
    for (int w = 0; w < n; ++w)
      for (int x = 0; x < w; ++x)
        if (part[w] == part[x]) blocks.unite(w, x);
    // Top states sharing a lower state must have the same projected block;
    // merging their blocks repairs any clash.
    auto projected = [&](int w, AtomSet phi) {
      StateSet top = f.empty_set();
      for (int x = 0; x < n; ++x)
        if (blocks.find(x) == blocks.find(w)) top.set(state_of[at.bits()][x]);
      return f.project_set(top, phi);
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (AtomSet phi : at.subsets())
        for (int w = 0; w < n; ++w) {
          const int r = eq[phi.bits()].find(w);
          if (blocks.find(w) != blocks.find(r) && projected(w, phi) != projected(r, phi)) changed |= blocks.unite(w, r);
        }
    }

    std::vector<AtomSet> aw(n);
    for (int w = 0; w < n; ++w)
      if (blocks.find(w) == w) aw[w] = random_subset(rng, at);
    for (int w = 0; w < n; ++w) aw[w] = aw[blocks.find(w)];
    // awareness restricted to a space must not depend on the top state chosen
    for (bool changed = true; changed;) {
      changed = false;
      for (AtomSet phi : at.subsets()) {
        UnionFind& u = eq[phi.bits()];
        for (int w = 0; w < n; ++w) {
          const int r = u.find(w);
          const AtomSet common = aw[w] & aw[r] & phi;
          for (int x : {w, r}) {
            const AtomSet next = aw[x] - (phi - common);
            if (next != aw[x]) {
              for (int y = 0; y < n; ++y)
                if (blocks.find(y) == blocks.find(x)) aw[y] = next;
              changed = true;
            }
          }
        }
      }
    }

    for (int w = 0; w < n; ++w) {
      StateSet top = f.empty_set();
      for (int x = 0; x < n; ++x)
        if (blocks.find(x) == blocks.find(w)) top.set(state_of[at.bits()][x]);
      for (AtomSet phi : at.subsets()) {
        const StateId s = state_of[phi.bits()][w];
        lam[i][s] = f.project_set(top, phi);
        alpha[i][s] = aw[w] & phi;
      }
    }
  }

  for (int a = 0; a < p.atoms; ++a) {
    const AtomSet sp = AtomSet::single(a);
    StateSet base = f.empty_set();
    for (StateId s : f.space(sp))
      if (rng() & 1u) base.set(s);
    m.valuation.push_back(make_event(f, sp, base));
  }
  m.frame = std::move(f);
  m.lambda = std::move(lam);
  m.alpha = std::move(alpha);
  if (!validate_hms(m).ok()) return std::nullopt;
  return m;
}

}  // namespace

void check_params(const GenParams& p) {
  if (p.atoms < 1 || p.atoms > 3) throw std::invalid_argument("atoms must be between 1 and 3");
  if (p.worlds < 1 || p.worlds > 4) throw std::invalid_argument("worlds must be between 1 and 4");
  if (p.agents < 1 || p.agents > 2) throw std::invalid_argument("agents must be 1 or 2");
}

Vocabulary standard_vocabulary(int atoms) {
  static const char* base[] = {"p", "q", "r"};
  std::vector<std::string> names;
  for (int a = 0; a < atoms; ++a) names.push_back(a < 3 ? base[a] : "p" + std::to_string(a));
  return Vocabulary(std::move(names));
}

FHModel gen_fh(const GenParams& p, std::uint64_t seed) {
  check_params(p);
  Rng rng(seed);
  FHModel k;
  k.vocabulary = standard_vocabulary(p.atoms);
  k.vocab = k.vocabulary.all();
  k.agents = p.agents;
  for (int w = 0; w < p.worlds; ++w) k.worlds.push_back("w" + std::to_string(w));
  for (int a = 0; a < p.atoms; ++a) {
    WorldSet v(p.worlds);
    for (int w = 0; w < p.worlds; ++w)
      if (rng() & 1u) v.set(w);
    k.valuation.push_back(std::move(v));
  }
  for (int i = 0; i < p.agents; ++i) {
    std::vector<int> part = random_partition(rng, p.worlds);
    const int blocks = *std::max_element(part.begin(), part.end()) + 1;
    std::vector<std::vector<int>> rel(blocks);
    std::vector<AtomSet> block_aw(blocks);
    for (auto& a : block_aw) a = random_subset(rng, k.vocab);
    std::vector<AtomSet> aw(p.worlds);
    for (int w = 0; w < p.worlds; ++w) {
      rel[part[w]].push_back(w);
      aw[w] = block_aw[part[w]];
    }
    k.relations.push_back(std::move(rel));
    k.awareness.push_back(std::move(aw));
  }
  return k;
}

std::string to_string(GenStrategy s) { return s == GenStrategy::Direct ? "direct" : "via-transform"; }

GenStrategy parse_gen_strategy(const std::string& s) {
  if (s == "direct") return GenStrategy::Direct;
  if (s == "via-transform") return GenStrategy::ViaTransform;
  throw std::invalid_argument("unknown strategy '" + s + "' (expected via-transform or direct)");
}

HMSModel gen_ikb_direct(const GenParams& p, std::uint64_t seed, int retries, int* attempts) {
  check_params(p);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < retries; ++k) {
    if (attempts) *attempts = k + 1;
    if (auto m = try_direct_ikb(p, rng)) return std::move(*m);
  }
  if (attempts) *attempts = retries;
  throw GenerationError("direct generation failed after " + std::to_string(retries) + " attempts");
}

Generated gen_ikb(const GenParams& p, std::uint64_t seed, GenStrategy s, int retries) {
  check_params(p);
  Generated g;
  if (s == GenStrategy::Direct) {
    try {
      g.model = gen_ikb_direct(p, seed, retries, &g.attempts);
      g.used = GenStrategy::Direct;
      return g;
    } catch (const GenerationError&) {
      g.fell_back = true;
    }
  }
  Rng rng(seed);
  const RestrictMode mode = (rng() & 1u) ? RestrictMode::Quotient : RestrictMode::Copy;
  g.model = truncated_hms_transform(gen_fh(p, seed), mode).model;
  g.used = GenStrategy::ViaTransform;
  return g;
}

Generated gen_hms(const GenParams& p, std::uint64_t seed, GenStrategy s, int retries) {
  check_params(p);
  Generated g;
  if (s == GenStrategy::Direct) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int k = 0; k < retries; ++k) {
      g.attempts = k + 1;
      auto m = try_direct_ikb(p, rng);
      if (!m) continue;
      HMSModel c = with_pi_star(*m);
      c.alpha.reset();
      if (!validate_hms(c).ok()) continue;
      g.model = std::move(c);
      g.used = GenStrategy::Direct;
      return g;
    }
    g.fell_back = true;
  }
  Rng rng(seed);
  const RestrictMode mode = (rng() & 1u) ? RestrictMode::Quotient : RestrictMode::Copy;
  g.model = hms_transform(gen_fh(p, seed), mode).model;
  g.used = GenStrategy::ViaTransform;
  return g;
}

std::string event_label(const HMSFrame& f, const Event& e) {
  return f.describe(e.base) + "^{" + f.vocabulary().key(e.space) + "}";
}

std::optional<std::vector<StateId>> find_isomorphism(const HMSModel& a, const HMSModel& b) {
  const HMSFrame& fa = a.frame;
  const HMSFrame& fb = b.frame;
  if (fa.vocabulary() != fb.vocabulary() || fa.num_states() != fb.num_states() || a.agents != b.agents) return std::nullopt;
  if (a.pi.has_value() != b.pi.has_value() || a.lambda.has_value() != b.lambda.has_value() ||
      a.alpha.has_value() != b.alpha.has_value())
    return std::nullopt;
  const std::vector<AtomSet> spaces = fa.at().subsets();
  double work = 1;
  for (AtomSet phi : spaces) {
    if (fa.space(phi).size() != fb.space(phi).size()) return std::nullopt;
    for (std::size_t k = 2; k <= fa.space(phi).size(); ++k) work *= static_cast<double>(k);
  }
  if (work > 1e6) throw std::length_error("models too large for isomorphism search");

  std::vector<StateId> map(fa.num_states(), -1);
  auto image = [&](const StateSet& x) {
    StateSet out = fb.empty_set();
    for (auto s = x.find_first(); s != StateSet::npos; s = x.find_next(s)) out.set(map[s]);
    return out;
  };
  auto same_corr = [&](const std::optional<Correspondence>& ca, const std::optional<Correspondence>& cb) {
    if (!ca) return true;
    for (int i = 0; i < a.agents; ++i)
      for (StateId s = 0; s < fa.num_states(); ++s)
        if (image((*ca)[i][s]) != (*cb)[i][map[s]]) return false;
    return true;
  };
  auto consistent = [&]() {
    for (StateId s = 0; s < fa.num_states(); ++s)
      for (int x : fa.space_of(s).members())
        if (fb.cover(map[s], x) != map[fa.cover(s, x)]) return false;
    for (std::size_t p = 0; p < a.valuation.size(); ++p)
      if (a.valuation[p].space != b.valuation[p].space || image(a.valuation[p].base) != b.valuation[p].base) return false;
    if (a.alpha)
      for (int i = 0; i < a.agents; ++i)
        for (StateId s = 0; s < fa.num_states(); ++s)
          if ((*a.alpha)[i][s] != (*b.alpha)[i][map[s]]) return false;
    return same_corr(a.pi, b.pi) && same_corr(a.lambda, b.lambda);
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == spaces.size()) return consistent();
    std::vector<StateId> target = fb.space(spaces[k]);
    std::sort(target.begin(), target.end());
    const std::vector<StateId>& src = fa.space(spaces[k]);
    do {
      for (std::size_t j = 0; j < src.size(); ++j) map[src[j]] = target[j];
      if (search(k + 1)) return true;
    } while (std::next_permutation(target.begin(), target.end()));
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

}  // namespace uakit
