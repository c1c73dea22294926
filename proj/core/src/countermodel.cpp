#include "uakit/countermodel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace uakit {

namespace {

/// All set partitions of n elements as restricted growth strings.
std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> go = [&](int k, int blocks) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      cur[k] = b;
      go(k + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) {
    cur[0] = 0;
    go(1, 1);
  }
  return out;
}

/// Per agent: a partition plus an awareness subset for each block.
struct AgentShape {
  std::vector<std::vector<int>> blocks;
  std::vector<AtomSet> awareness;  // per world
};

std::vector<AgentShape> agent_shapes(int n, const std::vector<AtomSet>& subsets) {
  std::vector<AgentShape> out;
  for (const auto& part : partitions(n)) {
    const int nb = *std::max_element(part.begin(), part.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (int w = 0; w < n; ++w) blocks[part[w]].push_back(w);
    std::vector<int> choice(nb, 0);
    while (true) {
      AgentShape s;
      s.blocks = blocks;
      s.awareness.resize(n);
      for (int w = 0; w < n; ++w) s.awareness[w] = subsets[choice[part[w]]];
      out.push_back(std::move(s));
      int k = 0;
      while (k < nb && ++choice[k] == static_cast<int>(subsets.size())) choice[k++] = 0;
      if (k == nb) break;
    }
  }
  return out;
}

/// Non-decreasing sequences of labels, one per world.
std::vector<std::vector<int>> label_sequences(int n, int labels) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> go = [&](int k, int lo) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int l = lo; l < labels; ++l) {
      cur[k] = l;
      go(k + 1, l);
    }
  };
  go(0, 0);
  return out;
}

std::uint64_t shapes_count(int n, int subsets) {
  std::uint64_t total = 0;
  for (const auto& part : partitions(n)) {
    const int nb = *std::max_element(part.begin(), part.end()) + 1;
    std::uint64_t c = 1;
    for (int b = 0; b < nb; ++b) c *= static_cast<std::uint64_t>(subsets);
    total += c;
  }
  return total;
}

}  // namespace

std::uint64_t countermodel_candidates(int max_worlds, int atoms, int agents) {
  const int subsets = 1 << atoms;
  std::uint64_t total = 0;
  for (int n = 1; n <= max_worlds; ++n) {
    std::uint64_t per = label_sequences(n, subsets).size();
    const std::uint64_t shapes = shapes_count(n, subsets);
    for (int i = 0; i < agents; ++i) per *= shapes;
    total += per;
  }
  return total;
}

std::optional<Countermodel> bounded_countermodel_search(const Formula& f, const Vocabulary& vocab, int max_worlds,
                                                        int max_atoms, int agents) {
  if (max_worlds < 1 || max_worlds > kCountermodelMaxWorlds)
    throw std::length_error("max_worlds must be between 1 and " + std::to_string(kCountermodelMaxWorlds));
  if (max_atoms < 0 || max_atoms > kCountermodelMaxAtoms)
    throw std::length_error("max_atoms must be between 0 and " + std::to_string(kCountermodelMaxAtoms));
  if (agents < 1) throw std::invalid_argument("agents must be positive");
  if (f.max_agent() >= agents) throw std::invalid_argument("formula mentions an agent beyond the bound");
  const AtomSet phi = f.atoms();
  if (phi.size() > max_atoms) throw std::length_error("formula has more atoms than max_atoms");
  if (!phi.subset_of(vocab.all())) throw std::invalid_argument("formula atoms are not in the vocabulary");
  if (countermodel_candidates(max_worlds, phi.size(), agents) > kCountermodelBudget)
    throw std::length_error("search space exceeds the candidate budget");

  const std::vector<AtomSet> subsets = phi.subsets();
  for (int n = 1; n <= max_worlds; ++n) {
    const auto shapes = agent_shapes(n, subsets);
    FHModel k;
    k.vocabulary = vocab;
    k.vocab = phi;
    k.agents = agents;
    for (int w = 0; w < n; ++w) k.worlds.push_back("w" + std::to_string(w));
    k.relations.resize(agents);
    k.awareness.resize(agents);
    std::vector<std::size_t> pick(agents, 0);
    for (const auto& labels : label_sequences(n, static_cast<int>(subsets.size()))) {
      k.valuation.assign(vocab.size(), WorldSet(n));
      for (int w = 0; w < n; ++w)
        for (int p : subsets[labels[w]].members()) k.valuation[p].set(w);
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        for (int i = 0; i < agents; ++i) {
          k.relations[i] = shapes[pick[i]].blocks;
          k.awareness[i] = shapes[pick[i]].awareness;
        }
        const WorldSet ext = FHChecker(k).extension(f);
        if (!ext.all()) {
          for (int w = 0; w < n; ++w)
            if (!ext.test(w)) return Countermodel{k, w};
        }
        int i = 0;
        while (i < agents && ++pick[i] == shapes.size()) pick[i++] = 0;
        if (i == agents) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace uakit
