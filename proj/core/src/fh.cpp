#include "uakit/fh.hpp"

#include <stdexcept>

namespace uakit {

std::optional<int> FHModel::find_world(std::string_view name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int FHModel::world(std::string_view name) const {
  auto w = find_world(name);
  if (!w) throw std::out_of_range("unknown world '" + std::string(name) + "'");
  return *w;
}

ValidationReport validate_fh(const FHModel& k) {
  ValidationReport r;
  const int n = k.num_worlds();
  if (n == 0) r.error("fh.partition", "model has no worlds");
  if (k.agents < 1) r.error("fh.partition", "model has no agents");
  if (static_cast<int>(k.relations.size()) != k.agents)
    r.error("fh.partition", "expected one partition per agent");
  if (static_cast<int>(k.awareness.size()) != k.agents)
    r.error("fh.domain", "expected one awareness map per agent");
  if (!k.vocab.subset_of(k.vocabulary.all())) r.error("fh.domain", "vocabulary subset names unknown atoms");

  for (std::size_t i = 0; i < k.relations.size(); ++i) {
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < k.relations[i].size(); ++b) {
      if (k.relations[i][b].empty()) r.error("fh.partition", "agent " + std::to_string(i + 1) + " has an empty block");
      for (int w : k.relations[i][b]) {
        if (w < 0 || w >= n) {
          r.error("fh.partition", "block refers to a world outside the model");
          continue;
        }
        if (owner[w] != -1)
          r.error("fh.partition", "agent " + std::to_string(i + 1) + ": world " + k.worlds[w] + " is in two blocks");
        owner[w] = static_cast<int>(b);
      }
    }
    for (int w = 0; w < n; ++w)
      if (owner[w] == -1)
        r.error("fh.partition", "agent " + std::to_string(i + 1) + ": world " + k.worlds[w] + " is in no block");

    if (i >= k.awareness.size()) continue;
    const auto& aw = k.awareness[i];
    if (static_cast<int>(aw.size()) != n) {
      r.error("fh.domain", "agent " + std::to_string(i + 1) + ": awareness not given for every world");
      continue;
    }
    for (int w = 0; w < n; ++w)
      if (!aw[w].subset_of(k.vocab))
        r.error("fh.domain", "agent " + std::to_string(i + 1) + " at " + k.worlds[w] + " is aware of atoms outside the vocabulary");
    for (const auto& block : k.relations[i]) {
      for (int w : block) {
        if (w < 0 || w >= n || block.front() < 0 || block.front() >= n) continue;
        if (aw[w] != aw[block.front()])
          r.error("fh.awareness_constancy", "agent " + std::to_string(i + 1) + ": awareness differs between " +
                                                k.worlds[block.front()] + " and " + k.worlds[w]);
      }
    }
  }

  if (static_cast<int>(k.valuation.size()) != k.vocabulary.size())
    r.error("fh.domain", "valuation must list every atom of the vocabulary");
  for (std::size_t p = 0; p < k.valuation.size(); ++p) {
    if (static_cast<int>(k.valuation[p].size()) != n) {
      r.error("fh.domain", "valuation of " + k.vocabulary.name(static_cast<int>(p)) + " has the wrong size");
    } else if (!k.vocab.contains(static_cast<int>(p)) && k.valuation[p].any()) {
      r.error("fh.domain", "atom " + k.vocabulary.name(static_cast<int>(p)) + " is outside the vocabulary but true somewhere");
    }
  }
  return r;
}

FHChecker::FHChecker(const FHModel& k) : k_(&k) {
  const int n = k.num_worlds();
  if (static_cast<int>(k.relations.size()) != k.agents || static_cast<int>(k.awareness.size()) != k.agents)
    throw ModelError("FH model has inconsistent agent count");
  block_of_.assign(k.agents, std::vector<int>(n, -1));
  block_sets_.resize(k.agents);
  for (int i = 0; i < k.agents; ++i) {
    for (std::size_t b = 0; b < k.relations[i].size(); ++b) {
      WorldSet set(n);
      for (int w : k.relations[i][b]) {
        if (w < 0 || w >= n || block_of_[i][w] != -1) throw ModelError("FH relation is not a partition");
        block_of_[i][w] = static_cast<int>(b);
        set.set(w);
      }
      block_sets_[i].push_back(std::move(set));
    }
    for (int w = 0; w < n; ++w)
      if (block_of_[i][w] == -1) throw ModelError("FH relation is not a partition");
    if (static_cast<int>(k.awareness[i].size()) != n) throw ModelError("FH awareness map is incomplete");
  }
}

WorldSet FHChecker::box(int agent, const WorldSet& x) const {
  WorldSet out(num_worlds());
  for (const auto& block : block_sets_[agent])
    if (block.is_subset_of(x)) out |= block;
  return out;
}

WorldSet FHChecker::aware(int agent, AtomSet atoms) const {
  WorldSet out(num_worlds());
  const auto& aw = k_->awareness[agent];
  for (int w = 0; w < num_worlds(); ++w)
    if (atoms.subset_of(aw[w])) out.set(w);
  return out;
}

WorldSet FHChecker::extension(const Formula& f) const {
  if (!in_sublanguage(f, k_->vocab)) throw std::invalid_argument("formula mentions atoms outside the model's vocabulary");
  if (f.max_agent() >= k_->agents) throw std::invalid_argument("formula mentions an agent the model does not have");
  return eval(f);
}

WorldSet FHChecker::eval(const Formula& f) const {
  switch (f.op()) {
    case Op::Top:
      return all();
    case Op::Atom:
      return atom(f.index());
    case Op::Not:
      return ~eval(f.sub());
    case Op::And:
      return eval(f.lhs()) & eval(f.rhs());
    case Op::L:
      return box(f.index(), eval(f.sub()));
    case Op::A:
      return aware(f.index(), f.sub().atoms());
    case Op::K:
      return box(f.index(), eval(f.sub())) & aware(f.index(), f.sub().atoms());
  }
  return all();
}

bool FHChecker::sat(int world, const Formula& f) const {
  if (world < 0 || world >= num_worlds()) throw std::out_of_range("world index out of range");
  return extension(f).test(world);
}

bool aw_contains(const FHModel& k, int agent, int world, const Formula& f) {
  if (agent < 0 || agent >= k.agents) throw std::out_of_range("unknown agent");
  if (world < 0 || world >= k.num_worlds()) throw std::out_of_range("unknown world");
  return f.atoms().subset_of(k.awareness.at(agent).at(world));
}

bool fh_sat(const FHModel& k, int world, const Formula& f) { return FHChecker(k).sat(world, f); }

}  // namespace uakit
