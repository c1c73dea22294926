#include "uakit/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace uakit {

std::string to_string(RestrictMode m) { return m == RestrictMode::Copy ? "copy" : "quotient"; }

RestrictMode parse_restrict_mode(const std::string& s) {
  if (s == "copy") return RestrictMode::Copy;
  if (s == "quotient") return RestrictMode::Quotient;
  throw std::invalid_argument("unknown mode '" + s + "' (expected copy or quotient)");
}

namespace {

std::string tagged(const std::string& world, const Vocabulary& v, AtomSet phi) {
  return world + "@{" + v.key(phi) + "}";
}

std::string agent_label(std::size_t i) { return "agent " + std::to_string(i + 1); }

}  // namespace

ValidationReport validate_bounded_morphism(const FHModel& src, const FHModel& dst, const WorldMap& f) {
  ValidationReport r;
  const int n = src.num_worlds();
  const int m = dst.num_worlds();
  if (static_cast<int>(f.size()) != n) {
    r.error("morphism.surjectivity", "map is not total on the source worlds");
    return r;
  }
  for (int w = 0; w < n; ++w) {
    if (f[w] < 0 || f[w] >= m) {
      r.error("morphism.surjectivity", "world " + src.worlds[w] + " is mapped outside the target");
      return r;
    }
  }
  if (!dst.vocab.subset_of(src.vocab)) r.error("morphism.atomic_harmony", "target vocabulary is not a subset of the source's");
  if (src.agents != dst.agents) {
    r.error("morphism.homomorphism", "source and target have different agents");
    return r;
  }

  std::vector<bool> hit(m, false);
  for (int w = 0; w < n; ++w) hit[f[w]] = true;
  for (int t = 0; t < m; ++t)
    if (!hit[t]) r.error("morphism.surjectivity", "target world " + dst.worlds[t] + " has no preimage");

  for (int p : dst.vocab.members()) {
    for (int w = 0; w < n; ++w) {
      if (src.valuation[p].test(w) != dst.valuation[p].test(f[w]))
        r.error("morphism.atomic_harmony", "atom " + src.vocabulary.name(p) + " differs at " + src.worlds[w] + " and " +
                                               dst.worlds[f[w]]);
    }
  }

  FHChecker cs(src), cd(dst);
  for (int i = 0; i < src.agents; ++i) {
    for (int w = 0; w < n; ++w) {
      if ((src.awareness[i][w] & dst.vocab) != dst.awareness[i][f[w]])
        r.error("morphism.awareness_consistency",
                agent_label(i) + ": awareness at " + src.worlds[w] + " restricted to the target vocabulary differs from " +
                    dst.worlds[f[w]]);
    }
    // Homomorphism: related worlds map to related worlds.
    for (const auto& block : src.relations[i]) {
      for (int w : block) {
        for (int t : block) {
          if (cd.block_of(i, f[w]) != cd.block_of(i, f[t]))
            r.error("morphism.homomorphism", agent_label(i) + ": " + src.worlds[w] + " ~ " + src.worlds[t] +
                                                 " but images are unrelated");
        }
      }
    }
    // Back: every successor of f(w) is the image of a successor of w.
    for (int w = 0; w < n; ++w) {
      WorldSet images(m);
      for (int t : src.relations[i][cs.block_of(i, w)]) images.set(f[t]);
      for (int t2 : dst.relations[i][cd.block_of(i, f[w])]) {
        if (!images.test(t2))
          r.error("morphism.back", agent_label(i) + ": " + dst.worlds[f[w]] + " ~ " + dst.worlds[t2] +
                                       " has no matching successor of " + src.worlds[w]);
      }
    }
  }
  return r;
}

std::vector<int> bisimulation_classes(const FHModel& k, AtomSet phi) {
  const int n = k.num_worlds();
  FHChecker checker(k);
  std::vector<int> cls(n, 0);
  int count = 0;

  // Initial labels: valuation and awareness restricted to phi.
  {
    std::map<std::vector<std::uint32_t>, int> ids;
    for (int w = 0; w < n; ++w) {
      std::vector<std::uint32_t> sig;
      std::uint32_t val = 0;
      for (int p : phi.members())
        if (k.valuation[p].test(w)) val |= 1u << p;
      sig.push_back(val);
      for (int i = 0; i < k.agents; ++i) sig.push_back((k.awareness[i][w] & phi).bits());
      auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
      cls[w] = it->second;
    }
    count = static_cast<int>(ids.size());
  }

  // Refine by the set of classes visible in each agent's block.
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w) {
      std::vector<int> sig{cls[w]};
      for (int i = 0; i < k.agents; ++i) {
        std::vector<int> seen;
        for (int t : k.relations[i][checker.block_of(i, w)]) seen.push_back(cls[t]);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        sig.push_back(-1);
        sig.insert(sig.end(), seen.begin(), seen.end());
      }
      auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
      next[w] = it->second;
    }
    const int c = static_cast<int>(ids.size());
    cls = std::move(next);
    if (c == count) break;
    count = c;
  }

  // Renumber by first occurrence.
  std::vector<int> renum(n, -1);
  int fresh = 0;
  for (int w = 0; w < n; ++w) {
    if (renum[cls[w]] == -1) renum[cls[w]] = fresh++;
    cls[w] = renum[cls[w]];
  }
  return cls;
}

Restriction restrict_model(const FHModel& k, AtomSet phi, RestrictMode mode) {
  if (!phi.subset_of(k.vocab)) throw std::invalid_argument("restriction atoms are not in the model's vocabulary");
  Restriction out;
  FHModel& r = out.model;
  r.vocabulary = k.vocabulary;
  r.vocab = phi;
  r.agents = k.agents;
  const int n = k.num_worlds();

  if (mode == RestrictMode::Copy) {
    for (int w = 0; w < n; ++w) r.worlds.push_back(tagged(k.worlds[w], k.vocabulary, phi));
    r.relations = k.relations;
    r.awareness = k.awareness;
    for (auto& aw : r.awareness)
      for (auto& a : aw) a = a & phi;
    r.valuation.assign(k.vocabulary.size(), WorldSet(n));
    for (int p : phi.members()) r.valuation[p] = k.valuation[p];
    out.morphism.resize(n);
    for (int w = 0; w < n; ++w) out.morphism[w] = w;
    return out;
  }

  const std::vector<int> cls = bisimulation_classes(k, phi);
  const int m = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(m, -1);
  for (int w = 0; w < n; ++w)
    if (rep[cls[w]] == -1) rep[cls[w]] = w;

  for (int c = 0; c < m; ++c) r.worlds.push_back(tagged(k.worlds[rep[c]], k.vocabulary, phi));
  r.valuation.assign(k.vocabulary.size(), WorldSet(m));
  for (int p : phi.members())
    for (int c = 0; c < m; ++c)
      if (k.valuation[p].test(rep[c])) r.valuation[p].set(c);
  r.awareness.assign(k.agents, std::vector<AtomSet>(m));
  r.relations.assign(k.agents, {});
  FHChecker checker(k);
  for (int i = 0; i < k.agents; ++i) {
    for (int c = 0; c < m; ++c) r.awareness[i][c] = k.awareness[i][rep[c]] & phi;
    // Classes are related iff one occurs in the other's block; blocks of
    // the quotient are the distinct visible-class sets.
    std::map<std::vector<int>, int> block_ids;
    for (int c = 0; c < m; ++c) {
      std::vector<int> seen;
      for (int t : k.relations[i][checker.block_of(i, rep[c])]) seen.push_back(cls[t]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      if (block_ids.emplace(seen, static_cast<int>(block_ids.size())).second) r.relations[i].push_back(seen);
    }
  }
  out.morphism = cls;
  return out;
}

const FHModel& FHCategory::model(AtomSet phi) const {
  auto it = models.find(phi);
  if (it == models.end()) throw std::out_of_range("category has no model for {" + vocabulary.key(phi) + "}");
  return it->second;
}

const WorldMap& FHCategory::morphism(AtomSet phi, AtomSet psi) const {
  auto it = morphisms.find({phi, psi});
  if (it == morphisms.end())
    throw std::out_of_range("category has no morphism {" + vocabulary.key(phi) + "} -> {" + vocabulary.key(psi) + "}");
  return it->second;
}

FHCategory build_category(const FHModel& k, RestrictMode mode) {
  if (k.vocab.size() > max_atoms())
    throw std::invalid_argument("model has " + std::to_string(k.vocab.size()) + " atoms; the cap is " +
                                std::to_string(max_atoms()));
  auto report = validate_fh(k);
  if (!report.ok()) throw std::invalid_argument("base model is not a valid FH model:\n" + report.to_string());

  FHCategory c;
  c.vocabulary = k.vocabulary;
  c.at = k.vocab;
  c.mode = mode;
  std::map<AtomSet, WorldMap> from_top;
  const auto subsets = k.vocab.subsets();
  for (AtomSet phi : subsets) {
    auto res = restrict_model(k, phi, mode);
    c.models.emplace(phi, std::move(res.model));
    from_top.emplace(phi, std::move(res.morphism));
  }
  c.base = k;
  c.from_base = from_top.at(k.vocab);
  // f^phi_psi sends the image of w in K_phi to the image of w in K_psi.
  const int n = k.num_worlds();
  for (AtomSet phi : subsets) {
    const auto& to_phi = from_top.at(phi);
    const int m = c.models.at(phi).num_worlds();
    for (AtomSet psi : phi.subsets()) {
      const auto& to_psi = from_top.at(psi);
      WorldMap f(m, -1);
      for (int w = 0; w < n; ++w) f[to_phi[w]] = to_psi[w];
      c.morphisms.emplace(std::make_pair(phi, psi), std::move(f));
    }
  }
  return c;
}

ValidationReport validate_category(const FHCategory& c) {
  ValidationReport r;
  const auto subsets = c.at.subsets();
  for (AtomSet phi : subsets) {
    auto mit = c.models.find(phi);
    if (mit == c.models.end()) {
      r.error("category.identity", "missing model for {" + c.vocabulary.key(phi) + "}");
      continue;
    }
    auto fr = validate_fh(mit->second);
    if (!fr.ok()) {
      r.merge(fr);
      continue;
    }
    if (mit->second.vocab != phi) r.error("category.identity", "model for {" + c.vocabulary.key(phi) + "} has another vocabulary");
  }
  if (!r.ok()) return r;

  for (AtomSet phi : subsets) {
    const FHModel& kphi = c.model(phi);
    for (AtomSet psi : phi.subsets()) {
      auto it = c.morphisms.find({phi, psi});
      if (it == c.morphisms.end()) {
        r.error("category.commutation", "missing morphism {" + c.vocabulary.key(phi) + "} -> {" + c.vocabulary.key(psi) + "}");
        continue;
      }
      const WorldMap& f = it->second;
      if (phi == psi) {
        for (int w = 0; w < static_cast<int>(f.size()); ++w)
          if (f[w] != w) {
            r.error("category.identity", "morphism on {" + c.vocabulary.key(phi) + "} is not the identity");
            break;
          }
      }
      auto mr = validate_bounded_morphism(kphi, c.model(psi), f);
      for (const auto& fi : mr.findings())
        r.error(fi.clause, "{" + c.vocabulary.key(phi) + "} -> {" + c.vocabulary.key(psi) + "}: " + fi.detail);
    }
  }
  if (!r.ok()) return r;

  for (AtomSet phi : subsets) {
    for (AtomSet psi : phi.subsets()) {
      for (AtomSet ups : psi.subsets()) {
        const auto& f_pu = c.morphism(phi, ups);
        const auto& f_pp = c.morphism(phi, psi);
        const auto& f_su = c.morphism(psi, ups);
        for (std::size_t w = 0; w < f_pu.size(); ++w) {
          if (f_pu[w] != f_su[f_pp[w]]) {
            r.error("category.commutation", "{" + c.vocabulary.key(phi) + "} -> {" + c.vocabulary.key(psi) + "} -> {" +
                                                c.vocabulary.key(ups) + "} disagrees at " + c.model(phi).worlds[w]);
            break;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace uakit
