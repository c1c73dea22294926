#include <stdexcept>

#include "uakit/hms.hpp"

namespace uakit {

namespace {

void check_shape(const HMSModel& m, const Correspondence& c, const char* what) {
  if (static_cast<int>(c.size()) != m.agents) throw std::invalid_argument(std::string(what) + " has the wrong agent count");
  for (const auto& row : c) {
    if (static_cast<int>(row.size()) != m.frame.num_states())
      throw std::invalid_argument(std::string(what) + " has the wrong state count");
    for (const auto& set : row)
      if (static_cast<int>(set.size()) != m.frame.num_states())
        throw std::invalid_argument(std::string(what) + " holds a set of the wrong width");
  }
}

std::string at(const HMSFrame& f, int agent, StateId s) {
  return "agent " + std::to_string(agent + 1) + " at " + f.name(s);
}

std::string sp(const HMSFrame& f, AtomSet phi) { return "S_{" + f.vocabulary().key(phi) + "}"; }

// Single space holding every member of x, if any.
std::optional<AtomSet> single_space(const HMSFrame& f, const StateSet& x) {
  auto first = x.find_first();
  if (first == StateSet::npos) return std::nullopt;
  AtomSet phi = f.space_of(static_cast<StateId>(first));
  if (!x.is_subset_of(f.space_set(phi))) return std::nullopt;
  return phi;
}

}  // namespace

const std::vector<std::string>& pi_clauses() {
  static const std::vector<std::string> c{"pi.confinement", "pi.generalized_reflexivity", "pi.stationarity", "pi.ppi",
                                          "pi.ppk"};
  return c;
}

const std::vector<std::string>& lambda_clauses() {
  static const std::vector<std::string> c{"lambda.reflexivity", "lambda.stationarity", "lambda.ppik",
                                          "lambda.explicit_measurability", "lambda.implicit_measurability"};
  return c;
}

const std::vector<std::string>& alpha_clauses() {
  static const std::vector<std::string> c{"alpha.O", "alpha.I", "alpha.II", "alpha.III", "alpha.IV"};
  return c;
}

ValidationReport validate_pi(const HMSModel& m) {
  ValidationReport r;
  if (!m.pi) return r;
  const HMSFrame& f = m.frame;
  const Correspondence& pi = *m.pi;
  check_shape(m, pi, "possibility correspondence");
  for (int i = 0; i < m.agents; ++i) {
    std::vector<StateSet> ups(f.num_states());
    for (StateId s = 0; s < f.num_states(); ++s) ups[s] = f.up(pi[i][s]);
    for (StateId s = 0; s < f.num_states(); ++s) {
      const StateSet& p = pi[i][s];
      const AtomSet phi = f.space_of(s);
      auto psi = single_space(f, p);
      if (p.none()) {
        r.error("pi.confinement", at(f, i, s) + ": possibility set is empty");
      } else if (!psi) {
        r.error("pi.confinement", at(f, i, s) + ": " + f.describe(p) + " spans several spaces");
      } else if (!psi->subset_of(phi)) {
        r.error("pi.confinement", at(f, i, s) + ": " + f.describe(p) + " lies in " + sp(f, *psi) +
                                      ", which is not below " + sp(f, phi));
      }
      if (!ups[s].test(s)) r.error("pi.generalized_reflexivity", at(f, i, s) + ": state is not in the up-closure of " + f.describe(p));
      for (auto t = p.find_first(); t != StateSet::npos; t = p.find_next(t)) {
        if (pi[i][t] != p) {
          r.error("pi.stationarity", at(f, i, s) + ": " + f.name(static_cast<StateId>(t)) + " has possibility set " +
                                         f.describe(pi[i][t]) + ", not " + f.describe(p));
        }
      }
      for (AtomSet lower : phi.subsets()) {
        StateId ps = f.project(s, lower);
        if (!ups[s].is_subset_of(ups[ps]))
          r.error("pi.ppi", at(f, i, s) + ": up-closure of " + f.describe(p) + " is not inside that of " +
                                f.describe(pi[i][ps]) + " at " + f.name(ps));
      }
      if (psi && psi->subset_of(phi)) {
        for (AtomSet lower : psi->subsets()) {
          StateId ps = f.project(s, lower);
          StateSet proj = f.project_set(p, lower);
          if (proj != pi[i][ps])
            r.error("pi.ppk", at(f, i, s) + ": projection of " + f.describe(p) + " to " + sp(f, lower) + " is " +
                                  f.describe(proj) + ", but " + f.name(ps) + " has " + f.describe(pi[i][ps]));
        }
        for (AtomSet mid : phi.subsets()) {
          if (!psi->subset_of(mid)) continue;
          StateId ps = f.project(s, mid);
          if (pi[i][ps] != p)
            r.error("pi.comparable_spaces", at(f, i, s) + ": " + f.name(ps) + " has " + f.describe(pi[i][ps]) +
                                                " instead of " + f.describe(p));
        }
      }
    }
  }
  return r;
}

ValidationReport validate_lambda(const HMSModel& m) {
  ValidationReport r;
  if (!m.lambda) return r;
  const HMSFrame& f = m.frame;
  const Correspondence& lam = *m.lambda;
  check_shape(m, lam, "explicit-possibility correspondence");
  if (m.pi) check_shape(m, *m.pi, "possibility correspondence");
  for (int i = 0; i < m.agents; ++i) {
    std::vector<StateSet> ups(f.num_states());
    for (StateId s = 0; s < f.num_states(); ++s) ups[s] = f.up(lam[i][s]);
    for (StateId s = 0; s < f.num_states(); ++s) {
      const StateSet& l = lam[i][s];
      const AtomSet phi = f.space_of(s);
      if (!l.test(s)) r.error("lambda.reflexivity", at(f, i, s) + ": state is not in " + f.describe(l));
      for (auto t = l.find_first(); t != StateSet::npos; t = l.find_next(t)) {
        if (lam[i][t] != l)
          r.error("lambda.stationarity", at(f, i, s) + ": " + f.name(static_cast<StateId>(t)) + " has " +
                                             f.describe(lam[i][t]) + ", not " + f.describe(l));
      }
      if (!l.is_subset_of(f.space_set(phi)))
        r.error("lambda.strong_confinement", at(f, i, s) + ": " + f.describe(l) + " leaves " + sp(f, phi));
      for (AtomSet lower : phi.subsets()) {
        StateId ps = f.project(s, lower);
        StateSet proj = f.project_set(l, lower);
        if (proj != lam[i][ps])
          r.error("lambda.ppik", at(f, i, s) + ": projection to " + sp(f, lower) + " is " + f.describe(proj) + ", but " +
                                     f.name(ps) + " has " + f.describe(lam[i][ps]));
        if (!ups[s].is_subset_of(ups[ps]))
          r.error("lambda.ppii", at(f, i, s) + ": up-closure is not inside that of " + f.name(ps));
      }
      if (!m.pi) continue;
      const Correspondence& pi = *m.pi;
      for (auto t = l.find_first(); t != StateSet::npos; t = l.find_next(t)) {
        if (pi[i][t] != pi[i][s])
          r.error("lambda.explicit_measurability", at(f, i, s) + ": " + f.name(static_cast<StateId>(t)) +
                                                       " is explicitly possible but has possibility set " +
                                                       f.describe(pi[i][t]) + ", not " + f.describe(pi[i][s]));
      }
      auto psi = single_space(f, pi[i][s]);
      if (!psi || !psi->subset_of(phi)) continue;
      StateSet proj = f.project_set(l, *psi);
      for (auto t = pi[i][s].find_first(); t != StateSet::npos; t = pi[i][s].find_next(t)) {
        if (lam[i][t] != proj)
          r.error("lambda.implicit_measurability", at(f, i, s) + ": " + f.name(static_cast<StateId>(t)) + " has " +
                                                       f.describe(lam[i][t]) + ", expected " + f.describe(proj));
        if (lam[i][t] != pi[i][t])
          r.error("lambda.coincidence", at(f, i, s) + ": explicit and implicit sets differ at " +
                                            f.name(static_cast<StateId>(t)));
      }
      if (proj != pi[i][s])
        r.error("lambda.coherence", at(f, i, s) + ": projection of " + f.describe(l) + " to " + sp(f, *psi) + " is " +
                                        f.describe(proj) + ", not " + f.describe(pi[i][s]));
    }
  }
  return r;
}

ValidationReport validate_alpha(const HMSModel& m) {
  ValidationReport r;
  if (!m.alpha) return r;
  const HMSFrame& f = m.frame;
  const AwarenessFn& al = *m.alpha;
  if (static_cast<int>(al.size()) != m.agents) throw std::invalid_argument("awareness function has the wrong agent count");
  for (const auto& row : al)
    if (static_cast<int>(row.size()) != f.num_states())
      throw std::invalid_argument("awareness function has the wrong state count");
  if (m.lambda) check_shape(m, *m.lambda, "explicit-possibility correspondence");
  const Vocabulary& v = f.vocabulary();
  for (int i = 0; i < m.agents; ++i) {
    for (StateId s = 0; s < f.num_states(); ++s) {
      const AtomSet a = al[i][s];
      const AtomSet phi = f.space_of(s);
      if (!a.subset_of(phi))
        r.error("alpha.O", at(f, i, s) + ": awareness {" + v.key(a) + "} is not below " + sp(f, phi));
      if (m.lambda) {
        const StateSet& l = (*m.lambda)[i][s];
        for (auto t = l.find_first(); t != StateSet::npos; t = l.find_next(t))
          if (al[i][t] != a)
            r.error("alpha.I", at(f, i, s) + ": " + f.name(static_cast<StateId>(t)) + " has awareness {" +
                                   v.key(al[i][t]) + "}, not {" + v.key(a) + "}");
      }
      for (AtomSet lower : phi.subsets()) {
        const StateId ps = f.project(s, lower);
        const AtomSet b = al[i][ps];
        if (lower.subset_of(a) && b != lower)
          r.error("alpha.II", at(f, i, s) + ": " + f.name(ps) + " should be aware of {" + v.key(lower) + "}, has {" +
                                  v.key(b) + "}");
        if (a.subset_of(lower) && b != a)
          r.error("alpha.III", at(f, i, s) + ": " + f.name(ps) + " should keep awareness {" + v.key(a) + "}, has {" +
                                   v.key(b) + "}");
        if (!b.subset_of(a))
          r.error("alpha.IV", at(f, i, s) + ": " + f.name(ps) + " is aware of {" + v.key(b) + "}, more than {" +
                                  v.key(a) + "}");
      }
    }
  }
  return r;
}

ValidationReport validate_valuation(const HMSModel& m) {
  ValidationReport r;
  const HMSFrame& f = m.frame;
  const Vocabulary& v = f.vocabulary();
  if (static_cast<int>(m.valuation.size()) != v.size()) {
    r.error("valuation.event", "valuation has " + std::to_string(m.valuation.size()) + " entries for " +
                                   std::to_string(v.size()) + " atoms");
    return r;
  }
  for (int p = 0; p < v.size(); ++p) {
    const Event& e = m.valuation[p];
    if (!e.base.is_subset_of(f.space_set(e.space))) {
      r.error("valuation.event", "v(" + v.name(p) + ") has a base outside " + sp(f, e.space));
      continue;
    }
    if (make_event(f, e.space, e.base).ext != e.ext) r.error("valuation.event", "v(" + v.name(p) + ") is not up-closed");
    if (e.space != AtomSet::single(p)) {
      const bool exceeds = AtomSet::single(p).subset_of(e.space);
      r.warning("valuation.event", "v(" + v.name(p) + ") is based on " + sp(f, e.space) +
                                       (exceeds ? ", strictly above " : " instead of ") + sp(f, AtomSet::single(p)));
    }
  }
  return r;
}

ValidationReport validate_hms(const HMSModel& m) {
  ValidationReport r = validate_frame(m.frame);
  r.merge(validate_valuation(m));
  r.merge(validate_pi(m));
  r.merge(validate_lambda(m));
  r.merge(validate_alpha(m));
  return r;
}

ValidationReport audit_pi_star(const HMSModel& m, const Correspondence& pi_star) {
  ValidationReport r;
  const HMSFrame& f = m.frame;
  const Correspondence& lam = *m.lambda;
  const AwarenessFn& al = *m.alpha;
  for (int i = 0; i < m.agents; ++i) {
    for (StateId s = 0; s < f.num_states(); ++s) {
      for (AtomSet lower : f.space_of(s).subsets()) {
        const StateId ps = f.project(s, lower);
        const AtomSet a = al[i][ps];
        if (!a.subset_of(f.space_of(s))) {
          r.error("alpha.O", at(f, i, ps) + ": awareness exceeds the state's space");
          continue;
        }
        StateSet expect = f.project_set(lam[i][s], a);
        if (pi_star[i][ps] != expect)
          r.error("lambda.ppik", at(f, i, ps) + ": derived set " + f.describe(pi_star[i][ps]) +
                                     " differs from the projection " + f.describe(expect) + " of " + f.name(s) +
                                     "'s explicit set");
      }
    }
  }
  return r;
}

Correspondence derive_pi_star(const HMSModel& m) {
  if (!m.lambda || !m.alpha) throw ModelError("deriving possibility sets needs explicit possibility and awareness");
  const HMSFrame& f = m.frame;
  check_shape(m, *m.lambda, "explicit-possibility correspondence");
  Correspondence out(m.agents, std::vector<StateSet>(f.num_states(), f.empty_set()));
  for (int i = 0; i < m.agents; ++i)
    for (StateId s = 0; s < f.num_states(); ++s) out[i][s] = f.project_set((*m.lambda)[i][s], (*m.alpha)[i][s]);
  ValidationReport audit = audit_pi_star(m, out);
  if (!audit.ok()) {
    ValidationReport why = validate_lambda(m);
    why.merge(validate_alpha(m));
    why.merge(audit);
    throw ModelError("derived possibility sets are inconsistent:\n" + why.to_string());
  }
  return out;
}

}  // namespace uakit
