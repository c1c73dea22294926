#include <algorithm>
#include <functional>
#include <random>
#include <span>
#include <sstream>
#include <unordered_map>

#include "uakit/equivalence.hpp"
#include "uakit/harness.hpp"
#include "uakit/transforms.hpp"

namespace uakit {

bool PropertyReport::ok() const { return failures() == 0; }

std::size_t PropertyReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failures;
  return n;
}

std::size_t PropertyReport::instances() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.instances;
  return n;
}

PropertyReport PropertyReport::filter(const std::vector<std::string>& groups) const {
  PropertyReport out;
  for (const auto& r : results)
    if (std::find(groups.begin(), groups.end(), r.group) != groups.end()) out.results.push_back(r);
  return out;
}

std::string PropertyReport::to_string() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    os << (r.failures ? "FAIL " : "ok   ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.instances
       << " checked";
    if (r.failures) os << ", " << r.failures << " failed";
    os << '\n';
    for (const auto& w : r.witnesses) os << "       " << w << '\n';
  }
  return os.str();
}

namespace {

class Memo {
 public:
  explicit Memo(const HMSModel& m) : ops_(m) {}

  const HMSOperators& ops() const { return ops_; }
  const HMSFrame& frame() const { return ops_.frame(); }

  Event K(int i, const Event& e) { return get('K', i, e); }
  Event A(int i, const Event& e) { return get('A', i, e); }
  Event U(int i, const Event& e) { return neg(A(i, e)); }
  Event L(int i, const Event& e) { return get('L', i, e); }
  Event Astar(int i, const Event& e) { return get('*', i, e); }
  Event neg(const Event& e) const { return ops_.neg(e); }
  Event meet(const Event& a, const Event& b) const { return ops_.meet(a, b); }
  Event join(const Event& a, const Event& b) const { return ops_.join(a, b); }

 private:
  struct Key {
    char op;
    int agent;
    Event e;
    bool operator==(const Key& o) const { return op == o.op && agent == o.agent && e == o.e; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return EventHash{}(k.e) * 31 + static_cast<std::size_t>(k.op) * 7 + k.agent; }
  };

  Event get(char op, int i, const Event& e) {
    Key k{op, i, e};
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    Event r;
    switch (op) {
      case 'K': r = ops_.K(i, e); break;
      case 'A': r = ops_.A(i, e); break;
      case 'L': r = ops_.L(i, e); break;
      default: r = ops_.Astar(i, e); break;
    }
    memo_.emplace(std::move(k), r);
    return r;
  }

  HMSOperators ops_;
  std::unordered_map<Key, Event, KeyHash> memo_;
};

bool below(const Event& a, const Event& b) { return a.ext.is_subset_of(b.ext); }

class Suite {
 public:
  Suite(PropertyReport& rep, std::string group) : rep_(rep), group_(std::move(group)) {}

  /// Runs `check` and records one instance; exceptions count as failures.
  template <class F>
  void run(const std::string& name, F&& check, const std::function<std::string()>& witness) {
    PropertyResult& r = slot(name);
    ++r.instances;
    std::string why;
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    if (ok) return;
    ++r.failures;
    if (r.witnesses.size() < PropertyResult::kMaxWitnesses) r.witnesses.push_back(witness() + why);
  }

  PropertyResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return rep_.results[it->second];
    index_.emplace(name, rep_.results.size());
    rep_.results.push_back({group_, name, 0, 0, {}});
    return rep_.results.back();
  }

 private:
  PropertyReport& rep_;
  std::string group_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::string who(int i) { return "agent " + std::to_string(i + 1); }

/// Index pairs and triples for the conjunction laws.
std::vector<std::vector<std::size_t>> families(std::size_t n, std::size_t triple_limit) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.push_back({a, b});
  std::vector<std::vector<std::size_t>> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  if (triple_limit && triples.size() > triple_limit) {
    std::mt19937_64 rng(0x5eed);
    std::shuffle(triples.begin(), triples.end(), rng);
    triples.resize(triple_limit);
  }
  out.insert(out.end(), triples.begin(), triples.end());
  return out;
}

Event meet_all(const HMSFrame& f, const std::vector<Event>& es) { return event_intersect(f, std::span<const Event>(es)); }

void knowledge_props(PropertyReport& rep, Memo& m, const std::vector<Event>& events,
                     const std::vector<std::vector<std::size_t>>& fams, int agents) {
  const HMSFrame& f = m.frame();
  Suite s(rep, "knowledge");
  auto lbl = [&](const Event& e) { return event_label(f, e); };
  for (int i = 0; i < agents; ++i) {
    const Event om = omega(f);
    s.run("K.i necessitation", [&] { return m.K(i, om) == om; }, [&] { return who(i); });
    for (const auto& fam : fams) {
      std::vector<Event> es;
      for (auto k : fam) es.push_back(events[k]);
      s.run("K.ii conjunction", [&] {
        std::vector<Event> ks;
        for (const auto& e : es) ks.push_back(m.K(i, e));
        return m.K(i, meet_all(f, es)) == meet_all(f, ks);
      }, [&] {
        std::string w = who(i) + ", family";
        for (const auto& e : es) w += " " + lbl(e);
        return w;
      });
    }
    for (const Event& e : events) {
      auto w = [&] { return who(i) + ", E = " + lbl(e); };
      s.run("K.iii truth", [&] { return below(m.K(i, e), e); }, w);
      s.run("K.iv positive introspection", [&] { return below(m.K(i, e), m.K(i, m.K(i, e))); }, w);
      s.run("K.vi weak negative introspection", [&] {
        const Event nk = m.neg(m.K(i, e));
        const Event nknk = m.neg(m.K(i, nk));
        const Event nknknk = m.neg(m.K(i, m.neg(m.K(i, nk))));
        return below(m.meet(nk, nknk), nknknk);
      }, w);
      for (const Event& g : events) {
        if (!below(e, g)) continue;
        s.run("K.v monotonicity", [&] { return below(m.K(i, e), m.K(i, g)); },
              [&] { return who(i) + ", E = " + lbl(e) + ", F = " + lbl(g); });
      }
    }
  }
}

void awareness_props(PropertyReport& rep, Memo& m, const std::vector<Event>& events,
                     const std::vector<std::vector<std::size_t>>& fams, int agents) {
  const HMSFrame& f = m.frame();
  Suite s(rep, "awareness");
  const std::size_t omega_size = static_cast<std::size_t>(f.num_states());
  for (int i = 0; i < agents; ++i) {
    for (const Event& e : events) {
      auto w = [&] { return who(i) + ", E = " + event_label(f, e); };
      s.run("KU.1 KU introspection", [&] { return m.K(i, m.U(i, e)) == empty_event(f, e.space); }, w);
      s.run("KU.2 AU introspection", [&] { return m.U(i, e) == m.U(i, m.U(i, e)); }, w);
      s.run("KU.3 weak necessitation", [&] { return m.A(i, e) == m.K(i, full_event(f, e.space)); }, w);
      s.run("KU.4 plausibility", [&] { return m.A(i, e) == m.join(m.K(i, e), m.K(i, m.neg(m.K(i, e)))); }, w);
      s.run("KU.5 strong plausibility", [&] {
        // Running intersection of (not K)^n(E), truncated at |Omega| and
        // required to be stable from there on.
        Event power = m.neg(m.K(i, e));
        Event acc = power;
        for (std::size_t n = 2; n <= omega_size; ++n) {
          power = m.neg(m.K(i, power));
          acc = m.meet(acc, power);
        }
        Event probe = power;
        for (std::size_t n = 0; n <= omega_size; ++n) {
          probe = m.neg(m.K(i, probe));
          if (m.meet(acc, probe) != acc) throw std::runtime_error("intersection not stable at |Omega|");
        }
        return m.U(i, e) == acc;
      }, w);
      s.run("KU.6 negative introspection", [&] {
        const Event nk = m.neg(m.K(i, e));
        return m.meet(nk, m.A(i, nk)) == m.K(i, nk);
      }, w);
      s.run("KU.7 symmetry", [&] { return m.A(i, e) == m.A(i, m.neg(e)); }, w);
      s.run("KU.9 A = AK", [&] { return m.A(i, e) == m.A(i, m.K(i, e)); }, w);
      s.run("KU.10 A = AA", [&] { return m.A(i, e) == m.A(i, m.A(i, e)); }, w);
      s.run("KU.11 A = KA", [&] { return m.A(i, e) == m.K(i, m.A(i, e)); }, w);
    }
    for (const auto& fam : fams) {
      std::vector<Event> es;
      for (auto k : fam) es.push_back(events[k]);
      s.run("KU.8 awareness conjunction", [&] {
        std::vector<Event> as;
        for (const auto& e : es) as.push_back(m.A(i, e));
        return meet_all(f, as) == m.A(i, meet_all(f, es));
      }, [&] {
        std::string w = who(i) + ", family";
        for (const auto& e : es) w += " " + event_label(f, e);
        return w;
      });
    }
  }
}

void implicit_props(PropertyReport& rep, Memo& m, const std::vector<Event>& events,
                    const std::vector<std::vector<std::size_t>>& fams, int agents) {
  const HMSFrame& f = m.frame();
  Suite s(rep, "implicit");
  for (int i = 0; i < agents; ++i) {
    for (AtomSet phi : f.at().subsets()) {
      if (f.space(phi).empty()) continue;
      const Event full = full_event(f, phi);
      s.run("L.i necessitation", [&] { return m.L(i, full) == full; },
            [&] { return who(i) + ", S_{" + f.vocabulary().key(phi) + "}"; });
    }
    for (const auto& fam : fams) {
      std::vector<Event> es;
      for (auto k : fam) es.push_back(events[k]);
      s.run("L.ii conjunction", [&] {
        std::vector<Event> ls;
        for (const auto& e : es) ls.push_back(m.L(i, e));
        return m.L(i, meet_all(f, es)) == meet_all(f, ls);
      }, [&] {
        std::string w = who(i) + ", family";
        for (const auto& e : es) w += " " + event_label(f, e);
        return w;
      });
    }
    for (const Event& e : events) {
      auto w = [&] { return who(i) + ", E = " + event_label(f, e); };
      for (const Event& g : events) {
        if (!below(e, g)) continue;
        s.run("L.iii monotonicity", [&] { return below(m.L(i, e), m.L(i, g)); },
              [&] { return who(i) + ", E = " + event_label(f, e) + ", F = " + event_label(f, g); });
      }
      s.run("L.iv truth", [&] { return below(m.L(i, e), e); }, w);
      s.run("L.v positive introspection", [&] { return below(m.L(i, e), m.L(i, m.L(i, e))); }, w);
      s.run("L.vi negative introspection", [&] {
        const Event nl = m.neg(m.L(i, e));
        return below(nl, m.L(i, nl));
      }, w);
    }
  }
}

void interaction_props(PropertyReport& rep, Memo& m, const std::vector<Event>& events, int agents) {
  const HMSFrame& f = m.frame();
  Suite s(rep, "interaction");
  for (int i = 0; i < agents; ++i) {
    for (const Event& e : events) {
      auto w = [&] { return who(i) + ", E = " + event_label(f, e); };
      s.run("KLA.1 K = L and A", [&] { return m.K(i, e) == m.meet(m.L(i, e), m.A(i, e)); }, w);
      s.run("KLA.2 U = LU", [&] { return m.U(i, e) == m.L(i, m.U(i, e)); }, w);
      s.run("KLA.3 A = LA", [&] { return m.A(i, e) == m.L(i, m.A(i, e)); }, w);
      s.run("KLA.4 AL = A", [&] { return m.A(i, m.L(i, e)) == m.A(i, e); }, w);
    }
  }
}

/// One result per clause, instances = agents x states, failures = findings.
void clause_results(PropertyReport& rep, const std::string& group, const std::string& prefix,
                    const ValidationReport& v, const std::vector<std::string>& clauses, std::size_t instances) {
  for (const auto& c : clauses) {
    PropertyResult r{group, prefix + c, instances, 0, {}};
    for (const auto& fd : v.findings()) {
      if (fd.clause != c || fd.severity != Severity::Error) continue;
      ++r.failures;
      if (r.witnesses.size() < PropertyResult::kMaxWitnesses) r.witnesses.push_back(fd.detail);
    }
    rep.results.push_back(std::move(r));
  }
}

void derived_props(PropertyReport& rep, const HMSModel& src, const std::vector<Event>& events) {
  const HMSFrame& f = src.frame;
  Suite s(rep, "derived");
  HMSModel d = src;
  try {
    d.pi = derive_pi_star(src);
  } catch (const std::exception& e) {
    PropertyResult& r = s.slot("derive pi*");
    r.instances = 1;
    r.failures = 1;
    r.witnesses.push_back(e.what());
    return;
  }
  s.slot("derive pi*").instances = 1;
  const Correspondence& ps = *d.pi;
  const Correspondence& lam = *src.lambda;
  const AwarenessFn& al = *src.alpha;
  const std::size_t n = static_cast<std::size_t>(src.agents) * f.num_states();

  for (int i = 0; i < src.agents; ++i) {
    for (StateId w = 0; w < f.num_states(); ++w) {
      const AtomSet a = al[i][w];
      auto at = [&] { return who(i) + " at " + f.name(w); };
      s.run("lemma A", [&] { return ps[i][w] == f.project_set(lam[i][w], a); }, at);
      for (AtomSet phi : f.space_of(w).subsets()) {
        const StateId wp = f.project(w, phi);
        auto atp = [&] { return who(i) + " at " + f.name(w) + ", S_{" + f.vocabulary().key(phi) + "}"; };
        s.run("definition", [&] { return ps[i][wp] == f.project_set(lam[i][w], al[i][wp]); }, atp);
        if (phi.subset_of(a)) s.run("lemma B", [&] { return ps[i][wp] == f.project_set(lam[i][w], phi); }, atp);
        if (a.subset_of(phi)) s.run("lemma C", [&] { return ps[i][wp] == f.project_set(lam[i][w], a); }, atp);
      }
    }
  }

  clause_results(rep, "derived", "pi* ", validate_pi(d), pi_clauses(), n);
  ValidationReport lv = validate_lambda(d);
  clause_results(rep, "derived", "pi* ", lv, {"lambda.explicit_measurability", "lambda.implicit_measurability"}, n);

  Memo m(d);
  for (int i = 0; i < src.agents; ++i) {
    for (const Event& e : events) {
      auto w = [&] { return who(i) + ", E = " + event_label(f, e); };
      s.run("A* = A", [&] { return m.Astar(i, e) == m.A(i, e); }, w);
      s.run("K = L and A*", [&] { return m.K(i, e) == m.meet(m.L(i, e), m.Astar(i, e)); }, w);
    }
  }
}

}  // namespace

PropertyReport property_suite(const HMSModel& m, const PropertyOptions& opts) {
  PropertyReport rep;
  const HMSFrame& f = m.frame;
  const std::vector<Event> events = enumerate_events(f);
  const auto fams = families(events.size(), opts.triple_limit);
  const std::size_t n = static_cast<std::size_t>(m.agents) * f.num_states();
  Memo memo(m);
  if (m.pi) {
    knowledge_props(rep, memo, events, fams, m.agents);
    awareness_props(rep, memo, events, fams, m.agents);
    clause_results(rep, "lemma", "", validate_pi(m), {"pi.comparable_spaces"}, n);
  }
  if (m.lambda) {
    implicit_props(rep, memo, events, fams, m.agents);
    clause_results(rep, "lemma", "", validate_lambda(m),
                   m.pi ? std::vector<std::string>{"lambda.strong_confinement", "lambda.ppii", "lambda.coincidence",
                                                   "lambda.coherence"}
                        : std::vector<std::string>{"lambda.strong_confinement", "lambda.ppii"},
                   n);
  }
  if (m.pi && m.lambda) interaction_props(rep, memo, events, m.agents);
  if (m.lambda && m.alpha) derived_props(rep, m, events);
  return rep;
}

PropertyReport property_suite(const FHCategory& c, const PropertyOptions& opts) {
  PropertyReport rep;
  Suite s(rep, "category");
  const ValidationReport v = validate_category(c);
  {
    PropertyResult& r = s.slot("category valid");
    r.instances = 1;
    if (!v.ok()) {
      r.failures = 1;
      r.witnesses.push_back(v.to_string());
    }
  }
  if (!v.ok()) return rep;
  {
    const EquivalenceReport eq = check_category_equivalence(c, opts.depth);
    PropertyResult& r = s.slot("sublanguage invariance");
    r.instances = eq.checks;
    r.failures = eq.witnesses.size();
    for (const auto& w : eq.witnesses)
      if (r.witnesses.size() < PropertyResult::kMaxWitnesses) r.witnesses.push_back(w.detail);
  }
  Transformed<HMSModel> t;
  s.run("t-transform is implicit-knowledge-based", [&] {
    t = t_transform(c);
    return validate_hms(t.model).ok() && t.model.kind() == ModelKind::ImplicitKnowledgeBased;
  }, [&] { return std::string("transform of the category"); });
  if (t.model.lambda) {
    PropertyReport inner = property_suite(t.model, opts);
    rep.results.insert(rep.results.end(), inner.results.begin(), inner.results.end());
  }
  return rep;
}

}  // namespace uakit
