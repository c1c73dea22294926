#ifndef UAKIT_EQUIVALENCE_HPP
#define UAKIT_EQUIVALENCE_HPP

#include <boost/functional/hash.hpp>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uakit/category.hpp"
#include "uakit/formula.hpp"
#include "uakit/semantics.hpp"
#include "uakit/transforms.hpp"

namespace uakit {

// Semantic domains. Each gives the value of every formula over a fixed
// vocabulary compositionally: top, atom, neg, conj, modal. Two formulas
// with the same value agree on every model-level question the domain is
// built for, including inside larger formulas.

struct FHValue {
  WorldSet ext;
  AtomSet atoms;
  bool operator==(const FHValue&) const = default;
};

class FHDomain {
 public:
  using Value = FHValue;
  explicit FHDomain(const FHModel& k) : checker_(k) {}

  Value top() const { return {checker_.all(), {}}; }
  Value atom(int p) const { return {checker_.atom(p), AtomSet::single(p)}; }
  Value neg(const Value& a) const { return {~a.ext, a.atoms}; }
  Value conj(const Value& a, const Value& b) const { return {a.ext & b.ext, a.atoms | b.atoms}; }
  Value modal(Op op, int agent, const Value& a) const;
  static std::size_t hash(const Value& v);

  const FHChecker& checker() const { return checker_; }

 private:
  FHChecker checker_;
};

struct HMSValue {
  Event event;
  AtomSet atoms;
  bool operator==(const HMSValue& o) const { return event == o.event && atoms == o.atoms; }
};

class HMSDomain {
 public:
  using Value = HMSValue;
  explicit HMSDomain(const HMSModel& m) : checker_(m) {}

  Value top() const { return {checker_.top(), {}}; }
  Value atom(int p) const { return {checker_.atom(p), AtomSet::single(p)}; }
  Value neg(const Value& a) const { return {checker_.ops().neg(a.event), a.atoms}; }
  Value conj(const Value& a, const Value& b) const { return {checker_.ops().meet(a.event, b.event), a.atoms | b.atoms}; }
  /// Memoized per (operator, agent, event); not safe to share across threads.
  Value modal(Op op, int agent, const Value& a) const;
  static std::size_t hash(const Value& v);

  /// Defined states satisfy v.
  bool valid(const Value& v) const { return checker_.defined_set(v.atoms).is_subset_of(v.event.ext); }
  const HMSChecker& checker() const { return checker_; }

 private:
  struct Key {
    Op op;
    int agent;
    Event event;
    bool operator==(const Key& o) const { return op == o.op && agent == o.agent && event == o.event; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  HMSChecker checker_;
  mutable std::unordered_map<Key, Event, KeyHash> memo_;
};

/// Extensions in every model of a category. Models whose atoms do not
/// cover the formula's atoms hold an empty set.
struct CategoryValue {
  std::vector<WorldSet> ext;  // in c.models order
  AtomSet atoms;
  bool operator==(const CategoryValue&) const = default;
};

class CategoryDomain {
 public:
  using Value = CategoryValue;
  explicit CategoryDomain(const FHCategory& c);

  Value top() const;
  Value atom(int p) const;
  Value neg(const Value& a) const;
  Value conj(const Value& a, const Value& b) const;
  Value modal(Op op, int agent, const Value& a) const;
  static std::size_t hash(const Value& v);

  bool valid(const Value& v) const;
  const std::vector<AtomSet>& spaces() const { return spaces_; }
  const std::vector<FHChecker>& checkers() const { return checkers_; }

 private:
  std::vector<AtomSet> spaces_;
  std::vector<FHChecker> checkers_;
};

template <class D1, class D2>
class ProductDomain {
 public:
  using Value = std::pair<typename D1::Value, typename D2::Value>;
  ProductDomain(const D1& a, const D2& b) : a_(a), b_(b) {}

  Value top() const { return {a_.top(), b_.top()}; }
  Value atom(int p) const { return {a_.atom(p), b_.atom(p)}; }
  Value neg(const Value& v) const { return {a_.neg(v.first), b_.neg(v.second)}; }
  Value conj(const Value& v, const Value& w) const { return {a_.conj(v.first, w.first), b_.conj(v.second, w.second)}; }
  Value modal(Op op, int agent, const Value& v) const { return {a_.modal(op, agent, v.first), b_.modal(op, agent, v.second)}; }
  static std::size_t hash(const Value& v) {
    std::size_t h = D1::hash(v.first);
    boost::hash_combine(h, D2::hash(v.second));
    return h;
  }

 private:
  const D1& a_;
  const D2& b_;
};

/// The distinct values of all formulas over `atoms` up to `depth`, each
/// with the first formula found for it. Values are generated level by
/// level, so classes cover exactly the formulas of depth at most `depth`.
template <class Domain>
class SemanticClosure {
 public:
  using Value = typename Domain::Value;
  struct Class {
    Value value;
    Formula witness;
  };

  SemanticClosure(const Domain& d, AtomSet atoms, int agents, int depth, std::vector<Op> modals = {Op::L, Op::A, Op::K}) {
    add(d.top(), Formula::top());
    for (int p : atoms.members()) add(d.atom(p), Formula::atom(p));
    std::size_t fresh_from = 0;
    for (int level = 1; level <= depth; ++level) {
      const std::size_t end = classes_.size();
      for (std::size_t k = fresh_from; k < end; ++k) {
        const Class c = classes_[k];
        add(d.neg(c.value), Formula::neg(c.witness));
        for (Op op : modals)
          for (int i = 0; i < agents; ++i) add(d.modal(op, i, c.value), Formula::modal(op, i, c.witness));
      }
      // Conjunction commutes, so unordered pairs with a fresh member suffice.
      for (std::size_t b = fresh_from; b < end; ++b) {
        for (std::size_t a = 0; a <= b; ++a) {
          const Class& x = classes_[a];
          const Class& y = classes_[b];
          add(d.conj(x.value, y.value), Formula::conj(x.witness, y.witness));
        }
      }
      fresh_from = end;
    }
  }

  const std::vector<Class>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

 private:
  struct Hasher {
    std::size_t operator()(const Value& v) const { return Domain::hash(v); }
  };
  void add(Value v, Formula f) {
    if (index_.count(v)) return;
    index_.emplace(v, classes_.size());
    classes_.push_back({std::move(v), std::move(f)});
  }

  std::vector<Class> classes_;
  std::unordered_map<Value, std::size_t, Hasher> index_;
};

struct Witness {
  Formula formula;
  std::string detail;
};

struct EquivalenceReport {
  std::size_t classes = 0;  // semantic classes examined
  std::size_t checks = 0;   // pointwise comparisons
  std::vector<Witness> witnesses;

  bool ok() const { return witnesses.empty(); }
  void merge(const EquivalenceReport& o);
  std::string to_string(const Vocabulary& v) const;

  static constexpr std::size_t kMaxWitnesses = 16;
  void add(Formula f, std::string detail);
};

/// Pointwise agreement of two FH models over the same vocabulary on all
/// formulas up to `depth`, at each listed (world of a, world of b) pair.
EquivalenceReport fh_modally_equivalent(const FHModel& a, const FHModel& b,
                                        const std::vector<std::pair<int, int>>& pairing, int depth = 3);

/// For formulas over psi and psi within phi: K_phi, w and K_psi, f(w) agree.
EquivalenceReport check_category_equivalence(const FHCategory& c, int depth = 3);

/// Truth at w in k equals truth at the paired state in S_phi of m, for
/// every phi covering the formula's atoms.
EquivalenceReport check_fh_hms_equivalence(const FHModel& k, const HMSModel& m, const TransformTrace& t,
                                           int depth = 3);

/// Truth at each top-space state of m equals truth at its world in k.
EquivalenceReport check_hms_fh_equivalence(const HMSModel& m, const FHModel& k, const TransformTrace& t,
                                           int depth = 3);

/// fh_transform(hms_transform(k)) against k, at worlds paired through both traces.
EquivalenceReport check_round_trip(const FHModel& k, RestrictMode mode, int depth = 3);

}  // namespace uakit

#endif
