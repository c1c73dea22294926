#include <algorithm>

#include "uakit/formula.hpp"

namespace uakit {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::make(Op op, int index, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->index = index;
  std::size_t h = mix(static_cast<std::size_t>(op) * 1315423911u, static_cast<std::size_t>(index));
  if (a) {
    n->lhs = std::make_unique<Formula>(*a);
    n->depth = a->depth() + 1;
    n->atoms = a->atoms();
    n->max_agent = a->max_agent();
    h = mix(h, a->hash());
  }
  if (b) {
    n->rhs = std::make_unique<Formula>(*b);
    n->depth = std::max(n->depth, b->depth() + 1);
    n->atoms |= b->atoms();
    n->max_agent = std::max(n->max_agent, b->max_agent());
    h = mix(h, b->hash());
  }
  if (op == Op::Atom) n->atoms = AtomSet::single(index);
  if (op == Op::L || op == Op::A || op == Op::K) n->max_agent = std::max(n->max_agent, index);
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = make(Op::Top, 0, nullptr, nullptr);
  return t;
}

Formula Formula::atom(int id) {
  if (id < 0 || id >= kAtomCeiling) throw std::out_of_range("atom id out of range");
  return make(Op::Atom, id, nullptr, nullptr);
}

Formula Formula::neg(Formula f) { return make(Op::Not, 0, &f, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, 0, &a, &b); }

Formula Formula::modal(Op op, int agent, Formula f) {
  if (op != Op::L && op != Op::A && op != Op::K) throw std::invalid_argument("not a modal operator");
  if (agent < 0) throw std::out_of_range("negative agent index");
  return make(op, agent, &f, nullptr);
}

Formula Formula::L(int agent, Formula f) { return modal(Op::L, agent, std::move(f)); }
Formula Formula::A(int agent, Formula f) { return modal(Op::A, agent, std::move(f)); }
Formula Formula::K(int agent, Formula f) { return modal(Op::K, agent, std::move(f)); }

Formula Formula::disj(Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
Formula Formula::implies(Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.index() != b.index() || a.depth() != b.depth()) return false;
  switch (a.op()) {
    case Op::Top:
    case Op::Atom:
      return true;
    case Op::And:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default:
      return a.sub() == b.sub();
  }
}

AtomSet atoms_of(const Formula& f) { return f.atoms(); }

bool in_sublanguage(const Formula& f, AtomSet phi) { return f.atoms().subset_of(phi); }

Formula expand_k(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Atom:
      return f;
    case Op::Not:
      return Formula::neg(expand_k(f.sub()));
    case Op::And:
      return Formula::conj(expand_k(f.lhs()), expand_k(f.rhs()));
    case Op::L:
    case Op::A:
      return Formula::modal(f.op(), f.index(), expand_k(f.sub()));
    case Op::K: {
      Formula inner = expand_k(f.sub());
      return Formula::conj(Formula::L(f.index(), inner), Formula::A(f.index(), inner));
    }
  }
  return f;
}

std::vector<Formula> enumerate_formulas(AtomSet atoms, int agents, int max_depth) {
  std::vector<Formula> out;
  if (max_depth < 0) return out;
  out.push_back(Formula::top());
  for (int a : atoms.members()) out.push_back(Formula::atom(a));
  // out[0, prev) have depth < d - 1, out[prev, cur) have depth exactly d - 1.
  std::size_t prev = 0;
  for (int d = 1; d <= max_depth; ++d) {
    const std::size_t cur = out.size();
    for (std::size_t k = prev; k < cur; ++k) {
      out.push_back(Formula::neg(out[k]));
      for (int i = 0; i < agents; ++i) {
        out.push_back(Formula::L(i, out[k]));
        out.push_back(Formula::A(i, out[k]));
        out.push_back(Formula::K(i, out[k]));
      }
    }
    // Pairs where at least one side has depth d - 1.
    for (std::size_t x = 0; x < cur; ++x)
      for (std::size_t y = 0; y < cur; ++y)
        if (x >= prev || y >= prev) out.push_back(Formula::conj(out[x], out[y]));
    prev = cur;
  }
  return out;
}

}  // namespace uakit
