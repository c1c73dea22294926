#include "uakit/mutations.hpp"

#include <algorithm>
#include <stdexcept>

#include "uakit/samples.hpp"

namespace uakit {

std::vector<std::string> assumption_clauses() {
  std::vector<std::string> out;
  for (const auto* list : {&pi_clauses(), &lambda_clauses(), &alpha_clauses()})
    for (const auto& c : *list)
      if (c != "pi.comparable_spaces") out.push_back(c);
  return out;
}

const std::vector<Mutation>& mutation_catalog() {
  using T = MutationEdit::Target;
  auto pi = [](std::string s, std::vector<std::string> to) { return MutationEdit{T::Pi, 0, std::move(s), std::move(to), {}}; };
  auto lam = [](std::string s, std::vector<std::string> to) {
    return MutationEdit{T::Lambda, 0, std::move(s), std::move(to), {}};
  };
  auto al = [](std::string s, std::vector<std::string> to) { return MutationEdit{T::Alpha, 0, std::move(s), {}, std::move(to)}; };
  static const std::vector<Mutation> catalog = {
      {"pi.confinement", "unaware-q", "p-states consider p and two top states possible",
       {pi("p", {"p", "pq", "pnq"}), pi("pq", {"p", "pq", "pnq"}), pi("pnq", {"p", "pq", "pnq"})}, {}, {}},
      {"pi.generalized_reflexivity", "unaware-q", "p-states consider only not-p possible",
       {pi("p", {"np"}), pi("pq", {"np"}), pi("pnq", {"np"})}, {"lambda"}, {}},
      {"pi.stationarity", "unaware-q", "p-states cannot rule out np, but np can rule out p",
       {pi("p", {"p", "np"}), pi("pq", {"p", "np"}), pi("pnq", {"p", "np"})}, {"lambda"}, {}},
      {"pi.ppi", "unaware-q", "q-states become aware of q",
       {pi("q", {"q", "nq"}), pi("nq", {"q", "nq"})}, {}, {}},
      {"pi.ppk", "unaware-q", "p,q-states become aware of q without learning it below",
       {pi("pq", {"pq", "pnq"}), pi("pnq", {"pq", "pnq"})}, {}, {}},
      {"lambda.reflexivity", "twins", "a implicitly considers only b possible", {lam("a", {"b"})}, {}, {}},
      {"lambda.stationarity", "twins", "a cannot tell a from b, but b can", {lam("a", {"a", "b"})}, {}, {}},
      {"lambda.ppik", "implicit-q", "q-states lose implicit knowledge of q that top states keep",
       {lam("q", {"q", "nq"}), lam("nq", {"q", "nq"})}, {}, {}},
      {"lambda.explicit_measurability", "twins", "a and b share a block but differ in awareness",
       {lam("a", {"a", "b"}), lam("b", {"a", "b"}), pi("b", {"b"})}, {}, {}},
      {"lambda.implicit_measurability", "twins", "explicit sets merge a and b while implicit ones separate them",
       {pi("a", {"a", "b"}), pi("b", {"a", "b"})}, {}, {}},
      {"alpha.O", "implicit-q-ikb", "awareness of p at a q-state", {al("q", {"p"})}, {}, {}},
      {"alpha.I", "unaware-q-ikb", "the not-q states become aware of q while their block mates do not",
       {al("pnq", {"p", "q"}), al("npnq", {"p", "q"}), al("nq", {"q"})}, {}, {}},
      {"alpha.II", "implicit-q-ikb", "pq aware of p and q while its projection to S_{q} is unaware",
       {al("pq", {"p", "q"})}, {}, {}},
      {"alpha.III", "implicit-q-ikb", "awareness of p dropped at the p-state", {al("p", {})}, {}, {"alpha.II"}},
      {"alpha.IV", "implicit-q-ikb", "q-state aware of more than the top states above it", {al("q", {"q"})}, {}, {}},
  };
  return catalog;
}

const std::vector<std::string>& sample_names() {
  static const std::vector<std::string> names{"unaware-q", "implicit-q", "implicit-q-ikb", "unaware-q-ikb", "twins"};
  return names;
}

HMSModel sample_model(const std::string& name) {
  if (name == "unaware-q") return unaware_q_model();
  if (name == "implicit-q") return implicit_q_model();
  if (name == "implicit-q-ikb") return implicit_q_ikb_model();
  if (name == "unaware-q-ikb") return unaware_q_ikb_model();
  if (name == "twins") return twins_model();
  throw std::invalid_argument("unknown sample model '" + name + "'");
}

std::vector<std::string> expected_assumptions(const Mutation& mu) {
  std::vector<std::string> out;
  for (const auto& c : assumption_clauses())
    if (c == mu.clause || std::find(mu.entailed.begin(), mu.entailed.end(), c) != mu.entailed.end()) out.push_back(c);
  return out;
}

HMSModel apply_mutation(const Mutation& mu) {
  HMSModel m = sample_model(mu.base);
  for (const auto& d : mu.drop) {
    if (d == "pi") m.pi.reset();
    else if (d == "lambda") m.lambda.reset();
    else if (d == "alpha") m.alpha.reset();
    else throw std::invalid_argument("cannot drop '" + d + "'");
  }
  const HMSFrame& f = m.frame;
  for (const auto& e : mu.edits) {
    const StateId s = f.state(e.state);
    if (e.target == MutationEdit::Target::Alpha) {
      if (!m.alpha) throw std::invalid_argument("base model has no awareness function");
      AtomSet a;
      for (const auto& n : e.atoms) a |= f.vocabulary().parse_key(n);
      (*m.alpha).at(e.agent)[s] = a;
      continue;
    }
    auto& corr = e.target == MutationEdit::Target::Pi ? m.pi : m.lambda;
    if (!corr) throw std::invalid_argument("base model lacks the edited correspondence");
    StateSet set = f.empty_set();
    for (const auto& n : e.states) set.set(f.state(n));
    (*corr).at(e.agent)[s] = set;
  }
  return m;
}

std::vector<std::string> fired_assumptions(const HMSModel& m) {
  const auto failed = validate_hms(m).failed_clauses();
  std::vector<std::string> out;
  for (const auto& c : assumption_clauses())
    if (failed.count(c)) out.push_back(c);
  return out;
}

}  // namespace uakit
