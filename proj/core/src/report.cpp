#include "uakit/report.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace uakit {

bool ValidationReport::admit(const std::string& clause, Severity s) {
  std::string key = clause + (s == Severity::Error ? "#e" : "#w");
  for (auto& [k, n] : counts_) {
    if (k == key) return ++n <= kMaxPerClause;
  }
  counts_.emplace_back(std::move(key), 1);
  return true;
}

void ValidationReport::error(std::string clause, std::string detail) {
  if (admit(clause, Severity::Error)) findings_.push_back({std::move(clause), Severity::Error, std::move(detail)});
}

void ValidationReport::warning(std::string clause, std::string detail) {
  if (admit(clause, Severity::Warning))
    findings_.push_back({std::move(clause), Severity::Warning, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& f : other.findings_) {
    if (f.severity == Severity::Error)
      error(f.clause, f.detail);
    else
      warning(f.clause, f.detail);
  }
}

bool ValidationReport::ok() const {
  return std::none_of(findings_.begin(), findings_.end(),
                      [](const Finding& f) { return f.severity == Severity::Error; });
}

bool ValidationReport::fired(std::string_view clause) const {
  return std::any_of(findings_.begin(), findings_.end(),
                     [&](const Finding& f) { return f.severity == Severity::Error && f.clause == clause; });
}

std::set<std::string> ValidationReport::failed_clauses() const {
  std::set<std::string> out;
  for (const auto& f : findings_)
    if (f.severity == Severity::Error) out.insert(f.clause);
  return out;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& f : findings_) {
    out += f.severity == Severity::Error ? "error   " : "warning ";
    out += f.clause;
    out += ": ";
    out += f.detail;
    out += '\n';
  }
  for (const auto& [key, n] : counts_) {
    if (n > kMaxPerClause)
      out += "        " + key.substr(0, key.size() - 2) + ": " + std::to_string(n - kMaxPerClause) +
             " more not shown\n";
  }
  return out;
}

std::string_view clause_title(std::string_view clause) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 34> kTitles{{
      {"fh.partition", "relation blocks cover the worlds and are disjoint"},
      {"fh.awareness_constancy", "Agents Know What They Are Aware of"},
      {"fh.domain", "valuation and awareness stay inside the vocabulary"},
      {"morphism.surjectivity", "Surjectivity"},
      {"morphism.atomic_harmony", "Atomic harmony"},
      {"morphism.awareness_consistency", "Awareness consistency"},
      {"morphism.homomorphism", "Homomorphism"},
      {"morphism.back", "Back"},
      {"category.identity", "identity morphisms"},
      {"category.commutation", "morphisms commute along chains"},
      {"frame.nonempty", "spaces are non-empty"},
      {"frame.surjective", "projections are surjective"},
      {"frame.commutation", "projection paths agree"},
      {"valuation.event", "valuation is an event"},
      {"pi.confinement", "Confinement"},
      {"pi.generalized_reflexivity", "Generalized Reflexivity"},
      {"pi.stationarity", "Stationarity"},
      {"pi.ppi", "Projections Preserve Ignorance"},
      {"pi.ppk", "Projections Preserve Knowledge"},
      {"pi.comparable_spaces", "possibility sets agree on comparable spaces"},
      {"lambda.reflexivity", "Reflexivity"},
      {"lambda.stationarity", "Stationarity"},
      {"lambda.ppik", "Projections Preserve Implicit Knowledge"},
      {"lambda.explicit_measurability", "Explicit Measurability"},
      {"lambda.implicit_measurability", "Implicit Measurability"},
      {"lambda.strong_confinement", "Strong Confinement"},
      {"lambda.ppii", "Projections Preserve Implicit Ignorance"},
      {"lambda.coincidence", "implicit and explicit sets coincide below"},
      {"lambda.coherence", "Coherence"},
      {"alpha.O", "Lack of Conception"},
      {"alpha.I", "Awareness Measurability"},
      {"alpha.II", "awareness preserved below the awareness level"},
      {"alpha.III", "awareness preserved above the awareness level"},
      {"alpha.IV", "awareness monotone under projection"},
  }};
  for (const auto& [id, title] : kTitles)
    if (id == clause) return title;
  return clause;
}

}  // namespace uakit
