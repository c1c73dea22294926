#ifndef UAKIT_REPORT_HPP
#define UAKIT_REPORT_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uakit {

enum class Severity { Error, Warning };

struct Finding {
  std::string clause;  // e.g. "pi.stationarity"
  Severity severity = Severity::Error;
  std::string detail;
};

class ValidationReport {
 public:
  void error(std::string clause, std::string detail);
  void warning(std::string clause, std::string detail);
  void merge(const ValidationReport& other);

  /// No errors (warnings allowed).
  bool ok() const;
  bool fired(std::string_view clause) const;
  /// Clauses with at least one error.
  std::set<std::string> failed_clauses() const;

  const std::vector<Finding>& findings() const { return findings_; }
  std::string to_string() const;

  /// Findings per clause beyond this count are summarized, not stored.
  static constexpr int kMaxPerClause = 8;

 private:
  std::vector<Finding> findings_;
  std::vector<std::pair<std::string, int>> counts_;
  bool admit(const std::string& clause, Severity s);
};

/// Thrown when a model violates a structural requirement that makes the
/// requested computation meaningless.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Human-readable name of a clause id.
std::string_view clause_title(std::string_view clause);

}  // namespace uakit

#endif
