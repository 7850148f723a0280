#pragma once

#include <string>
#include <vector>

#include "qmalg/errors.hpp"

namespace qmalg {

struct Violation {
  std::string rule;     ///< axiom or condition name
  std::string witness;  ///< the arguments that break it
  std::string value;    ///< the offending value(s)

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string witness, std::string value) {
    violations.push_back({std::move(rule), std::move(witness), std::move(value)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool has_rule(const std::string& rule) const;
  std::string to_text() const;
};

/// Thrown when a document or builder produces an algebra that fails
/// validation; carries the full report.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace qmalg
