#include "qmalg/validation.hpp"

#include <algorithm>

namespace qmalg {

bool ValidationReport::has_rule(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::to_text() const {
  if (ok()) return "ok\n";
  std::string out;
  for (const auto& v : violations) {
    out += v.rule + ": " + v.witness;
    if (!v.value.empty()) out += " -> " + v.value;
    out += '\n';
  }
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : Error("validation failed:\n" + report.to_text()), report_(std::move(report)) {}

}  // namespace qmalg
