#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcv {

// One verification check.  residual_kind is "exact-zero" for rational
// identities, "float" for numerical residuals, "none" when no residual
// applies (e.g. a boolean structural check).
struct CheckRecord {
  std::string id;
  std::string description;
  std::string status;  // "pass" | "fail"
  std::string residual_kind = "none";
  double residual = 0.0;
  double runtime_s = 0.0;

  bool operator==(const CheckRecord&) const = default;
};

struct Report {
  std::vector<CheckRecord> checks;
  std::map<std::string, std::string> config_echo;
  std::uint64_t seed = 0;
  std::string timestamp;  // empty when suppressed

  int pass_count() const;
  int fail_count() const;

  bool operator==(const Report&) const = default;
};

enum class ReportFormat { Json, Csv, Text };

// Accepts "json", "csv", "text"; throws on anything else.
ReportFormat parse_format(const std::string& name);

std::string emit_report(const Report& r, ReportFormat format);

// Inverse of the JSON emitter; round-trips exactly.
Report report_from_json(const std::string& text);

std::string current_timestamp();

}  // namespace qcv
