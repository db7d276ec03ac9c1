#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace oturan {

inline constexpr const char* kToolName = "oturan";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "oturan-report-v1";

/// Envelope for every JSON emission. Key order is fixed and all payload
/// values are integers, booleans, strings, or nested objects/arrays of
/// those; floating point never appears, so identical inputs serialize to
/// identical bytes. Wall-clock timing is deliberately not part of the
/// document (it goes to the diagnostic stream instead); otherwise
/// repeated runs could not be compared byte for byte.
struct ReportDocument {
  std::string task;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<uint64_t> seed;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();

  bool operator==(const ReportDocument&) const = default;
};

std::string emit_report(const ReportDocument& r);

/// Inverse of emit_report; rejects anything that is not a schema-tagged
/// report object with a SchemaError naming the offending field.
ReportDocument parse_report(const std::string& text);

}  // namespace oturan
