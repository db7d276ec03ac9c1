#include "oturan/report.hpp"

#include "oturan/errors.hpp"

namespace oturan {

std::string emit_report(const ReportDocument& r) {
  if (!r.parameters.is_object())
    fail(Errc::schema_error, "parameters: must be an object");
  if (!r.results.is_object() && !r.results.is_array())
    fail(Errc::schema_error, "results: must be an object or array");
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["task"] = r.task;
  doc["parameters"] = r.parameters;
  if (r.seed)
    doc["seed"] = *r.seed;
  else
    doc["seed"] = nullptr;
  doc["results"] = r.results;
  return doc.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  nlohmann::ordered_json doc =
      nlohmann::ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::schema_error, "not valid JSON");
  if (!doc.is_object()) fail(Errc::schema_error, "top level: not an object");
  if (!doc.contains("schema") || !doc["schema"].is_string() ||
      doc["schema"].get<std::string>() != kReportSchema)
    fail(Errc::schema_error, "schema: missing or unsupported");
  ReportDocument r;
  if (!doc.contains("task") || !doc["task"].is_string())
    fail(Errc::schema_error, "task: missing or not a string");
  r.task = doc["task"].get<std::string>();
  if (!doc.contains("parameters") || !doc["parameters"].is_object())
    fail(Errc::schema_error, "parameters: missing or not an object");
  r.parameters = doc["parameters"];
  if (!doc.contains("seed"))
    fail(Errc::schema_error, "seed: missing");
  if (doc["seed"].is_number_unsigned())
    r.seed = doc["seed"].get<uint64_t>();
  else if (doc["seed"].is_null())
    r.seed = std::nullopt;
  else
    fail(Errc::schema_error, "seed: must be an unsigned integer or null");
  if (!doc.contains("results") ||
      (!doc["results"].is_object() && !doc["results"].is_array()))
    fail(Errc::schema_error, "results: missing or not an object/array");
  r.results = doc["results"];
  return r;
}

}  // namespace oturan
