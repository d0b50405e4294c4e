#pragma once
// Validator for the subset of JSON Schema used by docs/report.schema.json:
// type, enum, pattern, minimum, required, properties, additionalProperties,
// items, anyOf and local $ref pointers.

#include <string>
#include <vector>

#include <json.hpp>

namespace hgap::testing {

/// Empty when `doc` conforms; otherwise one message per violation.
std::vector<std::string> validate(const nlohmann::json& doc, const nlohmann::json& root,
                                  const nlohmann::json& schema);
inline std::vector<std::string> validate(const nlohmann::json& doc, const nlohmann::json& root) {
  return validate(doc, root, root);
}

nlohmann::json load_report_schema();

}  // namespace hgap::testing
