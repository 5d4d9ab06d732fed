#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vlat::testing {

/// The subset of JSON Schema draft-07 used by docs/report.schema.json:
/// type, const, enum, required, properties, additionalProperties, items,
/// oneOf, minimum and local $ref into #/definitions.
class SchemaValidator {
public:
  explicit SchemaValidator(nlohmann::json schema) : root_(std::move(schema)) {}

  /// Empty when valid; otherwise one message per violation.
  std::vector<std::string> validate(const nlohmann::json& doc) const;

private:
  void check(const nlohmann::json& s, const nlohmann::json& v, const std::string& path,
             std::vector<std::string>& errs) const;
  const nlohmann::json& resolve(const nlohmann::json& s) const;

  nlohmann::json root_;
};

nlohmann::json load_json_file(const std::string& path);

}  // namespace vlat::testing
