#include "support/schema.hpp"

#include <fstream>
#include <stdexcept>

namespace vlat::testing {

using nlohmann::json;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

std::vector<std::string> SchemaValidator::validate(const json& doc) const {
  std::vector<std::string> errs;
  check(root_, doc, "$", errs);
  return errs;
}

const json& SchemaValidator::resolve(const json& s) const {
  if (!s.is_object() || !s.contains("$ref")) return s;
  std::string ref = s["$ref"].get<std::string>();
  const std::string prefix = "#/definitions/";
  if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
  return resolve(root_["definitions"].at(ref.substr(prefix.size())));
}

namespace {

bool has_type(const json& v, const std::string& t) {
  if (t == "null") return v.is_null();
  if (t == "boolean") return v.is_boolean();
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (t == "number") return v.is_number();
  return false;
}

}  // namespace

void SchemaValidator::check(const json& s0, const json& v, const std::string& path, std::vector<std::string>& errs) const {
  const json& s = resolve(s0);
  if (s.is_boolean()) {
    if (!s.get<bool>()) errs.push_back(path + ": not allowed");
    return;
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) {
      errs.push_back(path + ": expected type " + s["type"].dump());
      return;
    }
  }
  if (s.contains("const") && v != s["const"]) errs.push_back(path + ": expected " + s["const"].dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errs.push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
    errs.push_back(path + ": below minimum");
  if (s.contains("oneOf")) {
    int matches = 0;
    for (const auto& alt : s["oneOf"]) {
      std::vector<std::string> sub;
      check(alt, v, path, sub);
      if (sub.empty()) ++matches;
    }
    if (matches != 1) errs.push_back(path + ": matches " + std::to_string(matches) + " oneOf alternatives");
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& r : s["required"])
        if (!v.contains(r.get<std::string>())) errs.push_back(path + ": missing " + r.get<std::string>());
    for (auto it = v.begin(); it != v.end(); ++it) {
      const std::string sub = path + "." + it.key();
      if (s.contains("properties") && s["properties"].contains(it.key())) {
        check(s["properties"][it.key()], it.value(), sub, errs);
      } else if (s.contains("additionalProperties")) {
        check(s["additionalProperties"], it.value(), sub, errs);
      }
    }
  }
  if (v.is_array() && s.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", errs);
}

}  // namespace vlat::testing
