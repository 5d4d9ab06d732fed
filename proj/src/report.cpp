#include "vlat/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace vlat::report {

Json element(const RealElement& x) {
  Json approx = Json::array(), exact = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i].to_double();
    approx.push_back(std::isfinite(d) ? Json(d) : Json(nullptr));
    exact.push_back(x[i].is_exact() ? Json(x[i].rational().get_str()) : Json(nullptr));
  }
  return Json{{"approx", approx}, {"exact", exact}};
}

Json element(const ComplexElement& z) { return Json{{"re", element(z.re)}, {"im", element(z.im)}}; }

Json labels(const std::vector<std::string>& xs) {
  Json a = Json::array();
  for (const auto& s : xs) a.push_back(s);
  return a;
}

Json model(const std::string& name, const Model& m) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < m->size(); ++i) pts.push_back(m->label(i));
  return Json{{"name", name}, {"points", labels(pts)}};
}

Json witness(const DominatorWitness& w) {
  Json samples = Json::array();
  for (const auto& [n, q] : w.samples()) samples.push_back(Json{{"n", n}, {"q", element(q)}});
  return Json{{"heuristic", w.heuristic}, {"samples", samples}};
}

Json error(const std::exception& e) {
  Json j{{"code", "Error"}, {"message", e.what()}, {"points", Json::array()}};
  if (auto* v = dynamic_cast<const Error*>(&e)) j["code"] = v->code();
  if (auto* p = dynamic_cast<const PointwiseError*>(&e)) j["points"] = labels(p->points());
  if (auto* h = dynamic_cast<const HypothesisFailed*>(&e)) j["hypothesis"] = h->which();
  return j;
}

Json skeleton(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"model", nullptr},
              {"verdicts", Json::array()},        {"witnesses", Json::array()},
              {"flags", Json::array()},           {"timing", nullptr}};
}

namespace {

void write_string(std::string& out, const std::string& s) {
  out += Json(s).dump(-1, ' ', false, Json::error_handler_t::replace);
}

void write(std::string& out, const Json& j, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write_string(out, it.key());
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& x : j) flat = flat && !x.is_structured();
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat && indent >= 0 ? ", " : ",";
        if (flat) {
          write(out, j[i], indent, depth + 1);
          continue;
        }
        newline(depth + 1);
        write(out, j[i], indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      std::string s(buf);
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    case Json::value_t::string: write_string(out, j.get_ref<const std::string&>()); return;
    default: out += j.dump(); return;
  }
}

std::string cell(const Json& elem, std::size_t i) {
  if (elem.contains("re")) {
    std::string re = cell(elem["re"], i), im = cell(elem["im"], i);
    if (im == "0") return re;
    return re + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
  }
  const Json& ex = elem["exact"][i];
  if (!ex.is_null()) return ex.get<std::string>();
  const Json& ap = elem["approx"][i];
  if (ap.is_null()) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << ap.get<double>();
  return os.str();
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  std::vector<std::string> pts;
  if (r["model"].is_object()) {
    for (const auto& p : r["model"]["points"]) pts.push_back(p.get<std::string>());
    os << "model " << r["model"]["name"].get<std::string>() << " with " << pts.size() << " points\n";
  }
  for (const auto& v : r["verdicts"]) {
    os << "\n" << v["query"].get<std::string>();
    if (v.contains("target")) os << " " << v["target"].get<std::string>();
    os << ": " << v["status"].get<std::string>() << (v["passed"].get<bool>() ? "" : "  [FAILED]") << "\n";
    if (v.contains("error")) os << "  " << v["error"]["code"].get<std::string>() << ": " << v["error"]["message"].get<std::string>() << "\n";
    if (v.contains("values") && !v["values"].empty()) {
      std::size_t width = 6;
      for (const auto& p : pts) width = std::max(width, p.size() + 2);
      os << "  " << std::left << std::setw(static_cast<int>(width)) << "point";
      for (auto it = v["values"].begin(); it != v["values"].end(); ++it) os << std::setw(24) << it.key();
      os << "\n";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        os << "  " << std::setw(static_cast<int>(width)) << pts[i];
        for (auto it = v["values"].begin(); it != v["values"].end(); ++it) os << std::setw(24) << cell(it.value(), i);
        os << "\n";
      }
    }
    if (v.contains("bands"))
      for (auto it = v["bands"].begin(); it != v["bands"].end(); ++it) {
        os << "  " << it.key() << ": {";
        for (std::size_t i = 0; i < it.value().size(); ++i) os << (i ? "," : "") << it.value()[i].get<std::string>();
        os << "}\n";
      }
    if (v.contains("details"))
      for (auto it = v["details"].begin(); it != v["details"].end(); ++it) {
        const Json& d = it.value();
        if (d.is_object() || (d.is_array() && !d.empty() && d[0].is_object())) continue;
        os << "  " << it.key() << ": ";
        if (d.is_string())
          os << d.get<std::string>();
        else if (d.is_number_float())
          os << std::setprecision(12) << d.get<double>();
        else
          os << d.dump();
        os << "\n";
      }
    if (v.contains("table")) {
      for (const auto& row : v["table"]) {
        os << "  ";
        for (auto it = row.begin(); it != row.end(); ++it) {
          os << it.key() << "=";
          if (it.value().is_number_float())
            os << std::setprecision(12) << it.value().get<double>();
          else if (it.value().is_string())
            os << it.value().get<std::string>();
          else
            os << it.value().dump();
          os << "  ";
        }
        os << "\n";
      }
    }
    if (v.contains("checks"))
      for (const auto& c : v["checks"])
        os << "  [" << (c["passed"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>()
           << (c.contains("witness") && !c["witness"].get<std::string>().empty() ? "  " + c["witness"].get<std::string>() : "")
           << "\n";
    if (v.contains("notes") && !v["notes"].empty()) {
      os << "  notes:";
      for (const auto& n : v["notes"]) os << " " << n.get<std::string>();
      os << "\n";
    }
  }
  if (!r["flags"].empty()) {
    os << "\nflags:";
    for (const auto& f : r["flags"]) os << " " << f.get<std::string>();
    os << "\n";
  }
  return os.str();
}

}  // namespace vlat::report
