#include "invol/report.hpp"

#include <ostream>

#include "invol/errors.hpp"

namespace invol {

bool all_pass(std::span<const Check> checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["field"] = field;
  j["seed"] = seed;
  j["overall"] = overall() ? "pass" : "fail";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["detail"] = c.detail;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.version = j.at("version").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jc : j.at("checks")) {
      Check c;
      c.name = jc.at("name").get<std::string>();
      c.pass = jc.at("status").get<std::string>() == "pass";
      c.detail = jc.at("detail").get<std::string>();
      r.checks.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::string Report::text() const {
  std::string out;
  out += "tool version: " + version + "\n";
  out += "field: " + field + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  for (const auto& c : checks) {
    out += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name;
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += "\n";
  }
  out += std::string("overall: ") + (overall() ? "pass" : "fail") + "\n";
  return out;
}

void write_report(const Report& r, ReportFormat fmt, std::ostream& out) {
  if (fmt == ReportFormat::json)
    out << r.to_json().dump(2) << "\n";
  else
    out << r.text();
}

}  // namespace invol
