#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace invol {

inline constexpr const char* kToolVersion = "1.0.0";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const Check&) const = default;
};

bool all_pass(std::span<const Check> checks);

struct Report {
  std::string version = kToolVersion;
  std::string field;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool overall() const { return all_pass(checks); }
  void add(std::string name, bool pass, std::string detail = "");

  // Key order is alphabetical (nlohmann's default map), so serialization is
  // byte-for-byte deterministic for equal reports.
  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string text() const;

  bool operator==(const Report&) const = default;
};

enum class ReportFormat { json, text };

void write_report(const Report& r, ReportFormat fmt, std::ostream& out);

}  // namespace invol
