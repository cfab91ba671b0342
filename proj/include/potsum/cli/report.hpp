#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "potsum/charsums.hpp"
#include "potsum/field.hpp"
#include "potsum/sumset.hpp"

namespace potsum::cli {

enum class OutputFormat { Text, Json, Csv };

struct CheckRecord {
  std::string name;
  std::uint64_t q = 0;
  bool passed = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// A failed check. Also used for published-form discrepancies, which are
/// reported but do not count as failures.
struct CheckFailure {
  std::string check;
  std::uint64_t q = 0;
  std::string expected;
  std::string actual;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct FieldInfo {
  FieldSpec spec;
  Element generator;
  bool has_log_tables = false;
  std::optional<CubeRoots> cube_roots;
  std::optional<std::uint64_t> potent_exponent;
  std::vector<Element> potents;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<SearchHit> hits;
  std::vector<CharSumReport> charsum_reports;
  std::vector<CheckRecord> checks;
  std::vector<CheckFailure> failures;
  std::vector<CheckFailure> errata;
  std::optional<FieldInfo> field;
  std::int64_t elapsed_ms = 0;
  std::string version;
};

/// Canonical JSON: sorted keys, integers only.
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

std::string render(const RunReport& report, OutputFormat format);
std::string render_text(const RunReport& report);
std::string render_json(const RunReport& report);
std::string render_csv(const RunReport& report);

/// Hit lines "q m n" as printed in text mode, without the timing line.
std::string hit_lines(const std::vector<SearchHit>& hits);

}  // namespace potsum::cli
