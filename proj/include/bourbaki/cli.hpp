#pragma once

// Formatting and orchestration behind the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bourbaki/analysis.hpp"

namespace bourbaki::cli {

inline constexpr const char* kVersion = "1.0.0";

/// "qq" or "fp=<p>" with p prime.
Field parse_field(std::string_view text);
std::string field_label(Field field);

/// "(a, b, c)" with polynomial entries.
ModuleVector parse_vector(std::string_view text, const Ring& ring);

struct RunInfo {
  std::uint64_t seed = 0;
  Field field = Field::rationals();
};

nlohmann::ordered_json report_json(const CurveReport& r, const RunInfo& info);
std::string report_text(const CurveReport& r, const RunInfo& info);

// ------------------------------------------------------------- verify -----

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Engine-versus-oracle comparisons for one curve: graded dimensions of J_F,
/// its saturation and I_eps up to `max_degree`, local degrees at every found
/// point, syzygies by substitution, the three global Bourbaki degrees, and
/// invariance under the coordinate change drawn from `seed`.
std::vector<Check> verify_checks(const CurveReport& r, int max_degree, std::uint64_t seed);

// ----------------------------------------------------- reference table ----

struct TableEntry {
  std::string label;
  std::string curve;
  long expected = 0;
  /// Explicit free basis (theta1, theta2) to run through Saito's criterion.
  std::optional<std::pair<std::string, std::string>> saito;
};

/// Free curves F_a, the nearly free family y^m z^(n-m) - x^n, the quartic and
/// cubic examples, the curves of degree 4 and 5 from the table, and the
/// x^(2b+1) z + x^(b+1) y^(b+1) + y^(2b+1) z family.
std::vector<TableEntry> reference_corpus();

struct TableRow {
  TableEntry entry;
  long computed = 0;
  std::string classification;
  std::optional<bool> saito;
  bool consistent = false;
  bool matches() const { return computed == entry.expected && consistent && saito.value_or(true); }
};

std::vector<TableRow> run_reference_table();
nlohmann::ordered_json table_json(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

}  // namespace bourbaki::cli
