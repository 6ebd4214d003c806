#include <iomanip>
#include <sstream>

#include "bourbaki/cli.hpp"
#include "bourbaki/parser.hpp"

namespace bourbaki::cli {

namespace {

std::string pw(const char* var, int e) {
  if (e == 0) return "1";
  return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}
std::string num(long v) { return std::to_string(v); }

TableEntry free_curve(int a) {
  const long a1 = a + 1, a2 = 2 * a + 1;
  TableEntry t{"F_a a=" + num(a), pw("x", 2 * a + 1) + " + " + pw("x", a) + "*" + pw("y", a + 1) + " + " + pw("y", 2 * a) + "*z",
               0, std::nullopt};
  const std::string theta1 = "(0, -" + pw("y", a) + ", " + num(a1) + "*" + pw("x", a) + " + " + num(2 * a) + "*" +
                             pw("y", a - 1) + "*z)";
  const std::string theta2 = "(-" + num(a1 * a1) + "*" + pw("y", a) + ", " + num(a1 * a2) + "*" + pw("x", a) + " - " +
                             num(2 * a * a2) + "*" + pw("y", a - 1) + "*z, " + num(a * a1 * a1) + "*" + pw("x", a - 1) +
                             "*y + " + num(4L * a * a * a2) + "*" + pw("y", a - 2) + "*z^2)";
  t.saito = std::make_pair(theta1, theta2);
  return t;
}

TableEntry nearly_free(int m, int n) {
  return {"F_{m,n} (" + num(m) + "," + num(n) + ")", pw("y", m) + "*" + pw("z", n - m) + " - " + pw("x", n), 1,
          std::nullopt};
}

TableEntry two_point(int b) {
  return {"b=" + num(b), pw("x", 2 * b + 1) + "*z + " + pw("x", b + 1) + "*" + pw("y", b + 1) + " + " + pw("y", 2 * b + 1) + "*z",
          b + 4, std::nullopt};
}

}  // namespace

std::vector<TableEntry> reference_corpus() {
  return {free_curve(2),
          free_curve(3),
          nearly_free(2, 3),
          nearly_free(2, 5),
          nearly_free(3, 4),
          {"F_2", "y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2", 2, std::nullopt},
          {"F_3", "x^3 + x^2*z - y^2*z", 3, std::nullopt},
          {"F_4", "x^3*y + x^2*y^2 + y^4 - x^4 + y^2*z^2", 4, std::nullopt},
          {"F_5", "x^5 + x^4*y + x^3*z^2 + y^2*z^3", 5, std::nullopt},
          two_point(2),
          two_point(3)};
}

std::vector<TableRow> run_reference_table() {
  const Ring ring = Ring::xyz(Field::rationals());
  std::vector<TableRow> rows;
  for (const auto& entry : reference_corpus()) {
    const Curve c = validate_curve(parse_polynomial(entry.curve, ring));
    const CurveReport r = analyze(c);
    TableRow row{entry, r.bour_hilbert, r.classification ? to_string(*r.classification) : "inconsistent",
                 std::nullopt, r.consistent()};
    if (entry.saito) {
      row.saito = saito_check(c, parse_vector(entry.saito->first, ring), parse_vector(entry.saito->second, ring));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json out;
  out["version"] = kVersion;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["label"] = row.entry.label;
    j["curve"] = row.entry.curve;
    j["expected"] = row.entry.expected;
    j["computed"] = row.computed;
    j["classification"] = row.classification;
    j["saito"] = row.saito ? nlohmann::ordered_json(*row.saito) : nlohmann::ordered_json(nullptr);
    j["consistent"] = row.consistent;
    j["match"] = row.matches();
    out["rows"].push_back(j);
  }
  return out;
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "curve" << std::setw(42) << "equation" << std::setw(10) << "expected"
      << std::setw(10) << "computed" << std::setw(12) << "class" << std::setw(7) << "saito"
      << "status\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(16) << row.entry.label << std::setw(42) << row.entry.curve << std::setw(10)
        << row.entry.expected << std::setw(10) << row.computed << std::setw(12) << row.classification << std::setw(7)
        << (row.saito ? (*row.saito ? "yes" : "no") : "-") << (row.matches() ? "ok" : "MISMATCH") << '\n';
  }
  return out.str();
}

}  // namespace bourbaki::cli
