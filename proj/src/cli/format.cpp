#include <charconv>
#include <iomanip>
#include <sstream>

#include "bourbaki/cli.hpp"
#include "bourbaki/error.hpp"
#include "bourbaki/parser.hpp"

namespace bourbaki::cli {

namespace {

using nlohmann::ordered_json;

ordered_json point_json(const ProjectivePoint& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coordinates()) out.push_back(c.to_string());
  return out;
}

ordered_json table_json(const std::vector<std::pair<ProjectivePoint, long>>& table, const char* key) {
  ordered_json out = ordered_json::array();
  for (const auto& [p, v] : table) out.push_back({{"point", point_json(p)}, {key, v}});
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

Field parse_field(std::string_view text) {
  if (text == "qq") return Field::rationals();
  if (text.starts_with("fp=")) {
    std::uint64_t p = 0;
    const std::string_view digits = text.substr(3);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && p < (1ull << 31) && is_prime(p)) {
      return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorKind::InvalidArgument, "fp=<p> needs a prime below 2^31, got '" + std::string(digits) + "'");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(text) + "' (use qq or fp=<p>)");
}

std::string field_label(Field field) {
  return field.is_rational() ? "qq" : "fp=" + std::to_string(field.characteristic());
}

ModuleVector parse_vector(std::string_view text, const Ring& ring) {
  std::size_t open = text.find_first_not_of(" \t");
  std::size_t close = text.find_last_not_of(" \t");
  if (open == std::string_view::npos || text[open] != '(' || text[close] != ')') {
    throw Error(ErrorKind::InvalidArgument, "a vector is written (f1, f2, f3)");
  }
  std::vector<Polynomial> comps;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')' && i != close) --depth;
    if ((ch == ',' && depth == 0) || i == close) {
      comps.push_back(parse_polynomial(text.substr(start, i - start), ring));
      start = i + 1;
    }
  }
  return ModuleVector(std::move(comps));
}

nlohmann::ordered_json report_json(const CurveReport& r, const RunInfo& info) {
  ordered_json j;
  j["version"] = kVersion;
  j["seed"] = info.seed;
  j["field"] = field_label(info.field);
  j["curve"] = r.curve.F.to_string();
  j["d"] = r.d;
  j["e"] = r.e;
  j["syzygy_degrees"] = r.syzygy_degrees;
  ordered_json ideal = ordered_json::array();
  for (const auto& g : r.bourbaki.ideal.generators()) ideal.push_back(g.to_string());
  j["bourbaki_ideal"] = ideal;
  j["tau"] = {{"global", r.tau.global}, {"table", table_json(r.tau.table, "tau")}, {"complete", r.tau.complete}};
  j["bour"] = {{"hilbert", r.bour_hilbert},
               {"formula", r.bour_formula},
               {"local_sum", r.bour_local_sum},
               {"residual", r.residual}};
  ordered_json points = ordered_json::array();
  for (const auto& [p, v] : r.local_table) points.push_back(point_json(p));
  j["points"] = points;
  j["local_table"] = table_json(r.local_table, "bour");
  j["ell"] = r.ell;
  j["classification"] = r.classification ? ordered_json(to_string(*r.classification)) : ordered_json(nullptr);
  ordered_json flags = ordered_json::object();
  for (const auto& [name, ok] : r.flags) flags[name] = ok;
  j["flags"] = flags;
  ordered_json timings = ordered_json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  j["timings_ms"] = timings;
  return j;
}

std::string report_text(const CurveReport& r, const RunInfo& info) {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << '\n';
  };
  line("curve", r.curve.F.to_string());
  line("field", field_label(info.field));
  line("d, e", std::to_string(r.d) + ", " + std::to_string(r.e));
  line("syzygy degrees", join(r.syzygy_degrees));
  line("epsilon", r.syzygies.front().to_string());
  line("I_eps", r.bourbaki.ideal.to_string());
  line("tau", std::to_string(r.tau.global) + (r.tau.complete ? "" : " (incomplete: saturated degree " +
                                                                        std::to_string(r.tau.saturated_degree) + ")"));
  for (const auto& [p, t] : r.tau.table) line("  " + p.to_string(), std::to_string(t));
  line("Bour (hilbert)", std::to_string(r.bour_hilbert));
  line("Bour (formula)", std::to_string(r.bour_formula));
  line("Bour (local sum)", std::to_string(r.bour_local_sum) +
                               (r.residual ? " + residual " + std::to_string(r.residual) : std::string()));
  for (const auto& [p, b] : r.local_table) line("  " + p.to_string(), std::to_string(b));
  line("ell", std::to_string(r.ell));
  line("classification", r.classification ? to_string(*r.classification) : "inconsistent");
  std::string failed;
  for (const auto& [name, ok] : r.flags) {
    if (!ok) failed += (failed.empty() ? "" : ", ") + name;
  }
  line("checks", failed.empty() ? "all " + std::to_string(r.flags.size()) + " passed" : "FAILED: " + failed);
  for (const auto& [stage, ms] : r.timings_ms) {
    std::ostringstream v;
    v << std::fixed << std::setprecision(2) << ms << " ms";
    line("  " + stage, v.str());
  }
  return out.str();
}

}  // namespace bourbaki::cli
