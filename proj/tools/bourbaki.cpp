// Command-line front end: analyze, batch, paper-table, verify.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "bourbaki/cli.hpp"
#include "bourbaki/error.hpp"
#include "bourbaki/parser.hpp"

namespace fs = std::filesystem;
using namespace bourbaki;
using nlohmann::ordered_json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct CurveArgs {
  std::string curve;
  std::string field = "qq";
  std::uint64_t seed = 0;
  std::string format = "text";
};

void add_curve_options(CLI::App* cmd, CurveArgs& args) {
  cmd->add_option("--curve", args.curve, "Homogeneous polynomial in x, y, z, e.g. \"y^2*z - x^3 - x^2*z\"")->required();
  cmd->add_option("--field", args.field, "qq or fp=<p>")->capture_default_str();
  cmd->add_option("--seed", args.seed, "Seed for randomized cross-checks")->capture_default_str();
  cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Curve load_curve(const std::string& text, Field field) {
  return validate_curve(parse_polynomial(text, Ring::xyz(field)));
}

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string safe_name(const std::string& label) {
  std::string out;
  for (char ch : label) out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' || ch == '.') ? ch : '_';
  return out.empty() ? "curve" : out;
}

int run_analyze(const CurveArgs& args, const std::string& epsilon, std::size_t epsilon_index, bool timings) {
  const Field field = cli::parse_field(args.field);
  const Curve c = load_curve(args.curve, field);
  AnalysisConfig config{args.seed, {}, timings};
  if (!epsilon.empty()) config.syzygy.epsilon = cli::parse_vector(epsilon, c.ring());
  config.syzygy.epsilon_index = epsilon_index;
  const CurveReport r = analyze(c, config);
  const cli::RunInfo info{args.seed, field};
  if (args.format == "json") {
    std::cout << cli::report_json(r, info).dump(2) << '\n';
  } else {
    std::cout << cli::report_text(r, info);
  }
  return r.consistent() ? 0 : kExitInconsistent;
}

struct BatchRow {
  std::string label;
  std::string status;
  ordered_json summary;
};

// Compares the optional {bour, tau, classification} expectations.
std::string expectation_mismatch(const ordered_json& expect, const CurveReport& r) {
  std::string out;
  if (expect.contains("bour") && expect["bour"].get<long>() != r.bour_hilbert) out += " bour";
  if (expect.contains("tau") && expect["tau"].get<long>() != r.tau.saturated_degree) out += " tau";
  if (expect.contains("classification") &&
      expect["classification"].get<std::string>() != (r.classification ? to_string(*r.classification) : "")) {
    out += " classification";
  }
  return out;
}

int run_batch(const std::string& input, const std::string& out_dir, const std::string& default_field, std::uint64_t seed) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << '\n';
    return kExitInput;
  }
  fs::create_directories(out_dir);
  std::vector<BatchRow> rows;
  std::set<std::string> used;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BatchRow row{"line-" + std::to_string(lineno), "OK", ordered_json::object()};
    ordered_json doc;
    try {
      const ordered_json entry = ordered_json::parse(line);
      if (entry.contains("label")) row.label = entry["label"].get<std::string>();
      const Field field = cli::parse_field(entry.value("field", default_field));
      const Curve c = load_curve(entry.at("curve").get<std::string>(), field);
      const CurveReport r = analyze(c, AnalysisConfig{seed, {}, false});
      doc = cli::report_json(r, {seed, field});
      row.summary = {{"d", r.d},
                     {"e", r.e},
                     {"tau", r.tau.saturated_degree},
                     {"bour", r.bour_hilbert},
                     {"class", doc["classification"]}};
      if (!r.consistent()) row.status = "INCONSISTENT";
      if (entry.contains("expect")) {
        if (const std::string bad = expectation_mismatch(entry["expect"], r); !bad.empty()) {
          row.status = "MISMATCH";
          row.summary["mismatch"] = bad.substr(1);
        }
      }
    } catch (const std::exception& e) {
      row.status = "FAILED";
      row.summary = {{"error", e.what()}};
      doc = {{"error", e.what()}};
    }
    doc["label"] = row.label;
    doc["status"] = row.status;
    std::string name = safe_name(row.label);
    if (!used.insert(name).second) {
      name += "-" + std::to_string(lineno);
      used.insert(name);
    }
    write_atomically(fs::path(out_dir) / (name + ".json"), doc.dump(2) + "\n");
    rows.push_back(std::move(row));
  }

  ordered_json summary = ordered_json::array();
  int code = 0;
  std::cout << std::left << std::setw(24) << "label" << std::setw(4) << "d" << std::setw(4) << "e" << std::setw(6)
            << "tau" << std::setw(6) << "Bour" << std::setw(14) << "class"
            << "status\n";
  for (const auto& row : rows) {
    ordered_json j = {{"label", row.label}, {"status", row.status}};
    j.update(row.summary);
    summary.push_back(j);
    auto field = [&](const char* key) {
      if (!row.summary.contains(key)) return std::string("-");
      const auto& v = row.summary[key];
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::cout << std::left << std::setw(24) << row.label << std::setw(4) << field("d") << std::setw(4) << field("e")
              << std::setw(6) << field("tau") << std::setw(6) << field("bour") << std::setw(14) << field("class")
              << row.status << (row.status == "FAILED" ? ": " + field("error") : std::string()) << '\n';
    if (row.status == "FAILED") code = kExitInput;
    if ((row.status == "INCONSISTENT" || row.status == "MISMATCH") && code == 0) code = kExitInconsistent;
  }
  write_atomically(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
  return code;
}

int run_table(const std::string& format) {
  const auto rows = cli::run_reference_table();
  if (format == "json") {
    std::cout << cli::table_json(rows).dump(2) << '\n';
  } else {
    std::cout << cli::table_text(rows);
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const cli::TableRow& r) { return r.matches(); });
  return ok ? 0 : kExitInconsistent;
}

int run_verify(const CurveArgs& args, int max_degree) {
  const Field field = cli::parse_field(args.field);
  const CurveReport r = analyze(load_curve(args.curve, field));
  const auto checks = cli::verify_checks(r, max_degree, args.seed);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const cli::Check& c) { return c.passed; });
  if (args.format == "json") {
    ordered_json j;
    j["version"] = cli::kVersion;
    j["seed"] = args.seed;
    j["field"] = cli::field_label(field);
    j["curve"] = r.curve.F.to_string();
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["passed"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? 0 : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bourbaki degrees of reduced plane curves"};
  app.set_version_flag("--version", cli::kVersion);
  app.require_subcommand(1);

  CurveArgs analyze_args;
  std::string epsilon;
  std::size_t epsilon_index = 0;
  bool timings = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full invariant report for one curve");
  add_curve_options(analyze_cmd, analyze_args);
  analyze_cmd->add_option("--epsilon", epsilon, "Minimal-degree syzygy to use as epsilon, \"(a, b, c)\"");
  analyze_cmd->add_option("--epsilon-index", epsilon_index, "Pick the i-th minimal-degree generator as epsilon")
      ->capture_default_str();
  analyze_cmd->add_flag("--timings", timings, "Record wall-clock time per stage");

  std::string batch_input, batch_out, batch_field = "qq";
  std::uint64_t batch_seed = 0;
  auto* batch_cmd = app.add_subcommand("batch", "Analyze every curve of a JSON-lines file");
  batch_cmd->add_option("input", batch_input, "One {label, curve, field?, expect?} object per line")->required();
  batch_cmd->add_option("--out", batch_out, "Directory for per-curve reports")->required();
  batch_cmd->add_option("--field", batch_field, "Default field for lines without one")->capture_default_str();
  batch_cmd->add_option("--seed", batch_seed)->capture_default_str();

  std::string table_format = "text";
  auto* table_cmd = app.add_subcommand("paper-table", "Recompute the Bourbaki degrees of the reference curves");
  table_cmd->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CurveArgs verify_args;
  int max_degree = 10;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check one curve against the brute-force oracles");
  add_curve_options(verify_cmd, verify_args);
  verify_cmd->add_option("--max-check-degree", max_degree, "Highest degree for graded dimension checks")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args, epsilon, epsilon_index, timings);
    if (*batch_cmd) return run_batch(batch_input, batch_out, batch_field, batch_seed);
    if (*table_cmd) return run_table(table_format);
    if (*verify_cmd) return run_verify(verify_args, max_degree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
