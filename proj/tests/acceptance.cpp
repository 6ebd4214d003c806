// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "bourbaki/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    expect(false, msg.str());
  }
};

using Table = std::vector<std::pair<ProjectivePoint, long>>;

std::string show(const Table& t) {
  std::string out = "{";
  for (const auto& [p, v] : t) out += (out.size() > 1 ? ", " : "") + p.to_string() + "->" + std::to_string(v);
  return out + "}";
}

// Ideals met along criteria 1-5, re-examined against the oracles in criterion 6.
struct Registry {
  std::vector<std::pair<std::string, IdealBasis>> ideals;
  std::vector<std::pair<std::string, CurveReport>> reports;

  void add(const std::string& label, const CurveReport& r) {
    const IdealBasis m = variables_ideal(r.curve.ring());
    const IdealBasis jac = jacobian_ideal(r.curve);
    ideals.emplace_back(label + " J_F", jac);
    ideals.emplace_back(label + " J_F:m^inf", saturation(jac, m).ideal);
    ideals.emplace_back(label + " I_eps", r.bourbaki.ideal);
    ideals.emplace_back(label + " I_eps:m^inf", saturation(r.bourbaki.ideal, m).ideal);
    reports.emplace_back(label, r);
  }
};

CurveReport run(const std::string& text, const std::optional<std::string>& eps = std::nullopt) {
  const Curve c = curve(text);
  AnalysisConfig config;
  if (eps) config.syzygy.epsilon = V(*eps, c.ring());
  return analyze(c, config);
}

void three_methods(Outcome& o, const CurveReport& r, long want) {
  o.equal(r.bour_hilbert, want, "hilbert");
  o.equal(r.bour_formula, want, "formula");
  o.equal(r.bour_local_sum, want, "local sum");
  o.equal(r.residual, 0, "residual");
  o.expect(r.consistent(), "report flags");
}

Outcome nodal_cubic(Registry& reg) {
  Outcome o;
  const CurveReport r = run(kNodal, kNodalEpsilon);
  reg.add("nodal", r);
  three_methods(o, r, 3);
  o.equal(show(r.local_table), show({{point(1, 0, 0), 3}}), "local table");
  o.expect(ideals_equal(r.bourbaki.ideal, ideal({"2*z^2", "y*z", "2*x*z + 3*y^2"})), "I_eps");
  o.equal(local_degree(r.bourbaki.ideal, point(1, 0, 0)), 3, "local degree");
  o.detail = o.passed ? "Bour 3 = 3 = 3, V = {(1:0:0)}" : o.detail;
  return o;
}

Outcome quartic(Registry& reg) {
  Outcome o;
  const CurveReport r = run(kQuartic, kQuarticEpsilon);
  reg.add("quartic", r);
  o.equal(r.tau.global, 5, "tau");
  o.equal(show(r.tau.table), show({{point(0, 0, 1), 1}, {point(1, 0, 1), 1}, {point(0, 1, 0), 3}}), "tau table");
  o.equal(r.e, 2, "e");
  o.equal(3L * 3 + 2 * 2 - 2 * 3 - 5, r.bour_formula, "9 + 4 - 6 - 5");
  three_methods(o, r, 2);
  o.equal(show(r.local_table), show({{point(0, 1, 0), 1}, {point(1, 0, 0), 1}}), "local table");
  o.expect(ideals_equal(r.bourbaki.ideal, ideal({"2*x*y - y*z", "z"})), "I_eps");
  o.detail = o.passed ? "tau 5 = 1+3+1, e 2, Bour 2 = 2 = 1+1" : o.detail;
  return o;
}

Outcome nearly_free_family(Registry& reg) {
  Outcome o;
  for (auto [m, n] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 7}, {4, 5}}) {
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
    const CurveReport r = run(nearly_free(m, n));
    reg.add("nearly free " + tag, r);
    o.equal(r.tau.global, (n - 1) * (n - 2), tag + "tau");
    o.equal(r.bour_hilbert, 1, tag + "Bour");
    o.expect(r.classification == Classification::NearlyFree, tag + "classification");
    o.expect(ideals_equal(r.bourbaki.ideal, ideal({"y", "z"})), tag + "I_eps");
    o.expect(r.consistent(), tag + "flags");
  }
  if (o.passed) o.detail = "5 curves nearly free, I_eps = <y, z>";
  return o;
}

Outcome two_point_family(Registry& reg) {
  Outcome o;
  for (int b : {2, 3, 4}) {
    const std::string tag = "b=" + std::to_string(b) + " ";
    const CurveReport r = run(two_point(b), two_point_epsilon(b));
    reg.add("two point " + tag, r);
    o.equal(r.bour_hilbert, b + 4, tag + "Bour");
    o.equal(show(r.local_table), show({{point(0, 0, 1), 2}, {point(0, 1, 0), b + 2}}), tag + "local table");
    std::vector<int> want{b + 2, b + 2, b + 2, b + 2, 2 * b};
    std::vector<int> got = r.syzygy_degrees;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    o.expect(got == want, tag + "syzygy degrees");
    o.expect(r.consistent(), tag + "flags");
  }
  if (o.passed) o.detail = "Bour 6, 7, 8 with locals b+2 and 2";
  return o;
}

Outcome table_curves(Registry& reg) {
  Outcome o;
  for (const auto& entry : cli::reference_corpus()) {
    const bool wanted = entry.saito || entry.label == "F_3" || entry.label == "F_4" || entry.label == "F_5";
    if (!wanted) continue;
    const Curve c = curve(entry.curve);
    const CurveReport r = analyze(c);
    reg.add(entry.label, r);
    o.equal(r.bour_hilbert, entry.expected, entry.label + " Bour");
    o.expect(r.consistent(), entry.label + " flags");
    if (entry.saito) {
      o.expect(r.classification == Classification::Free, entry.label + " classification");
      o.expect(saito_check(c, V(entry.saito->first), V(entry.saito->second)), entry.label + " Saito");
    }
  }
  if (o.passed) o.detail = "F_a free for a = 2, 3 (Saito); F_3 3, F_4 4, F_5 5";
  return o;
}

Outcome oracle_equivalence(const Registry& reg) {
  Outcome o;
  std::size_t dims = 0, locals = 0;
  for (const auto& [label, I] : reg.ideals) {
    const GroebnerBasis gb = buchberger(I);
    for (int n = 0; n <= 12; ++n, ++dims) {
      o.equal(standard_monomial_count(gb, n), oracle::graded_dim_bruteforce(I, n), label + " degree " + std::to_string(n));
    }
  }
  for (const auto& [label, r] : reg.reports) {
    const IdealBasis jac = jacobian_ideal(r.curve);
    for (const auto& [p, b] : r.local_table) {
      o.equal(b, oracle::local_dim_bruteforce(localize_at(r.bourbaki.ideal, p)), label + " Bour at " + p.to_string());
      ++locals;
    }
    for (const auto& [p, t] : r.tau.table) {
      o.equal(t, oracle::local_dim_bruteforce(localize_at(jac, p)), label + " tau at " + p.to_string());
      ++locals;
    }
  }
  if (o.passed) {
    o.detail = std::to_string(reg.ideals.size()) + " ideals, " + std::to_string(dims) + " graded dimensions, " +
               std::to_string(locals) + " local degrees";
  }
  return o;
}

Outcome random_curves() {
  Outcome o;
  std::mt19937_64 rng(2024);
  const Ring ring = fp();
  int accepted = 0, singular = 0, complete = 0;
  while (accepted < 200) {
    const int degree = std::uniform_int_distribution<int>(1, 5)(rng);
    const int terms = std::uniform_int_distribution<int>(2, 7)(rng);
    const Polynomial F = random_polynomial(rng, ring, degree, terms, true);
    std::optional<Curve> c;
    try {
      c = validate_curve(F);
    } catch (const Error&) {
      continue;  // not reduced, or not a curve of this degree
    }
    ++accepted;
    const std::string tag = F.to_string() + ": ";
    try {
      const CurveReport r = analyze(*c);
      const auto partials = c->partials();
      const Polynomial euler = P("x", ring) * partials[0] + P("y", ring) * partials[1] + P("z", ring) * partials[2];
      o.expect(euler == F * FieldElement::from_int(ring.field(), degree), tag + "Euler identity");
      for (const auto& v : r.syzygies) o.expect(oracle::syzygy_verify(v, partials), tag + "syzygy " + v.to_string());
      o.expect(r.e <= r.d, tag + "e <= d");
      o.expect(r.bour_hilbert >= static_cast<long>(r.ell), tag + "Bour >= ell");
      if (r.tau.complete) o.equal(r.bour_formula, r.bour_hilbert, tag + "formula");
      o.equal(r.bour_local_sum + r.residual, r.bour_hilbert, tag + "local sum + residual");
      o.expect(r.classification.has_value(), tag + "classification");
      o.expect(r.consistent(), tag + "flags");
      singular += r.tau.saturated_degree > 0;
      complete += r.tau.complete;
    } catch (const std::exception& e) {
      o.expect(false, tag + e.what());
    }
  }
  if (o.passed) {
    o.detail = "200 curves over F_32003 (" + std::to_string(singular) + " singular, " + std::to_string(complete) +
               " with complete tau tables)";
  }
  return o;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(BOURBAKI_TOOL) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands{
      "paper-table --format json",
      "analyze --curve '" + std::string(kNodal) + "' --seed 42 --format json",
      "analyze --curve '" + std::string(kQuartic) + "' --seed 42 --format json",
      "analyze --curve '" + two_point(2) + "' --seed 7 --field fp=32003 --format json"};
  for (const auto& cmd : commands) {
    const std::string first = capture(cmd);
    o.expect(!first.empty(), cmd + " produced no output");
    for (int i = 0; i < 2; ++i) o.expect(capture(cmd) == first, cmd + " differs between runs");
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands, 3 runs each, byte-identical";
  return o;
}

}  // namespace

int main() {
  Registry reg;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nodal cubic", [&] { return nodal_cubic(reg); }},
      {"quartic with three singular points", [&] { return quartic(reg); }},
      {"nearly free family y^m z^(n-m) - x^n", [&] { return nearly_free_family(reg); }},
      {"two-point family, b = 2, 3, 4", [&] { return two_point_family(reg); }},
      {"table curves and free curves", [&] { return table_curves(reg); }},
      {"oracle equivalence", [&] { return oracle_equivalence(reg); }},
      {"random reduced curves", random_curves},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s) [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.passed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
