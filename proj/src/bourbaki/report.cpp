#include <algorithm>
#include <chrono>

#include "bourbaki/analysis.hpp"
#include "bourbaki/error.hpp"

namespace bourbaki {

namespace {

class Stopwatch {
 public:
  Stopwatch(bool enabled, std::vector<std::pair<std::string, double>>& out) : enabled_(enabled), out_(out) {}

  void lap(const char* stage) {
    if (!enabled_) return;
    const auto now = std::chrono::steady_clock::now();
    out_.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  bool enabled_;
  std::vector<std::pair<std::string, double>>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

bool euler_identity(const Curve& c) {
  const std::vector<Polynomial> partials = c.partials();
  Polynomial sum(c.ring());
  for (int i = 0; i < 3; ++i) sum = sum + Polynomial::variable(c.ring(), i) * partials[i];
  return sum == c.F * FieldElement::from_int(c.field(), c.d + 1);
}

// deg v_i - deg delta_i agrees over the nonzero entries of the kernel vector.
bool kernel_homogeneous(const BourbakiIdealData& b, const std::vector<ModuleVector>& deltas) {
  std::optional<int> offset;
  for (std::size_t i = 0; i < b.kernel_vector.size(); ++i) {
    const Polynomial& v = b.kernel_vector[i];
    if (v.is_zero()) continue;
    if (!v.is_homogeneous()) return false;
    const int o = v.degree() - deltas[i].degree();
    if (offset && *offset != o) return false;
    offset = o;
  }
  return offset.has_value();
}

}  // namespace

bool CurveReport::consistent() const {
  return classification.has_value() &&
         std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
}

CurveReport analyze(const Curve& c, const AnalysisConfig& config) {
  std::vector<std::pair<std::string, double>> timings;
  Stopwatch clock(config.timings, timings);
  const SyzygyAnalysis s = syzygy_analysis(c, config.syzygy);
  clock.lap("syzygies");
  BourbakiIdealData bour = bourbaki_ideal(s);
  clock.lap("bourbaki_ideal");

  CurveReport r{.curve = c,
                .d = c.d,
                .e = s.e,
                .syzygy_degrees = s.degrees,
                .syzygies = s.minimal_generators,
                .bourbaki = std::move(bour)};
  auto flag = [&](const char* name, bool ok) { r.flags.emplace_back(name, ok); };

  const std::vector<Polynomial> partials = c.partials();
  flag("euler_identity", euler_identity(c));
  flag("syzygies_verified", std::all_of(r.syzygies.begin(), r.syzygies.end(),
                                        [&](const ModuleVector& v) { return v.dot(partials).is_zero(); }));
  flag("epsilon_primitive", gcd(s.epsilon().components()).is_constant());
  flag("e_le_d", r.e <= r.d);

  // phi = (phi(delta_2), ..., phi(delta_k)) must kill every relation of M.
  const std::vector<ModuleVector> deltas = s.quotient_generators();
  const auto& rows = r.bourbaki.presentation.rows;
  flag("kernel_annihilates", std::all_of(rows.begin(), rows.end(), [&](const ModuleVector& row) {
         return row.dot(r.bourbaki.kernel_vector).is_zero();
       }));
  flag("kernel_homogeneous", kernel_homogeneous(r.bourbaki, deltas));
  flag("offset_matches", r.bourbaki.degree_offset == r.e - r.d);

  r.tau = tjurina(c);
  clock.lap("tjurina");

  // The saturated degree is tau(F) even when some singular points are not
  // rational; the comparison is only asserted when the table is complete.
  const GlobalDegrees g = global_degrees(c, s, r.bourbaki, r.tau.saturated_degree);
  r.bour_hilbert = g.hilbert;
  r.bour_formula = g.formula;
  if (r.tau.complete) flag("formula_agrees", r.bour_hilbert == r.bour_formula);

  r.local_table = local_table(r.bourbaki.ideal, &r.residual);
  for (const auto& [p, deg] : r.local_table) r.bour_local_sum += deg;
  r.points_complete = r.residual == 0;
  r.ell = r.local_table.size();
  flag("local_sum_plus_residual", r.bour_local_sum + r.residual == r.bour_hilbert);
  flag("bour_ge_ell", r.bour_hilbert >= static_cast<long>(r.ell));
  flag("points_positive",
       std::all_of(r.local_table.begin(), r.local_table.end(), [](const auto& e) { return e.second >= 1; }));
  clock.lap("local_table");

  try {
    r.classification = classify(r.bour_hilbert, r.syzygies.size(), r.local_table);
    flag("classification_consistent", true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InconsistentClassification) throw;
    flag("classification_consistent", false);
  }
  clock.lap("classification");
  r.timings_ms = std::move(timings);
  return r;
}

}  // namespace bourbaki
