#include "bourbaki/cli.hpp"
#include "bourbaki/error.hpp"
#include "bourbaki/oracle.hpp"

namespace bourbaki::cli {

namespace {

Check compare(std::string name, long engine, long oracle) {
  return {std::move(name), engine == oracle, "engine " + std::to_string(engine) + ", oracle " + std::to_string(oracle)};
}

Check graded_dims(const std::string& label, const IdealBasis& ideal, int max_degree) {
  const GroebnerBasis gb = buchberger(ideal);
  for (int n = 0; n <= max_degree; ++n) {
    const long engine = standard_monomial_count(gb, n);
    const long oracle = oracle::graded_dim_bruteforce(ideal, n);
    if (engine != oracle) {
      return {"graded dims " + label, false,
              "degree " + std::to_string(n) + ": engine " + std::to_string(engine) + ", oracle " + std::to_string(oracle)};
    }
  }
  return {"graded dims " + label, true, "n <= " + std::to_string(max_degree)};
}

}  // namespace

std::vector<Check> verify_checks(const CurveReport& r, int max_degree, std::uint64_t seed) {
  std::vector<Check> out;
  const Curve& c = r.curve;
  const IdealBasis jac = jacobian_ideal(c);
  const IdealBasis sat = saturation(jac, variables_ideal(c.ring())).ideal;
  const IdealBasis& bour = r.bourbaki.ideal;

  out.push_back(graded_dims("J_F", jac, max_degree));
  out.push_back(graded_dims("J_F:m^inf", sat, max_degree));
  out.push_back(graded_dims("I_eps", bour, max_degree));

  const std::vector<Polynomial> partials = c.partials();
  bool syz = true;
  for (const auto& v : r.syzygies) syz = syz && oracle::syzygy_verify(v, partials);
  out.push_back({"syzygies by substitution", syz, std::to_string(r.syzygies.size()) + " generators"});

  out.push_back(compare("deg R/I_eps", r.bour_hilbert, oracle::degree_bruteforce(bour)));
  out.push_back(compare("deg R/J_F", r.tau.saturated_degree, oracle::degree_bruteforce(sat)));

  for (const auto& [p, b] : r.local_table) {
    out.push_back(compare("Bour_P at " + p.to_string(), b, oracle::local_dim_bruteforce(localize_at(bour, p))));
  }
  for (const auto& [p, t] : r.tau.table) {
    out.push_back(compare("tau_P at " + p.to_string(), t, oracle::local_dim_bruteforce(localize_at(jac, p))));
    out.push_back(compare("tau_P chart recipe at " + p.to_string(), t, tjurina_chart(c, p)));
  }

  if (r.tau.complete) out.push_back(compare("Bour hilbert vs formula", r.bour_hilbert, r.bour_formula));
  out.push_back(compare("Bour local sum + residual vs hilbert", r.bour_local_sum + r.residual, r.bour_hilbert));

  const CoordinateChange change = random_coordinate_change(c.field(), seed);
  const CurveReport moved = analyze(validate_curve(change.apply(c.F)));
  out.push_back(compare("Bour under coordinate change", r.bour_hilbert, moved.bour_hilbert));
  out.push_back(compare("tau under coordinate change", r.tau.saturated_degree, moved.tau.saturated_degree));
  out.push_back({"classification under coordinate change", r.classification == moved.classification,
                 std::string(r.classification ? to_string(*r.classification) : "none") + " vs " +
                     (moved.classification ? to_string(*moved.classification) : "none")});
  return out;
}

}  // namespace bourbaki::cli
