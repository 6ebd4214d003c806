#pragma once

#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "bourbaki/analysis.hpp"
#include "bourbaki/cli.hpp"
#include "bourbaki/error.hpp"
#include "bourbaki/parser.hpp"

namespace testing {

using namespace bourbaki;

inline Ring qq() { return Ring::xyz(Field::rationals()); }
inline Ring fp(std::uint32_t p = Field::kDefaultPrime) { return Ring::xyz(Field::prime(p)); }

inline Polynomial P(std::string_view text, const Ring& ring = qq()) { return parse_polynomial(text, ring); }

inline IdealBasis ideal(std::initializer_list<const char*> gens, const Ring& ring = qq()) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial(g, ring));
  return IdealBasis(ring, std::move(polys));
}

inline ModuleVector V(std::string_view text, const Ring& ring = qq()) { return cli::parse_vector(text, ring); }

inline FieldElement q(const Field& f, long num, long den = 1) {
  return FieldElement::from_int(f, num) / FieldElement::from_int(f, den);
}

inline ProjectivePoint point(long x, long y, long z, Field f = Field::rationals()) {
  return ProjectivePoint(q(f, x), q(f, y), q(f, z));
}

inline ModuleVector unshifted(const ModuleVector& v) { return v.with_shifts(std::vector<int>(v.rank(), 0)); }
/// Degree of the components, ignoring shift bookkeeping.
inline int plain_degree(const ModuleVector& v) { return unshifted(v).degree(); }

inline Curve curve(std::string_view text, const Ring& ring = qq()) { return validate_curve(P(text, ring)); }

/// Random polynomial with at most `terms` terms of total degree <= max_degree
/// (exactly `degree` when homogeneous), small integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_degree, int terms,
                                    bool homogeneous = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    const int deg = homogeneous ? max_degree : std::uniform_int_distribution<int>(0, max_degree)(rng);
    std::vector<int> e(ring.nvars(), 0);
    int left = deg;
    for (int v = 0; v + 1 < ring.nvars(); ++v) {
      e[v] = std::uniform_int_distribution<int>(0, left)(rng);
      left -= e[v];
    }
    e[ring.nvars() - 1] = left;
    const int c = coeff(rng);
    if (c != 0) out.push_back(Term{Monomial(e), FieldElement::from_int(ring.field(), c)});
  }
  return Polynomial(ring, std::move(out));
}

/// Hand-computed nodal-cubic syzygies, written against the generators
/// (yz, 3y^2 + 2xz, 3x^2 + 2xz) of J_F; (a, b, c) there is
/// (-b - c, a/2, 3b) against (F_x, F_y, F_z).
inline ModuleVector nodal_to_partials(const ModuleVector& v) {
  const Field k = v.ring().field();
  return ModuleVector({-(v[1] + v[2]), v[0] * q(k, 1, 2), v[1] * q(k, 3)});
}

inline std::vector<ModuleVector> nodal_reference_syzygies(const Ring& r = qq()) {
  return {V("(3*y^2 + 2*x*z, -y*z, 0)", r), V("(9*x*y + 6*y*z, -3*x*z - 2*z^2, 2*z^2)", r),
          V("(3*x^2 + 2*x*z, 0, -y*z)", r), V("(0, 3*x^2 + 2*x*z, -3*y^2 - 2*x*z)", r)};
}

inline constexpr const char* kNodal = "y^2*z - x^3 - x^2*z";
inline constexpr const char* kQuartic = "y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2";
/// A minimal syzygy of the nodal cubic giving I_eps = <2z^2, yz, 2xz + 3y^2>, against (F_x, F_y, F_z).
inline constexpr const char* kNodalEpsilon = "(2*y*z, 3*y^2 + 2*x*z, -6*y*z)";
/// The syzygy of degree 2 matching the quartic's relation coefficients.
inline constexpr const char* kQuarticEpsilon = "(x*z, -2*x*y + y*z, 2*x*z - z^2)";

inline std::string nearly_free(int m, int n) {
  return "y^" + std::to_string(m) + "*z^" + std::to_string(n - m) + " - x^" + std::to_string(n);
}

inline std::string two_point(int b) {
  return "x^" + std::to_string(2 * b + 1) + "*z + x^" + std::to_string(b + 1) + "*y^" + std::to_string(b + 1) + " + y^" +
         std::to_string(2 * b + 1) + "*z";
}

/// The first syzygy of the two-point family, chosen so that I_eps is
/// <yz^2, x^2z, xyz, (2b+1)y^b z - (b+1)x^(b+1)>.
inline std::string two_point_epsilon(int b) {
  const long b1 = b + 1, b2 = 2 * b + 1;
  const std::string B = std::to_string(b);
  return "(" + std::to_string(b1) + "*x^" + std::to_string(b + 2) + " + " + std::to_string(b2) + "*x*y^" + B + "*z, -" +
         std::to_string(b1) + "*x^" + std::to_string(b + 1) + "*y + " + std::to_string(b2) + "*y^" + std::to_string(b + 1) +
         "*z, -" + std::to_string(b2 * b1) + "*x^" + std::to_string(b + 1) + "*z - " + std::to_string(b2 * b2) + "*y^" + B +
         "*z^2)";
}

inline std::string free_curve(int a) {
  return "x^" + std::to_string(2 * a + 1) + " + x^" + std::to_string(a) + "*y^" + std::to_string(a + 1) + " + y^" +
         std::to_string(2 * a) + "*z";
}

}  // namespace testing
