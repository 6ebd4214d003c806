// Multivariate gcd by recursive content / primitive-part reduction.
//
// A polynomial is viewed as univariate in its highest-index variable with
// coefficients in the remaining variables. Contents are computed recursively;
// the primitive parts are combined by a primitive pseudo-remainder sequence.
// Every intermediate remainder is made monic over the field to keep rational
// coefficients from growing.

#include "bourbaki/error.hpp"
#include "bourbaki/polynomial.hpp"

namespace bourbaki {

namespace {

int main_variable(const Polynomial& f, const Polynomial& g) {
  for (int v = f.nvars() - 1; v >= 0; --v) {
    if (f.involves(v) || g.involves(v)) return v;
  }
  return -1;
}

// Coefficients of f as a polynomial in `var`, indexed by exponent.
std::vector<Polynomial> coefficients_in(const Polynomial& f, int var) {
  std::vector<std::vector<Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    const int e = t.monomial.exponent(var);
    buckets[e].push_back(Term{t.monomial.with_exponent(var, 0), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b));
  return out;
}

Polynomial content_in(const Polynomial& f, int var) {
  return gcd(coefficients_in(f, var));
}

Polynomial exact(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact division in gcd");
  return *q;
}

Polynomial primitive_part(const Polynomial& f, int var) {
  if (f.is_zero()) return f;
  return exact(f, content_in(f, var)).monic();
}

// Sparse pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
  const int db = b.degree_in(var);
  const std::vector<Polynomial> bc = coefficients_in(b, var);
  const Polynomial& lb = bc.back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Polynomial la = coefficients_in(a, var).back();
    const Polynomial shift = Polynomial::term(a.ring(), Monomial::variable(var, da - db), FieldElement::one(a.field()));
    a = lb * a - la * shift * b;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const int var = main_variable(f, g);
  if (var < 0) return Polynomial::constant(f.ring(), 1);
  if (!f.involves(var)) return gcd(f, content_in(g, var));
  if (!g.involves(var)) return gcd(content_in(f, var), g);

  const Polynomial c = gcd(content_in(f, var), content_in(g, var));
  Polynomial a = primitive_part(f, var);
  Polynomial b = primitive_part(g, var);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(var) == 0) return c.monic();
    Polynomial r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = primitive_part(r, var);
  }
  return (c * a).monic();
}

Polynomial gcd(std::span<const Polynomial> polys) {
  if (polys.empty()) throw Error(ErrorKind::InvalidArgument, "gcd of an empty list");
  Polynomial acc = polys.front().monic();
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (acc.is_constant() && !acc.is_zero()) break;
    acc = gcd(acc, polys[i]);
  }
  return acc;
}

}  // namespace bourbaki
