// Hilbert series of monomial ideals by pivot recursion:
//   N(I) = N(I + <p>) + t^deg(p) * N(I : p)
// with p a power of a variable shared by two minimal generators. Ideals whose
// minimal generators are pairwise coprime are the base case, where the
// numerator factors as a product of (1 - t^deg m).

#include <algorithm>

#include "bourbaki/error.hpp"
#include "bourbaki/groebner.hpp"

namespace bourbaki {

namespace {

using Series = std::vector<long>;

void add_into(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Series numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimal_monomials(std::move(gens));
  // Variable shared by the most generators, and its smallest exponent among
  // the generators that are not pure powers.
  int pivot = -1, best_count = 1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& m : gens) count += m.exponent(v) > 0;
    if (count > best_count) {
      best_count = count;
      pivot = v;
    }
  }
  if (pivot < 0) {
    Series n{1};
    for (const auto& m : gens) {
      Series next(n.size() + m.degree(), 0);
      add_into(next, n, 0);
      for (std::size_t i = 0; i < n.size(); ++i) next[i + m.degree()] -= n[i];
      n = std::move(next);
    }
    return n;
  }
  int e = 0;
  for (const auto& m : gens) {
    const int k = m.exponent(pivot);
    if (k > 0 && k != m.degree() && (e == 0 || k < e)) e = k;
  }
  const Monomial p = Monomial::variable(pivot, e);

  std::vector<Monomial> sum = gens;
  sum.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& m : gens) quotient.push_back(m / gcd(m, p));

  Series n = numerator(std::move(sum), nvars);
  add_into(n, numerator(std::move(quotient), nvars), e);
  while (!n.empty() && n.back() == 0) n.pop_back();
  return n;
}

// Divides by (1 - t); nullopt when not exact.
std::optional<Series> divide_one_minus_t(const Series& n) {
  Series q;
  long acc = 0;
  for (long c : n) {
    acc += c;
    q.push_back(acc);
  }
  if (acc != 0) return std::nullopt;
  if (!q.empty()) q.pop_back();
  return q;
}

}  // namespace

std::vector<long> hilbert_numerator(const std::vector<Monomial>& monomials, int nvars) {
  Series n = numerator(monomials, nvars);
  while (!n.empty() && n.back() == 0) n.pop_back();
  return n;
}

long hilbert_degree(const GroebnerBasis& gb) {
  if (gb.ring().nvars() != 3) throw Error(ErrorKind::ArityMismatch, "Hilbert degree is defined here for k[x,y,z]");
  Series n = hilbert_numerator(gb.leading_monomials(), 3);
  for (int k = 0; k < 2; ++k) {
    auto q = divide_one_minus_t(n);
    if (!q) throw Error(ErrorKind::NotZeroDimensional, "the projective zero set is not finite");
    n = std::move(*q);
  }
  long degree = 0;
  for (long c : n) degree += c;
  return degree;
}

long hilbert_degree(const IdealBasis& ideal) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Hilbert degree needs a homogeneous ideal");
  return hilbert_degree(buchberger(ideal));
}

long standard_monomial_count(const GroebnerBasis& gb, int degree) {
  const int n = gb.ring().nvars();
  const std::vector<Monomial> leads = gb.leading_monomials();
  long count = 0;
  std::vector<int> e(n, 0);
  // Enumerate exponent vectors of total degree `degree`.
  auto visit = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      e[var] = remaining;
      const Monomial m(e);
      for (const auto& l : leads) {
        if (l.divides(m)) return;
      }
      ++count;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (degree >= 0) visit(visit, 0, degree);
  return count;
}

}  // namespace bourbaki
