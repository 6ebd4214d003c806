#include "bourbaki/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "bourbaki/error.hpp"

namespace bourbaki {

namespace {

int single_variable(const Polynomial& f) {
  int var = -1;
  for (int v = 0; v < f.nvars(); ++v) {
    if (!f.involves(v)) continue;
    if (var >= 0) throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate: " + f.to_string());
    var = v;
  }
  return var;
}

// ---------------------------------------------------------------- F_p --------

using Dense = std::vector<std::uint64_t>;  // coefficient of t^i at index i

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

Dense poly_mod(Dense a, const Dense& m, std::uint64_t p) {
  const std::uint64_t inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Dense poly_mulmod(const Dense& a, const Dense& b, const Dense& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Dense c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return poly_mod(std::move(c), m, p);
}

Dense poly_powmod(Dense base, std::uint64_t e, const Dense& m, std::uint64_t p) {
  Dense result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Dense poly_gcd(Dense a, Dense b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Dense poly_sub(Dense a, const Dense& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Dense poly_div(Dense a, const Dense& m, std::uint64_t p) {
  const std::uint64_t inv = inv_mod(m.back(), p);
  Dense q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * inv % p;
    const std::size_t shift = a.size() - m.size();
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return q;
}

// Splits a monic product of distinct linear factors (Cantor-Zassenhaus, odd p).
void split_linear(const Dense& f, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& roots) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    roots.push_back((p - f[0]) % p);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    Dense probe{dist(rng), 1};
    Dense h = poly_powmod(probe, (p - 1) / 2, f, p);
    h = poly_sub(h, Dense{1}, p);
    Dense g = poly_gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split_linear(g, p, rng, roots);
      split_linear(poly_div(f, g, p), p, rng, roots);
      return;
    }
  }
}

std::vector<FieldElement> prime_field_roots(const Polynomial& f, int var) {
  const Field field = f.field();
  const std::uint64_t p = field.characteristic();
  Dense a(f.degree_in(var) + 1, 0);
  for (const auto& t : f.terms()) a[t.monomial.exponent(var)] = t.coeff.residue();
  trim(a);
  std::vector<std::uint64_t> roots;
  if (p < 1000) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
      if (acc == 0) roots.push_back(x);
    }
  } else {
    // gcd(f, t^p - t) is the product of the distinct linear factors.
    Dense monic_f = poly_gcd(a, Dense{}, p);
    Dense tp = poly_powmod(Dense{0, 1}, p, monic_f, p);
    Dense lin = poly_gcd(monic_f, poly_sub(tp, Dense{0, 1}, p), p);
    std::mt19937_64 rng(0x5eed);
    split_linear(lin, p, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<FieldElement> out;
  for (auto r : roots) out.push_back(FieldElement::from_int(field, static_cast<long>(r)));
  return out;
}

// ------------------------------------------------------------------ Q --------

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  for (unsigned long d = 2; d < 10000; ++d) {
    if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      n /= d;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> primes = factor_integer(n);
  std::vector<mpz_class> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t count = divs.size();
    mpz_class power = 1;
    for (std::size_t k = i; k < j; ++k) {
      power *= primes[i];
      for (std::size_t m = 0; m < count; ++m) divs.push_back(divs[m] * power);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<FieldElement> rational_roots(const Polynomial& f, int var) {
  // Square-free part first; its integer coefficients are smaller.
  Polynomial sqfree = f;
  const Polynomial df = differentiate(f, var);
  if (!df.is_zero()) {
    const Polynomial g = gcd(f, df);
    if (!g.is_constant()) sqfree = *divide_exact(f, g);
  }
  const Polynomial prim = primitive_integral(sqfree);
  std::vector<mpz_class> a(prim.degree_in(var) + 1, 0);
  for (const auto& t : prim.terms()) a[t.monomial.exponent(var)] = t.coeff.rational().get_num();

  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (a.size() - low >= 2) {
    const std::vector<mpz_class> ps = divisors(a[low]);
    const std::vector<mpz_class> qs = divisors(a.back());
    const std::size_t n = a.size() - 1;
    for (const auto& q : qs) {
      // q^(n-i) for every i
      std::vector<mpz_class> qpow(n + 1, 1);
      for (std::size_t k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * q;
      for (const auto& pabs : ps) {
        if (gcd(pabs, q) != 1) continue;
        for (int sign : {1, -1}) {
          const mpz_class p = sign * pabs;
          // sum a_i p^i q^(n-i) == 0
          mpz_class acc = 0;
          for (std::size_t i = a.size(); i-- > 0;) acc = acc * p + a[i] * qpow[n - i];
          if (acc == 0) roots.emplace_back(p, q);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<FieldElement> out;
  for (auto& r : roots) {
    r.canonicalize();
    out.push_back(FieldElement::from_rational(f.field(), r));
  }
  return out;
}

}  // namespace

std::vector<mpz_class> factor_integer(const mpz_class& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  std::vector<mpz_class> out;
  factor_into(abs(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> roots_in_base_field(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has every element as a root");
  const int var = single_variable(f);
  if (var < 0) return {};
  return f.field().is_rational() ? rational_roots(f, var) : prime_field_roots(f, var);
}

}  // namespace bourbaki
