#include "bourbaki/oracle.hpp"

#include <gmpxx.h>

#include <map>

#include "bourbaki/error.hpp"

namespace bourbaki::oracle {

namespace {

using Exponents = std::array<int, kMaxVars>;

Exponents exponents_of(const Monomial& m) {
  Exponents e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = m.exponent(i);
  return e;
}

void monomials_of_degree(int nvars, int n, int var, Exponents& cur, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = n;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur[var] = k;
    monomials_of_degree(nvars, n - k, var + 1, cur, out);
  }
  cur[var] = 0;
}

std::vector<Exponents> monomials_of_degree(int nvars, int n) {
  std::vector<Exponents> out;
  if (n < 0) return out;
  Exponents cur{};
  monomials_of_degree(nvars, n, 0, cur, out);
  return out;
}

// Sparse rows sorted by column. Rows are reduced one at a time against the
// pivots found so far, each pivot owning its leading column; the rank is the
// number of pivots. Over Q the rows stay integral: r <- p_c * r - r_c * p,
// followed by division by the content.
template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

template <class T, class Combine, class Normalize>
std::size_t incremental_rank(std::vector<SparseRow<T>> rows, Combine combine, Normalize normalize) {
  std::map<std::size_t, SparseRow<T>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = combine(row, it->second);
    }
    if (row.empty()) continue;
    normalize(row);
    const std::size_t lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  }
  return pivots.size();
}

// a * r - b * p over the union of supports, dropping zeros.
template <class T, class Mul, class Sub, class IsZero>
SparseRow<T> axpy(const T& a, const SparseRow<T>& r, const T& b, const SparseRow<T>& p, Mul mul, Sub sub, IsZero zero) {
  SparseRow<T> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    T v;
    std::size_t col;
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      col = r[i].first;
      v = mul(a, r[i++].second);
    } else if (i == r.size() || p[j].first < r[i].first) {
      col = p[j].first;
      v = sub(T(0), mul(b, p[j++].second));
    } else {
      col = r[i].first;
      v = sub(mul(a, r[i++].second), mul(b, p[j++].second));
    }
    if (!zero(v)) out.emplace_back(col, std::move(v));
  }
  return out;
}

std::size_t integer_rank(std::vector<SparseRow<mpz_class>> rows) {
  auto mul = [](const mpz_class& a, const mpz_class& b) -> mpz_class { return a * b; };
  auto sub = [](const mpz_class& a, const mpz_class& b) -> mpz_class { return a - b; };
  auto zero = [](const mpz_class& a) { return a == 0; };
  auto normalize = [](SparseRow<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  };
  auto combine = [&](const SparseRow<mpz_class>& r, const SparseRow<mpz_class>& p) {
    mpz_class a = p.front().second, b = r.front().second, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    SparseRow<mpz_class> out = axpy(a, r, b, p, mul, sub, zero);
    normalize(out);
    return out;
  };
  return incremental_rank(std::move(rows), combine, normalize);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

std::size_t modular_rank(std::vector<SparseRow<std::uint64_t>> rows, std::uint64_t p) {
  auto mul = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
  auto sub = [p](std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; };
  auto zero = [](std::uint64_t a) { return a == 0; };
  // Pivots are monic, so r - r_c * pivot clears the leading column.
  auto normalize = [&](SparseRow<std::uint64_t>& row) {
    const std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
    for (auto& [c, v] : row) v = v * inv % p;
  };
  auto combine = [&](const SparseRow<std::uint64_t>& r, const SparseRow<std::uint64_t>& piv) {
    return axpy<std::uint64_t>(1, r, r.front().second, piv, mul, sub, zero);
  };
  return incremental_rank(std::move(rows), combine, normalize);
}

// Rows of (monomial * g) for every generator g and every monomial multiplier
// in `multiplier_degrees(deg g)`, restricted to the columns in `index`.
// Terms landing outside the index are dropped (truncation).
std::vector<std::vector<FieldElement>> product_rows(const IdealBasis& ideal, const std::map<Exponents, std::size_t>& index,
                                                     const std::vector<std::vector<Exponents>>& multipliers_by_gen) {
  const Field k = ideal.ring().field();
  std::vector<std::vector<FieldElement>> rows;
  const auto& gens = ideal.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& m : multipliers_by_gen[g]) {
      std::vector<FieldElement> row(index.size(), FieldElement::zero(k));
      bool any = false;
      for (const auto& t : gens[g].terms()) {
        Exponents e = exponents_of(t.monomial);
        for (int i = 0; i < kMaxVars; ++i) e[i] += m[i];
        if (auto it = index.find(e); it != index.end()) {
          row[it->second] = t.coeff;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<FieldElement>> rows, Field field) {
  if (field.is_rational()) {
    std::vector<SparseRow<mpz_class>> ints;
    for (const auto& row : rows) {
      mpz_class l = 1;
      for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
      SparseRow<mpz_class> out;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) out.emplace_back(j, row[j].rational().get_num() * (l / row[j].rational().get_den()));
      }
      ints.push_back(std::move(out));
    }
    return integer_rank(std::move(ints));
  }
  std::vector<SparseRow<std::uint64_t>> res;
  for (const auto& row : rows) {
    SparseRow<std::uint64_t> out;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) out.emplace_back(j, row[j].residue());
    }
    res.push_back(std::move(out));
  }
  return modular_rank(std::move(res), field.characteristic());
}

long graded_dim_bruteforce(const IdealBasis& ideal, int n) {
  const int nvars = ideal.ring().nvars();
  const std::vector<Exponents> basis = monomials_of_degree(nvars, n);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<std::vector<Exponents>> multipliers;
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, g.to_string() + " is not homogeneous");
    multipliers.push_back(monomials_of_degree(nvars, n - g.degree()));
  }
  const auto rows = product_rows(ideal, index, multipliers);
  return static_cast<long>(basis.size() - exact_rank(rows, ideal.ring().field()));
}

long degree_bruteforce(const IdealBasis& ideal, int window) {
  if (window < 1) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  int top = 0;
  for (const auto& g : ideal.generators()) top = std::max(top, g.degree());
  std::vector<long> values;
  for (int n = 2 * top + 2; n <= kDegreeCap; ++n) {
    values.push_back(graded_dim_bruteforce(ideal, n));
    const std::size_t w = static_cast<std::size_t>(window);
    if (values.size() >= w &&
        std::all_of(values.end() - window, values.end(), [&](long v) { return v == values.back(); })) {
      return values.back();
    }
  }
  throw Error(ErrorKind::NotStabilized, "Hilbert function of " + ideal.to_string() + " not constant by degree " +
                                            std::to_string(kDegreeCap));
}

long local_dim_bruteforce(const IdealBasis& ideal, int cap) {
  const int nvars = ideal.ring().nvars();
  long previous = -1;
  for (int D = 1; D <= cap; ++D) {
    std::vector<Exponents> basis;
    for (int n = 0; n < D; ++n) {
      auto layer = monomials_of_degree(nvars, n);
      basis.insert(basis.end(), layer.begin(), layer.end());
    }
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    // Every multiplier of degree < D; products are truncated below degree D.
    std::vector<std::vector<Exponents>> multipliers(ideal.size(), basis);
    const auto rows = product_rows(ideal, index, multipliers);
    const long dim = static_cast<long>(basis.size() - exact_rank(rows, ideal.ring().field()));
    if (dim == previous) return dim;
    previous = dim;
  }
  throw Error(ErrorKind::NotStabilized,
              "local dimension of " + ideal.to_string() + " not stable by order " + std::to_string(cap));
}

bool syzygy_verify(const ModuleVector& v, std::span<const Polynomial> gens) {
  if (static_cast<std::size_t>(v.rank()) != gens.size()) {
    throw Error(ErrorKind::ArityMismatch, "vector and generator list differ in length");
  }
  std::map<Exponents, FieldElement> sum;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& a : v[static_cast<int>(i)].terms()) {
      for (const auto& b : gens[i].terms()) {
        Exponents e = exponents_of(a.monomial);
        const Exponents f = exponents_of(b.monomial);
        for (int j = 0; j < kMaxVars; ++j) e[j] += f[j];
        const FieldElement c = a.coeff * b.coeff;
        if (auto it = sum.find(e); it != sum.end()) {
          it->second += c;
        } else {
          sum.emplace(e, c);
        }
      }
    }
  }
  return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace bourbaki::oracle
