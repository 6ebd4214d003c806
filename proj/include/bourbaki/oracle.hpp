#pragma once

// Brute-force cross-checks built only on dense linear algebra over monomial
// bases. Nothing here touches the Groebner engine.

#include <span>
#include <vector>

#include "bourbaki/groebner.hpp"

namespace bourbaki::oracle {

/// Rank of a matrix by row reduction on sparse rows: fraction-free (integer
/// rows, content removed) over Q, monic pivots over F_p. All rows must have
/// equal length.
std::size_t exact_rank(std::vector<std::vector<FieldElement>> rows, Field field);

/// dim_k (R/I)_n for a homogeneous ideal, from the rank of the products
/// monomial * generator that land in degree n.
long graded_dim_bruteforce(const IdealBasis& ideal, int n);

inline constexpr int kDegreeCap = 40;
inline constexpr int kLocalCap = 30;

/// Degree of R/I for an ideal with finitely many zeros in P^2: the value of the
/// Hilbert function once it is constant on `window` consecutive degrees,
/// searched from 2 * (max generator degree) + 2. Throws NotStabilized past
/// kDegreeCap.
long degree_bruteforce(const IdealBasis& ideal, int window = 3);

/// dim_k k[u,v]/(J + m^D) for D = 1, 2, ... until two consecutive values
/// agree, m = <u, v>. Throws NotStabilized past `cap`.
long local_dim_bruteforce(const IdealBasis& ideal, int cap = kLocalCap);

/// sum v_i * gens_i == 0 by term-by-term expansion.
bool syzygy_verify(const ModuleVector& v, std::span<const Polynomial> gens);

}  // namespace bourbaki::oracle
