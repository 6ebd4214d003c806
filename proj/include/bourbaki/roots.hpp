#pragma once

#include <vector>

#include "bourbaki/polynomial.hpp"

namespace bourbaki {

/// Distinct roots lying in the coefficient field of a polynomial that involves
/// at most one variable, sorted ascending (by value over Q, by residue over F_p).
/// The zero polynomial is rejected.
std::vector<FieldElement> roots_in_base_field(const Polynomial& f);

/// Prime factorisation of |n| (n != 0) with multiplicity, ascending.
std::vector<mpz_class> factor_integer(const mpz_class& n);

}  // namespace bourbaki
