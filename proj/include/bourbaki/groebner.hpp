#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bourbaki/module.hpp"
#include "bourbaki/polynomial.hpp"

namespace bourbaki {

namespace detail {
struct BasisCache;
}

/// Generators of an ideal; zero generators are dropped on construction.
class IdealBasis {
 public:
  IdealBasis(Ring ring, std::vector<Polynomial> generators);
  explicit IdealBasis(std::vector<Polynomial> generators);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const noexcept { return homogeneous_; }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  bool homogeneous_ = true;
};

/// The ideal generated by all variables of `ring`.
IdealBasis variables_ideal(const Ring& ring);

/// Reduced Groebner basis: monic elements, ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements);

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return true; }
  bool is_unit() const noexcept;

  /// Leading monomial of an element under this basis's order.
  Monomial leading_monomial(const Polynomial& f) const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  IdealBasis ideal() const { return IdealBasis(ring_, elements_); }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::shared_ptr<const detail::BasisCache> cache_;
};

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order);
/// Grevlex with the first variable largest.
GroebnerBasis buchberger(const IdealBasis& ideal);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

bool ideal_contains(const IdealBasis& ideal, const Polynomial& f);
bool ideal_subset(const IdealBasis& a, const IdealBasis& b);
/// Two-sided membership.
bool ideals_equal(const IdealBasis& a, const IdealBasis& b);

/// I intersected with k[keep]; the result stays in I's ring.
IdealBasis elimination_ideal(const IdealBasis& ideal, const std::vector<int>& keep);
IdealBasis intersect(const IdealBasis& a, const IdealBasis& b);
IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& f);
IdealBasis ideal_quotient(const IdealBasis& ideal, const IdealBasis& by);

struct SaturationResult {
  IdealBasis ideal;
  /// Smallest s with (I : J^s) = (I : J^(s+1)).
  int exponent;
};

inline constexpr int kSaturationCap = 64;
SaturationResult saturation(const IdealBasis& ideal, const IdealBasis& by, int cap = kSaturationCap);

struct QuotientDimension {
  /// Empty when k[vars]/I is infinite-dimensional.
  std::optional<long> dimension;
  /// Standard monomials (only when finite), ascending.
  std::vector<Monomial> standard_monomials;
};

/// dim_k k[vars]/I for an arbitrary (affine) ideal.
QuotientDimension vector_space_dimension(const IdealBasis& ideal);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[v_1..v_n]/<monomials>;
/// coefficient of t^i at index i.
std::vector<long> hilbert_numerator(const std::vector<Monomial>& monomials, int nvars);

/// Constant value of the Hilbert polynomial of R/I for a homogeneous ideal in
/// three variables whose projective zero set is finite; 0 for m-primary or unit ideals.
long hilbert_degree(const IdealBasis& ideal);
long hilbert_degree(const GroebnerBasis& gb);

/// Number of standard monomials of degree n.
long standard_monomial_count(const GroebnerBasis& gb, int degree);

// ------------------------------------------------------------- modules -----

/// Reduced Groebner basis of a submodule of R(-s_1) + ... + R(-s_m) under
/// position over term (lower positions dominate) refined by grevlex.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(Ring ring, std::vector<int> shifts, std::vector<ModuleVector> elements);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return static_cast<int>(shifts_.size()); }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  const std::vector<ModuleVector>& elements() const noexcept { return elements_; }

  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }

 private:
  Ring ring_;
  std::vector<int> shifts_;
  std::vector<ModuleVector> elements_;
  std::shared_ptr<const detail::BasisCache> cache_;
};

/// All vectors must share ring and rank; shifts are taken from the first.
ModuleGroebnerBasis module_buchberger(std::span<const ModuleVector> vectors);
ModuleGroebnerBasis module_buchberger(const Ring& ring, std::vector<int> shifts, std::span<const ModuleVector> vectors);

bool submodule_contains(std::span<const ModuleVector> gens, const ModuleVector& v);
bool submodules_equal(std::span<const ModuleVector> a, std::span<const ModuleVector> b);

/// Generators of {a : sum a_i g_i = 0}. Position i carries shift deg g_i when
/// the generators are homogeneous.
std::vector<ModuleVector> syzygy_basis(std::span<const Polynomial> gens);
std::vector<ModuleVector> syzygy_basis(std::span<const ModuleVector> gens);

/// Minimal homogeneous generating set by graded Nakayama, ascending by degree,
/// then by leading position and term.
std::vector<ModuleVector> minimalize_generators(std::span<const ModuleVector> gens);

/// Relations among module generators g_1..g_k (optionally modulo extra vectors).
struct PresentationMatrix {
  int columns = 0;
  /// Degree of each presented generator.
  std::vector<int> column_degrees;
  /// Each row r satisfies sum_i r_i g_i in the span of the modulo vectors.
  std::vector<ModuleVector> rows;
};

PresentationMatrix presentation(std::span<const ModuleVector> gens, std::span<const ModuleVector> modulo = {});

/// Generators of {v : C v = 0}; vector position i carries shift -column_degrees[i].
std::vector<ModuleVector> kernel_of_presentation(const Ring& ring, const PresentationMatrix& c);

}  // namespace bourbaki
