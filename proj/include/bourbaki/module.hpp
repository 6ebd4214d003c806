#pragma once

#include <span>
#include <string>
#include <vector>

#include "bourbaki/polynomial.hpp"

namespace bourbaki {

/// Element of the graded free module R(-s_1) + ... + R(-s_m).
class ModuleVector {
 public:
  /// Shifts default to zero.
  explicit ModuleVector(std::vector<Polynomial> components, std::vector<int> shifts = {});

  static ModuleVector zero(const Ring& ring, std::vector<int> shifts);
  static ModuleVector unit(const Ring& ring, std::vector<int> shifts, int position);

  const Ring& ring() const noexcept { return components_.front().ring(); }
  int rank() const noexcept { return static_cast<int>(components_.size()); }
  const Polynomial& operator[](int i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const std::vector<int>& shifts() const noexcept { return shifts_; }

  bool is_zero() const noexcept;
  /// deg(component_i) + shift_i is the same for all nonzero components.
  bool is_homogeneous() const noexcept;
  /// Common value of deg(component_i) + shift_i; requires a nonzero homogeneous vector.
  int degree() const;

  ModuleVector with_shifts(std::vector<int> shifts) const;
  /// Components [from, to) as a vector of the smaller free module.
  ModuleVector slice(int from, int to) const;

  ModuleVector operator-() const;
  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator*(const Polynomial& f, const ModuleVector& v);
  friend ModuleVector operator*(const FieldElement& c, const ModuleVector& v);
  /// Componentwise equality (shifts are bookkeeping and not compared).
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// sum_i v_i * gens_i.
  Polynomial dot(std::span<const Polynomial> gens) const;
  /// sum_i v_i * gens_i for vectors of a common free module.
  ModuleVector combine(std::span<const ModuleVector> gens) const;

  /// "(x^2, 0, -y*z)".
  std::string to_string() const;

 private:
  std::vector<Polynomial> components_;
  std::vector<int> shifts_;
};

/// Monomial order on a free module: position over term, lower position index
/// dominating. Shifts weight the pair-selection degree of each position.
class ModuleOrder {
 public:
  explicit ModuleOrder(MonomialOrder term_order) : term_order_(std::move(term_order)) {}

  const MonomialOrder& term_order() const noexcept { return term_order_; }

  int compare(const Monomial& a, int pa, const Monomial& b, int pb) const noexcept {
    if (pa != pb) return pa < pb ? 1 : -1;
    return term_order_.compare(a, b);
  }

 private:
  MonomialOrder term_order_;
};

}  // namespace bourbaki
