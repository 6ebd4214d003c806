#pragma once

// Buchberger engine shared by the ideal and module front ends. Ideals are
// modules of rank one. Vectors are sparse term lists sorted descending under a
// position-over-term order.

#include <vector>

#include "bourbaki/module.hpp"
#include "bourbaki/polynomial.hpp"

namespace bourbaki::detail {

struct VTerm {
  Monomial monomial;
  int position;
  FieldElement coeff;
};

using Vec = std::vector<VTerm>;

class Engine {
 public:
  Engine(Ring ring, ModuleOrder order, std::vector<int> shifts);

  const Ring& ring() const noexcept { return ring_; }
  const ModuleOrder& order() const noexcept { return order_; }

  int compare(const VTerm& a, const VTerm& b) const noexcept {
    return order_.compare(a.monomial, a.position, b.monomial, b.position);
  }

  Vec from_polynomial(const Polynomial& f) const;
  Vec from_vector(const ModuleVector& v) const;
  Polynomial to_polynomial(const Vec& v) const;
  ModuleVector to_vector(const Vec& v, int rank) const;

  /// Sorts and merges duplicate terms.
  Vec canonical(Vec v) const;
  Vec monic(Vec v) const;

  /// Full reduction of f by `basis` (which need not be a Groebner basis).
  Vec reduce(Vec f, const std::vector<Vec>& basis) const;
  Vec reduce(Vec f, const std::vector<const Vec*>& basis) const;

  /// Reduced Groebner basis of the submodule generated by `input`, sorted
  /// ascending by leading term.
  std::vector<Vec> groebner(std::vector<Vec> input) const;

 private:
  // f[from..] - c * m * g[1..]
  Vec sub_mul(const Vec& f, std::size_t from, const Monomial& m, const FieldElement& c, const Vec& g) const;
  int shifted_degree(const Monomial& m, int position) const noexcept {
    return m.degree() + (position < static_cast<int>(shifts_.size()) ? shifts_[position] : 0);
  }

  Ring ring_;
  ModuleOrder order_;
  std::vector<int> shifts_;
};

/// Engine-side form of a basis, kept next to the public elements.
struct BasisCache {
  Engine engine;
  std::vector<Vec> vecs;
};

}  // namespace bourbaki::detail
