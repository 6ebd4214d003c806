#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bourbaki/field.hpp"
#include "bourbaki/monomial.hpp"

namespace bourbaki {

/// Polynomial ring k[v_1, ..., v_n] with single-letter variable names.
class Ring {
 public:
  Ring(Field field, std::string_view names);
  /// The graded ring k[x, y, z].
  static Ring xyz(Field field) { return Ring(field, "xyz"); }

  Field field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  const char* names() const noexcept { return names_.data(); }
  char name(int var) const noexcept { return names_[var]; }
  /// Index of the variable called `name`, or -1.
  int index_of(char name) const noexcept;

  Ring without_variable(int var) const;
  Ring with_variable(int position, char name) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.names_ == b.names_;
  }

 private:
  Field field_;
  int nvars_;
  std::array<char, kMaxVars + 1> names_{};
};

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Sparse polynomial in canonical form: terms strictly descending in grevlex
/// (first variable largest), no zero coefficients. Immutable once built.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(ring) {}
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const FieldElement& c);
  static Polynomial constant(Ring ring, long c);
  static Polynomial variable(Ring ring, int var);
  static Polynomial term(Ring ring, const Monomial& m, const FieldElement& c);

  const Ring& ring() const noexcept { return ring_; }
  Field field() const noexcept { return ring_.field(); }
  int nvars() const noexcept { return ring_.nvars(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  int degree_in(int var) const noexcept;
  bool involves(int var) const noexcept { return degree_in(var) > 0; }
  bool is_homogeneous() const noexcept;

  /// Leading term under grevlex. Requires a nonzero polynomial.
  const Term& leading_term() const;
  FieldElement coefficient(const Monomial& m) const;
  Polynomial homogeneous_part(int degree) const;
  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& c);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a) { return a * c; }
  /// Multiplication by c * m.
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text, parseable back: "x^2 - 1/2*y*z + 3".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Canonical term comparison (grevlex over all slots); negative if a < b.
int canonical_compare(const Monomial& a, const Monomial& b) noexcept;

void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial differentiate(const Polynomial& f, int var);

/// Substitutes 1 for `var`; the result lives in the ring without that variable.
Polynomial dehomogenize(const Polynomial& f, int var);

/// Inverse of dehomogenize: inserts variable `var` (named `name`) so that every
/// term reaches `target_degree`.
Polynomial homogenize(const Polynomial& f, int var, int target_degree, char name);
/// As above, naming the new variable after the letter of "xyz" missing from f's ring.
Polynomial homogenize(const Polynomial& f, int var, int target_degree);

/// f(v_1 + p_1, ..., v_n + p_n).
Polynomial translate(const Polynomial& f, std::span<const FieldElement> point);

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);

/// Replaces variable i of f by images[i]; all images share the target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Quotient f / g when g divides f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial gcd(std::span<const Polynomial> polys);

/// Scales a rational polynomial to have coprime integer coefficients and a
/// positive leading coefficient; over F_p returns the monic associate.
Polynomial primitive_integral(const Polynomial& f);

}  // namespace bourbaki
