#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace bourbaki {

/// Coefficient field: the rationals, or Z/p for a prime p < 2^31.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

 private:
  friend class FieldElement;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of a Field. Rationals are kept in lowest terms by GMP; residues live in [0, p).
class FieldElement {
 public:
  FieldElement() : v_(mpq_class(0)) {}

  static FieldElement zero(Field f) { return from_int(f, 0); }
  static FieldElement one(Field f) { return from_int(f, 1); }
  static FieldElement from_int(Field f, long value);
  static FieldElement from_integer(Field f, const mpz_class& value);
  static FieldElement from_rational(Field f, const mpq_class& value);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue in [0, p); only valid over F_p.
  std::uint32_t residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// "3", "-2/5"; residues print in [0, p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit FieldElement(Residue r) : v_(r) {}
  explicit FieldElement(mpq_class q) : v_(std::move(q)) {}

  std::variant<Residue, mpq_class> v_;
};

}  // namespace bourbaki
