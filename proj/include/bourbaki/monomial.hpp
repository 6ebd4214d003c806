#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bourbaki {

/// Public rings have 2 or 3 variables; one extra slot hosts the auxiliary
/// variable used by intersections and quotients.
inline constexpr int kMaxVars = 4;

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(int index, int power = 1);

  int exponent(int var) const noexcept { return exp_[var]; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  Monomial with_exponent(int var, int value) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp_ == b.exp_; }

  /// "1", "x^2*y" with the given variable names.
  std::string to_string(const char* names, int nvars) const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

/// Term order on monomials. Variables are ranked by `precedence()` (first is largest).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder lex(int nvars);
  /// Block order: the first `block` variables of the precedence list are
  /// eliminated (compared by degree then grevlex), ties broken by grevlex on the rest.
  static MonomialOrder elimination(int nvars, int block);

  MonomialOrder with_precedence(std::vector<int> precedence) const;

  Kind kind() const noexcept { return kind_; }
  int nvars() const noexcept { return nvars_; }
  int block() const noexcept { return block_; }
  const std::vector<int>& precedence() const noexcept { return precedence_; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) = default;

 private:
  MonomialOrder(Kind kind, int nvars, int block);
  int grevlex_range(const Monomial& a, const Monomial& b, int from, int to) const noexcept;

  Kind kind_;
  int nvars_;
  int block_;
  std::vector<int> precedence_;
};

}  // namespace bourbaki
