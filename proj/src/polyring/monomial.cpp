#include "bourbaki/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "bourbaki/error.hpp"

namespace bourbaki {

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > kMaxVars) throw Error(ErrorKind::ArityMismatch, "too many exponents");
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) throw Error(ErrorKind::InvalidArgument, "exponent out of range");
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
    total += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.exp_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int total = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    total += m.exp_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(total);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  int total = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    total += m.exp_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(total);
  return m;
}

Monomial Monomial::with_exponent(int var, int value) const {
  Monomial m = *this;
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - m.exp_[var] + value);
  m.exp_[var] = static_cast<std::uint16_t>(value);
  return m;
}

std::string Monomial::to_string(const char* names, int nvars) const {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialOrder::MonomialOrder(Kind kind, int nvars, int block)
    : kind_(kind), nvars_(nvars), block_(block), precedence_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw Error(ErrorKind::ArityMismatch, "unsupported number of variables");
  std::iota(precedence_.begin(), precedence_.end(), 0);
}

MonomialOrder MonomialOrder::grevlex(int nvars) { return MonomialOrder(Kind::Grevlex, nvars, 0); }
MonomialOrder MonomialOrder::lex(int nvars) { return MonomialOrder(Kind::Lex, nvars, 0); }

MonomialOrder MonomialOrder::elimination(int nvars, int block) {
  if (block < 0 || block > nvars) throw Error(ErrorKind::InvalidArgument, "elimination block out of range");
  return MonomialOrder(Kind::Elimination, nvars, block);
}

MonomialOrder MonomialOrder::with_precedence(std::vector<int> precedence) const {
  std::vector<int> sorted = precedence;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(nvars_);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) throw Error(ErrorKind::InvalidArgument, "precedence is not a permutation");
  MonomialOrder o = *this;
  o.precedence_ = std::move(precedence);
  return o;
}

// Graded reverse lexicographic comparison on precedence_[from, to).
int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, int from, int to) const noexcept {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a.exponent(precedence_[i]);
    db += b.exponent(precedence_[i]);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = to - 1; i >= from; --i) {
    const int ea = a.exponent(precedence_[i]);
    const int eb = b.exponent(precedence_[i]);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, nvars_);
    case Kind::Lex:
      for (int i = 0; i < nvars_; ++i) {
        const int ea = a.exponent(precedence_[i]);
        const int eb = b.exponent(precedence_[i]);
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case Kind::Elimination:
      if (int c = grevlex_range(a, b, 0, block_); c != 0) return c;
      return grevlex_range(a, b, block_, nvars_);
  }
  return 0;
}

}  // namespace bourbaki
