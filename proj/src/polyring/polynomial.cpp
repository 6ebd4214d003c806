#include "bourbaki/polynomial.hpp"

#include <algorithm>

#include "bourbaki/error.hpp"

namespace bourbaki {

Ring::Ring(Field field, std::string_view names) : field_(field), nvars_(static_cast<int>(names.size())) {
  if (nvars_ < 1 || nvars_ > kMaxVars) throw Error(ErrorKind::ArityMismatch, "rings carry 1 to 4 variables");
  std::copy(names.begin(), names.end(), names_.begin());
}

int Ring::index_of(char name) const noexcept {
  for (int i = 0; i < nvars_; ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

Ring Ring::without_variable(int var) const {
  std::string names(names_.data(), nvars_);
  names.erase(var, 1);
  return Ring(field_, names);
}

Ring Ring::with_variable(int position, char name) const {
  std::string names(names_.data(), nvars_);
  names.insert(names.begin() + position, name);
  return Ring(field_, names);
}

int canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

namespace {

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = canonical_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElement s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::ArityMismatch, "polynomials live in rings of different arity");
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "polynomials live over different fields");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(ring), terms_(canonicalize(std::move(terms))) {
  for (const auto& t : terms_) {
    if (!(t.coeff.field() == ring_.field())) throw Error(ErrorKind::FieldMismatch, "coefficient outside the ring's field");
    for (int v = ring_.nvars(); v < kMaxVars; ++v) {
      if (t.monomial.exponent(v) != 0) throw Error(ErrorKind::ArityMismatch, "monomial uses a variable outside the ring");
    }
  }
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c) {
  return Polynomial(ring, {Term{Monomial(), c}});
}

Polynomial Polynomial::constant(Ring ring, long c) {
  return constant(ring, FieldElement::from_int(ring.field(), c));
}

Polynomial Polynomial::variable(Ring ring, int var) {
  if (var < 0 || var >= ring.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  return Polynomial(ring, {Term{Monomial::variable(var), FieldElement::one(ring.field())}});
}

Polynomial Polynomial::term(Ring ring, const Monomial& m, const FieldElement& c) {
  return Polynomial(ring, {Term{m, c}});
}

int Polynomial::degree_in(int var) const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return FieldElement::zero(field());
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return *this * terms_.front().coeff.inverse();
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial, -t.coeff});
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_ = merge(a.terms_, b.terms_, false);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_ = merge(a.terms_, b.terms_, true);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  }
  Polynomial out(a.ring_);
  out.terms_ = canonicalize(std::move(products));
  return out;
}

Polynomial operator*(const Polynomial& a, const FieldElement& c) {
  Polynomial out(a.ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) out.terms_.push_back(Term{t.monomial, t.coeff * c});
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& t : terms_) out.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars() || !(a.field() == b.field()) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const bool rational = field().is_rational();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = t.coeff.to_string();
    bool negative = rational && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.monomial.to_string(ring_.names(), nvars());
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const int e = t.monomial.exponent(var);
    if (e == 0) continue;
    terms.push_back(Term{t.monomial.with_exponent(var, e - 1), t.coeff * FieldElement::from_int(f.field(), e)});
  }
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  if (f.nvars() < 2) throw Error(ErrorKind::ArityMismatch, "cannot dehomogenize a univariate ring");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<int> e;
    for (int i = 0; i < f.nvars(); ++i) {
      if (i != var) e.push_back(t.monomial.exponent(i));
    }
    terms.push_back(Term{Monomial(e), t.coeff});
  }
  return Polynomial(f.ring().without_variable(var), std::move(terms));
}

Polynomial homogenize(const Polynomial& f, int var, int target_degree, char name) {
  if (var < 0 || var > f.nvars()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  if (target_degree < f.degree()) {
    throw Error(ErrorKind::InvalidArgument, "target degree " + std::to_string(target_degree) +
                                                " is below the polynomial degree " + std::to_string(f.degree()));
  }
  Ring target = f.ring().with_variable(var, name);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<int> e;
    for (int i = 0; i < f.nvars(); ++i) e.push_back(t.monomial.exponent(i));
    e.insert(e.begin() + var, target_degree - t.monomial.degree());
    terms.push_back(Term{Monomial(e), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial homogenize(const Polynomial& f, int var, int target_degree) {
  char name = 'z';
  for (char c : std::string_view("xyz")) {
    if (f.ring().index_of(c) < 0) {
      name = c;
      break;
    }
  }
  return homogenize(f, var, target_degree, name);
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw Error(ErrorKind::ArityMismatch, "one image per variable required");
  if (images.empty()) throw Error(ErrorKind::ArityMismatch, "no images");
  const Ring target = images.front().ring();
  // Powers are cached per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial::constant(target, 1));
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = t.monomial.exponent(static_cast<int>(i));
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) term = term * powers[i][e];
    }
    result = result + term;
  }
  return result;
}

Polynomial translate(const Polynomial& f, std::span<const FieldElement> point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw Error(ErrorKind::ArityMismatch, "point has the wrong length");
  std::vector<Polynomial> images;
  for (int i = 0; i < f.nvars(); ++i) {
    images.push_back(Polynomial::variable(f.ring(), i) + Polynomial::constant(f.ring(), point[i]));
  }
  return substitute(f, images);
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  if (static_cast<int>(point.size()) != f.nvars()) {
    throw Error(ErrorKind::ArityMismatch, "point of length " + std::to_string(point.size()) + " for a ring with " +
                                               std::to_string(f.nvars()) + " variables");
  }
  FieldElement sum = FieldElement::zero(f.field());
  for (const auto& t : f.terms()) {
    FieldElement prod = t.coeff;
    for (int i = 0; i < f.nvars(); ++i) {
      for (int k = 0; k < t.monomial.exponent(i); ++k) prod *= point[i];
    }
    sum += prod;
  }
  return sum;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const Term& lead = g.leading_term();
  const FieldElement inv = lead.coeff.inverse();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term q{t.monomial / lead.monomial, t.coeff * inv};
    rest = rest - g.mul_term(q.monomial, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial(f.ring(), std::move(quotient));
}

Polynomial primitive_integral(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.field().is_rational()) return f.monic();
  mpz_class den = 1, num = 0;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coeff.rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(f.leading_term().coeff.rational()) < 0) scale = -scale;
  return f * FieldElement::from_rational(f.field(), scale);
}

}  // namespace bourbaki
