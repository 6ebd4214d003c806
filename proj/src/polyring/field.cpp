#include "bourbaki/field.hpp"

#include "bourbaki/error.hpp"

namespace bourbaki {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::InfiniteLocalDimension: return "InfiniteLocalDimension";
    case ErrorKind::SaturationCap: return "SaturationCap";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotASyzygy: return "NotASyzygy";
    case ErrorKind::NoSyzygyQuotient: return "NoSyzygyQuotient";
    case ErrorKind::InconsistentClassification: return "InconsistentClassification";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t reduce_mod(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

[[noreturn]] void field_mismatch() {
  throw Error(ErrorKind::FieldMismatch, "operands live in different coefficient fields");
}

}  // namespace

FieldElement FieldElement::from_int(Field f, long value) {
  if (f.is_rational()) return FieldElement(mpq_class(value));
  return FieldElement(Residue{reduce_mod(value, f.characteristic()), f.characteristic()});
}

FieldElement FieldElement::from_integer(Field f, const mpz_class& value) {
  if (f.is_rational()) return FieldElement(mpq_class(value));
  return FieldElement(Residue{reduce_mod(value, f.characteristic()), f.characteristic()});
}

FieldElement FieldElement::from_rational(Field f, const mpq_class& value) {
  if (f.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  const std::uint32_t p = f.characteristic();
  const std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
  const std::uint64_t num = reduce_mod(value.get_num(), p);
  return FieldElement(Residue{static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p), p});
}

Field FieldElement::field() const noexcept {
  if (auto r = std::get_if<Residue>(&v_)) return Field(r->modulus);
  return Field::rationals();
}

bool FieldElement::is_zero() const noexcept {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational value requested from a prime-field element");
}

std::uint32_t FieldElement::residue() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value;
  throw Error(ErrorKind::FieldMismatch, "residue requested from a rational element");
}

FieldElement FieldElement::operator-() const {
  if (auto r = std::get_if<Residue>(&v_)) {
    return FieldElement(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(v_)));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (auto r = std::get_if<Residue>(&v_)) {
    return FieldElement(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return FieldElement(mpq_class(1 / std::get<mpq_class>(v_)));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  auto ra = std::get_if<FieldElement::Residue>(&a.v_);
  auto rb = std::get_if<FieldElement::Residue>(&b.v_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) field_mismatch();
    std::uint32_t s = ra->value + rb->value;
    if (s >= ra->modulus) s -= ra->modulus;
    return FieldElement(FieldElement::Residue{s, ra->modulus});
  }
  if (ra || rb) field_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  auto ra = std::get_if<FieldElement::Residue>(&a.v_);
  auto rb = std::get_if<FieldElement::Residue>(&b.v_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) field_mismatch();
    std::uint32_t s = ra->value >= rb->value ? ra->value - rb->value : ra->value + ra->modulus - rb->value;
    return FieldElement(FieldElement::Residue{s, ra->modulus});
  }
  if (ra || rb) field_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  auto ra = std::get_if<FieldElement::Residue>(&a.v_);
  auto rb = std::get_if<FieldElement::Residue>(&b.v_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) field_mismatch();
    auto prod = static_cast<std::uint64_t>(ra->value) * rb->value % ra->modulus;
    return FieldElement(FieldElement::Residue{static_cast<std::uint32_t>(prod), ra->modulus});
  }
  if (ra || rb) field_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  auto ra = std::get_if<FieldElement::Residue>(&a.v_);
  auto rb = std::get_if<FieldElement::Residue>(&b.v_);
  if (ra && rb) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra || rb) return false;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::string FieldElement::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace bourbaki
