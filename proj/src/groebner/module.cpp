#include "bourbaki/module.hpp"

#include "bourbaki/error.hpp"

namespace bourbaki {

namespace {

void require_same_module(const ModuleVector& a, const ModuleVector& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::ArityMismatch, "vectors of different rank");
  require_same_ring(a[0], b[0]);
}

}  // namespace

ModuleVector::ModuleVector(std::vector<Polynomial> components, std::vector<int> shifts)
    : components_(std::move(components)), shifts_(std::move(shifts)) {
  if (components_.empty()) throw Error(ErrorKind::ArityMismatch, "a module vector needs at least one component");
  if (shifts_.empty()) shifts_.assign(components_.size(), 0);
  if (shifts_.size() != components_.size()) throw Error(ErrorKind::ArityMismatch, "one shift per component required");
  for (const auto& c : components_) require_same_ring(c, components_.front());
}

ModuleVector ModuleVector::zero(const Ring& ring, std::vector<int> shifts) {
  std::vector<Polynomial> comps(shifts.size(), Polynomial(ring));
  return ModuleVector(std::move(comps), std::move(shifts));
}

ModuleVector ModuleVector::unit(const Ring& ring, std::vector<int> shifts, int position) {
  if (position < 0 || position >= static_cast<int>(shifts.size())) {
    throw Error(ErrorKind::ArityMismatch, "unit vector position out of range");
  }
  std::vector<Polynomial> comps(shifts.size(), Polynomial(ring));
  comps[position] = Polynomial::constant(ring, 1);
  return ModuleVector(std::move(comps), std::move(shifts));
}

bool ModuleVector::is_zero() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool ModuleVector::is_homogeneous() const noexcept {
  bool seen = false;
  int degree = 0;
  for (int i = 0; i < rank(); ++i) {
    const Polynomial& c = components_[i];
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    const int d = c.degree() + shifts_[i];
    if (seen && d != degree) return false;
    seen = true;
    degree = d;
  }
  return true;
}

int ModuleVector::degree() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero vector has no degree");
  if (!is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "vector is not homogeneous: " + to_string());
  for (int i = 0; i < rank(); ++i) {
    if (!components_[i].is_zero()) return components_[i].degree() + shifts_[i];
  }
  return 0;
}

ModuleVector ModuleVector::with_shifts(std::vector<int> shifts) const { return ModuleVector(components_, std::move(shifts)); }

ModuleVector ModuleVector::slice(int from, int to) const {
  if (from < 0 || to > rank() || from >= to) throw Error(ErrorKind::ArityMismatch, "slice out of range");
  return ModuleVector(std::vector<Polynomial>(components_.begin() + from, components_.begin() + to),
                      std::vector<int>(shifts_.begin() + from, shifts_.begin() + to));
}

ModuleVector ModuleVector::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(-c);
  return ModuleVector(std::move(comps), shifts_);
}

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  require_same_module(a, b);
  std::vector<Polynomial> comps;
  for (int i = 0; i < a.rank(); ++i) comps.push_back(a[i] + b[i]);
  return ModuleVector(std::move(comps), a.shifts_);
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
  require_same_module(a, b);
  std::vector<Polynomial> comps;
  for (int i = 0; i < a.rank(); ++i) comps.push_back(a[i] - b[i]);
  return ModuleVector(std::move(comps), a.shifts_);
}

ModuleVector operator*(const Polynomial& f, const ModuleVector& v) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < v.rank(); ++i) comps.push_back(f * v[i]);
  return ModuleVector(std::move(comps), v.shifts_);
}

ModuleVector operator*(const FieldElement& c, const ModuleVector& v) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < v.rank(); ++i) comps.push_back(v[i] * c);
  return ModuleVector(std::move(comps), v.shifts_);
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

Polynomial ModuleVector::dot(std::span<const Polynomial> gens) const {
  if (static_cast<int>(gens.size()) != rank()) throw Error(ErrorKind::ArityMismatch, "one generator per component required");
  Polynomial sum(ring());
  for (int i = 0; i < rank(); ++i) {
    if (!components_[i].is_zero()) sum = sum + components_[i] * gens[i];
  }
  return sum;
}

ModuleVector ModuleVector::combine(std::span<const ModuleVector> gens) const {
  if (static_cast<int>(gens.size()) != rank() || gens.empty()) {
    throw Error(ErrorKind::ArityMismatch, "one generator per component required");
  }
  ModuleVector sum = zero(ring(), gens.front().shifts());
  for (int i = 0; i < rank(); ++i) {
    if (!components_[i].is_zero()) sum = sum + components_[i] * gens[i];
  }
  return sum;
}

std::string ModuleVector::to_string() const {
  std::string out = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

}  // namespace bourbaki
