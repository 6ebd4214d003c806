#include <algorithm>

#include "bourbaki/analysis.hpp"
#include "bourbaki/error.hpp"

namespace bourbaki {

namespace {

Polynomial var(const Ring& r, int i) { return Polynomial::variable(r, i); }

// Vector of the same components with all shifts zero, so that the degree is
// the common degree of the components.
ModuleVector unshifted(const ModuleVector& v) { return v.with_shifts(std::vector<int>(v.rank(), 0)); }

bool is_syzygy(const ModuleVector& v, const std::vector<Polynomial>& gens) { return v.dot(gens).is_zero(); }

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::vector<Polynomial> Curve::partials() const {
  return {differentiate(F, 0), differentiate(F, 1), differentiate(F, 2)};
}

Curve validate_curve(const Polynomial& F) {
  if (F.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "a plane curve lives in k[x,y,z]");
  if (F.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial defines no curve");
  if (!F.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, F.to_string() + " is not homogeneous");
  if (F.degree() < 1) throw Error(ErrorKind::InvalidArgument, "a curve has positive degree");
  const std::uint32_t p = F.field().characteristic();
  if (p != 0 && F.degree() % p == 0) {
    throw Error(ErrorKind::BadCharacteristic,
                "characteristic " + std::to_string(p) + " divides the degree " + std::to_string(F.degree()));
  }
  Curve c{F, F.degree() - 1};
  std::vector<Polynomial> all = c.partials();
  all.insert(all.begin(), F);
  const Polynomial g = gcd(all);
  if (!g.is_constant()) throw Error(ErrorKind::NotReduced, "repeated factor " + g.to_string());
  return c;
}

IdealBasis jacobian_ideal(const Curve& c) { return IdealBasis(c.ring(), c.partials()); }

std::vector<ModuleVector> SyzygyAnalysis::quotient_generators() const {
  return std::vector<ModuleVector>(minimal_generators.begin() + 1, minimal_generators.end());
}

SyzygyAnalysis syzygy_analysis(const Curve& c, const SyzygyOptions& options) {
  const std::vector<Polynomial> partials = c.partials();
  std::vector<ModuleVector> raw;
  for (const auto& v : syzygy_basis(partials)) raw.push_back(unshifted(v));
  const std::vector<ModuleVector> minimal = minimalize_generators(raw);
  if (minimal.empty()) throw Error(ErrorKind::NoSyzygyQuotient, "the partials have no syzygies");

  SyzygyAnalysis s{c, {}, {}, {}, 0, minimal.front().degree()};
  for (const auto& v : minimal) {
    if (v.degree() == s.e) s.candidates.push_back(v);
  }
  ModuleVector eps = minimal.front();
  if (options.epsilon) {
    eps = unshifted(*options.epsilon);
    if (eps.rank() != 3 || eps.is_zero() || !eps.is_homogeneous() || !is_syzygy(eps, partials)) {
      throw Error(ErrorKind::NotASyzygy, eps.to_string() + " is not a homogeneous syzygy of the partials");
    }
    // In the lowest degree every nonzero syzygy is a minimal generator.
    if (eps.degree() != s.e) {
      throw Error(ErrorKind::InvalidArgument, "epsilon must have the minimal degree " + std::to_string(s.e));
    }
    s.chosen = s.candidates.size();
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      if (s.candidates[i] == eps) s.chosen = i;
    }
  } else {
    if (options.epsilon_index >= s.candidates.size()) {
      throw Error(ErrorKind::InvalidArgument, "epsilon index " + std::to_string(options.epsilon_index) + " out of range (" +
                                                  std::to_string(s.candidates.size()) + " candidates)");
    }
    s.chosen = options.epsilon_index;
    eps = s.candidates[s.chosen];
  }
  // Extend epsilon to a minimal generating set by graded Nakayama; `minimal`
  // is ascending by degree.
  s.minimal_generators = {eps};
  for (const auto& v : minimal) {
    if (!submodule_contains(s.minimal_generators, v)) s.minimal_generators.push_back(v);
  }
  for (const auto& v : s.minimal_generators) s.degrees.push_back(v.degree());
  if (s.minimal_generators.size() != minimal.size()) {
    throw Error(ErrorKind::InvalidArgument, "internal: minimal generating sets of different sizes");
  }
  return s;
}

BourbakiIdealData bourbaki_ideal(const SyzygyAnalysis& s) {
  const std::vector<ModuleVector> deltas = s.quotient_generators();
  if (deltas.empty()) throw Error(ErrorKind::NoSyzygyQuotient, "the syzygy module has a single generator");
  const Ring& ring = s.curve.ring();
  const std::vector<ModuleVector> eps{s.epsilon()};
  BourbakiIdealData data{IdealBasis(ring, {}), {}, Polynomial(ring), 0, presentation(deltas, eps)};
  const std::vector<ModuleVector> kernel = kernel_of_presentation(ring, data.presentation);
  if (kernel.empty()) throw Error(ErrorKind::NoSyzygyQuotient, "the presentation has no kernel");
  // kernel_of_presentation returns minimal generators ascending by degree.
  const ModuleVector& v = kernel.front();
  data.kernel_vector = v.components();
  data.gcd_divided = gcd(data.kernel_vector);
  std::vector<Polynomial> gens;
  for (auto& p : data.kernel_vector) {
    p = *divide_exact(p, data.gcd_divided);
    gens.push_back(p);
  }
  data.degree_offset = v.degree() - data.gcd_divided.degree();
  data.ideal = IdealBasis(ring, std::move(gens));
  return data;
}

GlobalDegrees global_degrees(const Curve& c, const SyzygyAnalysis& s, const BourbakiIdealData& data, long tau) {
  GlobalDegrees g;
  g.hilbert = hilbert_degree(data.ideal);
  g.formula = static_cast<long>(c.d) * c.d + static_cast<long>(s.e) * (s.e - c.d) - tau;
  return g;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Free:
      return "Free";
    case Classification::NearlyFree:
      return "NearlyFree";
    case Classification::Other:
      return "Other";
  }
  return "?";
}

Classification classify(long bour, std::size_t generator_count,
                        const std::vector<std::pair<ProjectivePoint, long>>& local) {
  const bool two_generators = generator_count == 2;
  if (bour == 0) {
    if (!two_generators) {
      throw Error(ErrorKind::InconsistentClassification,
                  "Bour = 0 but the syzygy module has " + std::to_string(generator_count) + " generators");
    }
    return Classification::Free;
  }
  if (two_generators) {
    throw Error(ErrorKind::InconsistentClassification, "free syzygy module but Bour = " + std::to_string(bour));
  }
  if (bour == 1) {
    if (local.size() != 1 || local.front().second != 1) {
      throw Error(ErrorKind::InconsistentClassification, "Bour = 1 without a single point of local degree 1");
    }
    return Classification::NearlyFree;
  }
  return Classification::Other;
}

bool saito_check(const Curve& c, const ModuleVector& theta1, const ModuleVector& theta2) {
  const std::vector<Polynomial> partials = c.partials();
  for (const ModuleVector* t : {&theta1, &theta2}) {
    if (t->rank() != 3 || !is_syzygy(*t, partials)) {
      throw Error(ErrorKind::NotASyzygy, t->to_string() + " is not a syzygy of the partials");
    }
  }
  if (theta1.is_zero() || theta2.is_zero()) return false;
  const ModuleVector a = unshifted(theta1), b = unshifted(theta2);
  if (!a.is_homogeneous() || !b.is_homogeneous()) return false;
  if (a.degree() + b.degree() + 1 != c.F.degree()) return false;
  const Ring& r = c.ring();
  const Polynomial det = det3({{{var(r, 0), var(r, 1), var(r, 2)}, {a[0], a[1], a[2]}, {b[0], b[1], b[2]}}});
  if (det.is_zero()) return false;
  const auto q = divide_exact(det, c.F);
  return q && q->is_constant();
}

}  // namespace bourbaki
