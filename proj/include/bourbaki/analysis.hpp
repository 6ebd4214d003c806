#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bourbaki/groebner.hpp"

namespace bourbaki {

/// A reduced plane curve F = 0 of degree d + 1 in P^2.
struct Curve {
  Polynomial F;
  int d;

  const Ring& ring() const noexcept { return F.ring(); }
  Field field() const noexcept { return F.field(); }
  /// (F_x, F_y, F_z).
  std::vector<Polynomial> partials() const;
};

/// Checks homogeneity, the characteristic condition char k !| d+1, and
/// reducedness (gcd(F, F_x, F_y, F_z) constant).
Curve validate_curve(const Polynomial& F);

IdealBasis jacobian_ideal(const Curve& c);

// ---------------------------------------------------------- syzygies ------

struct SyzygyOptions {
  /// Use this vector as epsilon; it must be a nonzero syzygy of minimal degree.
  std::optional<ModuleVector> epsilon;
  /// Otherwise pick the candidate of this index among the minimal-degree
  /// generators (ascending module order); 0 is the smallest.
  std::size_t epsilon_index = 0;
};

struct SyzygyAnalysis {
  Curve curve;
  /// epsilon first, then the remaining generators ascending by degree.
  std::vector<ModuleVector> minimal_generators;
  std::vector<int> degrees;
  /// Minimal-degree generators available as epsilon, in tie-break order.
  std::vector<ModuleVector> candidates;
  std::size_t chosen = 0;
  int e = 0;

  const ModuleVector& epsilon() const { return minimal_generators.front(); }
  /// delta_2, ..., delta_k: the generators other than epsilon.
  std::vector<ModuleVector> quotient_generators() const;
};

SyzygyAnalysis syzygy_analysis(const Curve& c, const SyzygyOptions& options = {});

struct BourbakiIdealData {
  IdealBasis ideal;
  /// (phi(delta_2), ..., phi(delta_k)) before dropping zero entries.
  std::vector<Polynomial> kernel_vector;
  Polynomial gcd_divided;
  /// deg phi(delta_i) - deg delta_i; equals e - d.
  int degree_offset = 0;
  PresentationMatrix presentation;
};

BourbakiIdealData bourbaki_ideal(const SyzygyAnalysis& s);

// ------------------------------------------------------------ points ------

/// Point of P^2 scaled so that its last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(FieldElement x, FieldElement y, FieldElement z);

  const std::array<FieldElement, 3>& coordinates() const noexcept { return coords_; }
  const FieldElement& operator[](int i) const { return coords_[i]; }
  /// Index of the coordinate normalized to 1.
  int chart() const noexcept { return chart_; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  /// Deterministic order: by chart, then coordinates by their text.
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

  /// "(1:0:0)".
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> coords_;
  int chart_;
};

struct PointSet {
  std::vector<ProjectivePoint> points;
  /// Hilbert degree minus the local degrees at the points found; positive when
  /// part of V(I) is not defined over the base field.
  long residual_degree = 0;
};

/// Base-field points of V(I) for a homogeneous ideal with finite zero set in P^2.
PointSet projective_points(const IdealBasis& ideal);
/// As above, also returning the local degree at each point.
std::vector<std::pair<ProjectivePoint, long>> local_table(const IdealBasis& ideal, long* residual = nullptr);

/// Generators of I dehomogenized in P's chart and translated so that P sits
/// at the origin of k[u,v].
IdealBasis localize_at(const IdealBasis& ideal, const ProjectivePoint& p);

/// Length of the component of R/I at P: dehomogenize in P's chart, move P to
/// the origin, and compare dim k[u,v]/J with dim k[u,v]/(J : m^inf).
long local_degree(const IdealBasis& ideal, const ProjectivePoint& p);

/// x' = x, y' = y, z' = a x + b y + c z with c != 0.
struct CoordinateChange {
  FieldElement a, b, c;

  /// G with G(x, y, a x + b y + c z) = F(x, y, z), i.e. F in the new coordinates.
  Polynomial apply(const Polynomial& f) const;
  IdealBasis apply(const IdealBasis& ideal) const;
  ProjectivePoint apply(const ProjectivePoint& p) const;
};

/// Deterministic in the seed; a, b, c are small nonzero integers.
CoordinateChange random_coordinate_change(Field field, std::uint64_t seed);

// ---------------------------------------------------------- invariants ----

struct TjurinaData {
  long global = 0;
  std::vector<std::pair<ProjectivePoint, long>> table;
  /// Degree of the saturated Jacobian ideal.
  long saturated_degree = 0;
  bool complete = false;
};

TjurinaData tjurina(const Curve& c);

/// Tjurina number at P from the per-chart ideal <f, f_u, f_v> of the
/// dehomogenized curve (an independent recipe used as a cross-check).
long tjurina_chart(const Curve& c, const ProjectivePoint& p);

struct GlobalDegrees {
  long hilbert = 0;
  long formula = 0;
};

GlobalDegrees global_degrees(const Curve& c, const SyzygyAnalysis& s, const BourbakiIdealData& data, long tau);

enum class Classification { Free, NearlyFree, Other };
const char* to_string(Classification c);

/// Free iff Bour = 0 (and two minimal syzygies), nearly free iff Bour = 1 (and
/// a single point of local degree 1). Throws InconsistentClassification when
/// the cross-checks disagree with the degree.
Classification classify(long bour, std::size_t generator_count,
                        const std::vector<std::pair<ProjectivePoint, long>>& local);

/// Saito's criterion: theta1, theta2 are syzygies of the partials (else
/// NotASyzygy), deg theta1 + deg theta2 + 1 = deg F, and det(E; theta1; theta2)
/// is a nonzero scalar multiple of F, with E the Euler vector (x, y, z).
bool saito_check(const Curve& c, const ModuleVector& theta1, const ModuleVector& theta2);

// ------------------------------------------------------------- report -----

struct AnalysisConfig {
  std::uint64_t seed = 0;
  SyzygyOptions syzygy;
  bool timings = false;
};

struct CurveReport {
  Curve curve;
  int d = 0;
  int e = 0;
  std::vector<int> syzygy_degrees;
  std::vector<ModuleVector> syzygies;
  BourbakiIdealData bourbaki;
  TjurinaData tau{};
  long bour_hilbert = 0;
  long bour_formula = 0;
  long bour_local_sum = 0;
  long residual = 0;
  std::vector<std::pair<ProjectivePoint, long>> local_table{};
  bool points_complete = false;
  std::size_t ell = 0;
  /// Empty when the cross-checks disagreed.
  std::optional<Classification> classification{};
  /// Consistency checks in evaluation order; checks that do not apply are absent.
  std::vector<std::pair<std::string, bool>> flags{};
  std::vector<std::pair<std::string, double>> timings_ms{};

  bool consistent() const;
};

CurveReport analyze(const Curve& c, const AnalysisConfig& config = {});

}  // namespace bourbaki
