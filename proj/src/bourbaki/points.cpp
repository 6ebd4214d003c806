#include <algorithm>
#include <random>

#include "bourbaki/analysis.hpp"
#include "bourbaki/error.hpp"
#include "bourbaki/roots.hpp"

namespace bourbaki {

namespace {

int compare_elements(const FieldElement& a, const FieldElement& b) {
  if (a.field().is_rational()) return cmp(a.rational(), b.rational());
  return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
}

std::vector<Polynomial> dehomogenized(const IdealBasis& ideal, int var) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(dehomogenize(g, var));
  return out;
}

// dim of the m-primary component of k[u,v]/J, m the origin.
long origin_length(const IdealBasis& j) {
  const QuotientDimension full = vector_space_dimension(j);
  if (!full.dimension) {
    throw Error(ErrorKind::InfiniteLocalDimension, "the affine ideal " + j.to_string() + " is not zero-dimensional");
  }
  if (*full.dimension == 0) return 0;
  const SaturationResult away = saturation(j, variables_ideal(j.ring()));
  return *full.dimension - *vector_space_dimension(away.ideal).dimension;
}

bool vanishes_at(const IdealBasis& ideal, const ProjectivePoint& p) {
  const std::vector<FieldElement> pt(p.coordinates().begin(), p.coordinates().end());
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return evaluate(g, pt).is_zero(); });
}

Polynomial univariate_gcd(const std::vector<Polynomial>& polys, const Ring& ring) {
  if (polys.empty()) return Polynomial(ring);
  return gcd(polys);
}

}  // namespace

ProjectivePoint::ProjectivePoint(FieldElement x, FieldElement y, FieldElement z) : coords_{x, y, z}, chart_(-1) {
  for (int i = 2; i >= 0; --i) {
    if (!coords_[i].is_zero()) {
      chart_ = i;
      break;
    }
  }
  if (chart_ < 0) throw Error(ErrorKind::InvalidArgument, "(0:0:0) is not a projective point");
  const FieldElement inv = coords_[chart_].inverse();
  for (auto& c : coords_) c *= inv;
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.chart_ != b.chart_) return a.chart_ > b.chart_;
  for (int i = 0; i < 3; ++i) {
    if (int c = compare_elements(a.coords_[i], b.coords_[i]); c != 0) return c < 0;
  }
  return false;
}

std::string ProjectivePoint::to_string() const {
  return "(" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + ")";
}

PointSet projective_points(const IdealBasis& ideal) {
  PointSet out;
  auto table = local_table(ideal, &out.residual_degree);
  for (auto& [p, deg] : table) out.points.push_back(p);
  return out;
}

std::vector<std::pair<ProjectivePoint, long>> local_table(const IdealBasis& ideal, long* residual) {
  if (ideal.ring().nvars() != 3) throw Error(ErrorKind::ArityMismatch, "points of P^2 need k[x,y,z]");
  if (ideal.is_zero()) throw Error(ErrorKind::NotZeroDimensional, "the zero ideal vanishes everywhere");
  const long total = hilbert_degree(ideal);
  const Field k = ideal.ring().field();
  const FieldElement zero = FieldElement::zero(k), one = FieldElement::one(k);
  std::vector<ProjectivePoint> points;

  // Chart z = 1: lex basis with x > y, roots of the eliminant in y, then x.
  const IdealBasis affine(ideal.ring().without_variable(2), dehomogenized(ideal, 2));
  const GroebnerBasis lex = buchberger(affine, MonomialOrder::lex(2));
  if (!lex.is_unit() && !affine.is_zero()) {
    std::vector<Polynomial> eliminant;
    for (const auto& g : lex.elements()) {
      if (!g.involves(0)) eliminant.push_back(g);
    }
    if (eliminant.empty()) throw Error(ErrorKind::NotZeroDimensional, "V(I) meets z != 0 in a curve");
    for (const auto& b : roots_in_base_field(univariate_gcd(eliminant, affine.ring()))) {
      std::vector<Polynomial> fibre;
      const std::vector<Polynomial> images{Polynomial::variable(affine.ring(), 0), Polynomial::constant(affine.ring(), b)};
      for (const auto& g : lex.elements()) fibre.push_back(substitute(g, images));
      const Polynomial h = univariate_gcd(fibre, affine.ring());
      if (h.is_zero()) throw Error(ErrorKind::NotZeroDimensional, "V(I) contains a line y = const");
      for (const auto& a : roots_in_base_field(h)) points.emplace_back(a, b, one);
    }
  }
  // Chart z = 0, y = 1.
  {
    const Ring& r = ideal.ring();
    const std::vector<Polynomial> images{Polynomial::variable(r, 0), Polynomial::constant(r, 1), Polynomial(r)};
    std::vector<Polynomial> line;
    for (const auto& g : ideal.generators()) line.push_back(substitute(g, images));
    const Polynomial h = univariate_gcd(line, r);
    if (h.is_zero()) throw Error(ErrorKind::NotZeroDimensional, "V(I) contains the line z = 0");
    for (const auto& a : roots_in_base_field(h)) points.emplace_back(a, one, zero);
  }
  // The point (1:0:0).
  if (ProjectivePoint p(one, zero, zero); vanishes_at(ideal, p)) points.push_back(p);

  std::sort(points.begin(), points.end());
  std::vector<std::pair<ProjectivePoint, long>> table;
  long found = 0;
  for (const auto& p : points) {
    const long deg = local_degree(ideal, p);
    found += deg;
    table.emplace_back(p, deg);
  }
  if (residual) *residual = total - found;
  return table;
}

IdealBasis localize_at(const IdealBasis& ideal, const ProjectivePoint& p) {
  const int chart = p.chart();
  std::vector<FieldElement> shift;
  for (int i = 0; i < 3; ++i) {
    if (i != chart) shift.push_back(p[i]);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : dehomogenized(ideal, chart)) gens.push_back(translate(g, shift));
  return IdealBasis(ideal.ring().without_variable(chart), std::move(gens));
}

long local_degree(const IdealBasis& ideal, const ProjectivePoint& p) {
  if (ideal.ring().nvars() != 3) throw Error(ErrorKind::ArityMismatch, "points of P^2 need k[x,y,z]");
  if (!vanishes_at(ideal, p)) return 0;
  return origin_length(localize_at(ideal, p));
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
  const Ring& r = f.ring();
  const Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
  const FieldElement inv = c.inverse();
  const std::vector<Polynomial> images{x, y, (z - x * a - y * b) * inv};
  return substitute(f, images);
}

IdealBasis CoordinateChange::apply(const IdealBasis& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply(g));
  return IdealBasis(ideal.ring(), std::move(gens));
}

ProjectivePoint CoordinateChange::apply(const ProjectivePoint& p) const {
  return ProjectivePoint(p[0], p[1], a * p[0] + b * p[1] + c * p[2]);
}

CoordinateChange random_coordinate_change(Field field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 9);
  while (true) {
    const long a = dist(rng), b = dist(rng), c = dist(rng);
    CoordinateChange change{FieldElement::from_int(field, a), FieldElement::from_int(field, b),
                            FieldElement::from_int(field, c)};
    if (!change.c.is_zero()) return change;
  }
}

TjurinaData tjurina(const Curve& c) {
  const IdealBasis j = jacobian_ideal(c);
  TjurinaData t;
  t.saturated_degree = hilbert_degree(saturation(j, variables_ideal(c.ring())).ideal);
  if (t.saturated_degree == 0) {
    // Smooth curve: J_F is primary to the irrelevant ideal.
    t.complete = true;
    return t;
  }
  t.table = local_table(j);
  for (const auto& [p, tau] : t.table) t.global += tau;
  t.complete = t.global == t.saturated_degree;
  return t;
}

long tjurina_chart(const Curve& c, const ProjectivePoint& p) {
  const int chart = p.chart();
  const Polynomial f = dehomogenize(c.F, chart);
  std::vector<FieldElement> shift;
  for (int i = 0; i < 3; ++i) {
    if (i != chart) shift.push_back(p[i]);
  }
  std::vector<Polynomial> gens{f, differentiate(f, 0), differentiate(f, 1)};
  for (auto& g : gens) g = translate(g, shift);
  if (!evaluate(gens[0], std::vector<FieldElement>(2, FieldElement::zero(c.field()))).is_zero()) return 0;
  return origin_length(IdealBasis(f.ring(), std::move(gens)));
}

}  // namespace bourbaki
