// Module Groebner bases and syzygies.
//
// Syzygies of g_1..g_m in R^r come from one Groebner basis of the augmented
// vectors (g_i, e_i) in R^(r+m) under position over term: basis elements
// whose leading position lies in the e-block have vanishing g-part, and their
// e-parts generate the syzygy module.

#include <algorithm>

#include "bourbaki/error.hpp"
#include "bourbaki/groebner.hpp"
#include "engine.hpp"

namespace bourbaki {

namespace {

detail::Engine module_engine(const Ring& ring, std::vector<int> shifts) {
  return detail::Engine(ring, ModuleOrder(MonomialOrder::grevlex(ring.nvars())), std::move(shifts));
}

void require_rank(const ModuleVector& v, int rank) {
  if (v.rank() != rank) throw Error(ErrorKind::ArityMismatch, "vectors of different rank");
}

// Degree of a homogeneous vector, 0 for zero or inhomogeneous ones.
int weight(const ModuleVector& v) { return !v.is_zero() && v.is_homogeneous() ? v.degree() : 0; }

ModuleVector from_terms(const Ring& ring, const detail::Vec& v, int from, std::vector<int> shifts) {
  const int rank = static_cast<int>(shifts.size());
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) {
    if (t.position >= from && t.position < from + rank) comps[t.position - from].push_back(Term{t.monomial, t.coeff});
  }
  std::vector<Polynomial> polys;
  for (auto& c : comps) polys.emplace_back(ring, std::move(c));
  return ModuleVector(std::move(polys), std::move(shifts));
}

std::vector<ModuleVector> syzygies_with_shifts(const Ring& ring, std::span<const ModuleVector> gens,
                                               std::vector<int> gen_shifts) {
  if (gens.empty()) return {};
  const int r = gens.front().rank();
  const int m = static_cast<int>(gens.size());
  std::vector<int> shifts = gens.front().shifts();
  shifts.insert(shifts.end(), gen_shifts.begin(), gen_shifts.end());
  const detail::Engine engine = module_engine(ring, shifts);
  const FieldElement one = FieldElement::one(ring.field());

  std::vector<detail::Vec> input;
  for (int i = 0; i < m; ++i) {
    require_rank(gens[i], r);
    detail::Vec v = engine.from_vector(gens[i]);
    v.push_back(detail::VTerm{Monomial(), r + i, one});
    input.push_back(engine.canonical(std::move(v)));
  }
  std::vector<ModuleVector> out;
  for (const auto& g : engine.groebner(std::move(input))) {
    if (g.front().position >= r) out.push_back(from_terms(ring, g, r, gen_shifts));
  }
  return out;
}

}  // namespace

ModuleGroebnerBasis::ModuleGroebnerBasis(Ring ring, std::vector<int> shifts, std::vector<ModuleVector> elements)
    : ring_(ring), shifts_(std::move(shifts)), elements_(std::move(elements)) {
  auto cache = std::make_shared<detail::BasisCache>(detail::BasisCache{module_engine(ring_, shifts_), {}});
  for (const auto& e : elements_) {
    require_rank(e, rank());
    cache->vecs.push_back(cache->engine.from_vector(e));
  }
  cache_ = std::move(cache);
}

ModuleVector ModuleGroebnerBasis::normal_form(const ModuleVector& v) const {
  require_rank(v, rank());
  const auto& e = cache_->engine;
  return from_terms(ring_, e.reduce(e.from_vector(v), cache_->vecs), 0, v.shifts());
}

ModuleGroebnerBasis module_buchberger(const Ring& ring, std::vector<int> shifts, std::span<const ModuleVector> vectors) {
  const int rank = static_cast<int>(shifts.size());
  const detail::Engine engine = module_engine(ring, shifts);
  std::vector<detail::Vec> input;
  for (const auto& v : vectors) {
    require_rank(v, rank);
    input.push_back(engine.from_vector(v));
  }
  std::vector<ModuleVector> elements;
  for (const auto& g : engine.groebner(std::move(input))) elements.push_back(from_terms(ring, g, 0, shifts));
  return ModuleGroebnerBasis(ring, std::move(shifts), std::move(elements));
}

ModuleGroebnerBasis module_buchberger(std::span<const ModuleVector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::InvalidArgument, "cannot infer the free module of an empty vector list");
  return module_buchberger(vectors.front().ring(), vectors.front().shifts(), vectors);
}

bool submodule_contains(std::span<const ModuleVector> gens, const ModuleVector& v) {
  if (v.is_zero()) return true;
  if (gens.empty()) return false;
  return module_buchberger(v.ring(), v.shifts(), gens).contains(v);
}

bool submodules_equal(std::span<const ModuleVector> a, std::span<const ModuleVector> b) {
  auto subset = [](std::span<const ModuleVector> x, std::span<const ModuleVector> y) {
    if (x.empty()) return true;
    if (y.empty()) {
      return std::all_of(x.begin(), x.end(), [](const ModuleVector& v) { return v.is_zero(); });
    }
    const ModuleGroebnerBasis gb = module_buchberger(y.front().ring(), y.front().shifts(), y);
    return std::all_of(x.begin(), x.end(), [&](const ModuleVector& v) { return gb.contains(v); });
  };
  return subset(a, b) && subset(b, a);
}

std::vector<ModuleVector> syzygy_basis(std::span<const ModuleVector> gens) {
  if (gens.empty()) return {};
  std::vector<int> shifts;
  for (const auto& g : gens) shifts.push_back(weight(g));
  return syzygies_with_shifts(gens.front().ring(), gens, std::move(shifts));
}

std::vector<ModuleVector> syzygy_basis(std::span<const Polynomial> gens) {
  std::vector<ModuleVector> vectors;
  for (const auto& g : gens) vectors.emplace_back(std::vector<Polynomial>{g});
  return syzygy_basis(vectors);
}

std::vector<ModuleVector> minimalize_generators(std::span<const ModuleVector> gens) {
  std::vector<ModuleVector> sorted;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "minimalization needs homogeneous vectors");
    sorted.push_back(g);
  }
  if (sorted.empty()) return {};
  const detail::Engine engine = module_engine(sorted.front().ring(), sorted.front().shifts());
  std::vector<detail::Vec> vecs;
  for (const auto& v : sorted) vecs.push_back(engine.from_vector(v));
  std::vector<std::size_t> index(sorted.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  std::stable_sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
    const int da = sorted[a].degree(), db = sorted[b].degree();
    if (da != db) return da < db;
    return engine.compare(vecs[a].front(), vecs[b].front()) < 0;
  });

  std::vector<ModuleVector> kept;
  std::vector<detail::Vec> kept_vecs;
  for (std::size_t i : index) {
    if (!kept_vecs.empty()) {
      // Groebner basis of the kept generators, all of degree <= this one.
      const std::vector<detail::Vec> gb = engine.groebner(kept_vecs);
      if (engine.reduce(vecs[i], gb).empty()) continue;
    }
    kept.push_back(sorted[i]);
    kept_vecs.push_back(vecs[i]);
  }
  return kept;
}

PresentationMatrix presentation(std::span<const ModuleVector> gens, std::span<const ModuleVector> modulo) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "presentation of an empty generator list");
  PresentationMatrix c;
  c.columns = static_cast<int>(gens.size());
  for (const auto& g : gens) c.column_degrees.push_back(weight(g));
  std::vector<ModuleVector> all(gens.begin(), gens.end());
  all.insert(all.end(), modulo.begin(), modulo.end());
  bool homogeneous = true;
  for (const auto& syz : syzygy_basis(all)) {
    ModuleVector row = syz.slice(0, c.columns);
    if (row.is_zero()) continue;
    homogeneous = homogeneous && row.is_homogeneous();
    c.rows.push_back(std::move(row));
  }
  if (homogeneous) c.rows = minimalize_generators(c.rows);
  return c;
}

std::vector<ModuleVector> kernel_of_presentation(const Ring& ring, const PresentationMatrix& c) {
  std::vector<int> shifts;
  for (int d : c.column_degrees) shifts.push_back(-d);
  std::vector<ModuleVector> out;
  if (c.rows.empty()) {
    for (int i = 0; i < c.columns; ++i) out.push_back(ModuleVector::unit(ring, shifts, i));
    return out;
  }
  // Column i of C lives in sum_j R(deg row_j), so its degree is -deg g_i.
  std::vector<int> row_shifts;
  for (const auto& r : c.rows) row_shifts.push_back(-weight(r));
  std::vector<ModuleVector> columns;
  for (int i = 0; i < c.columns; ++i) {
    std::vector<Polynomial> comps;
    for (const auto& r : c.rows) {
      require_rank(r, c.columns);
      comps.push_back(r[i]);
    }
    columns.emplace_back(std::move(comps), row_shifts);
  }
  out = syzygies_with_shifts(ring, columns, shifts);
  bool homogeneous = std::all_of(out.begin(), out.end(), [](const ModuleVector& v) { return v.is_homogeneous(); });
  return homogeneous ? minimalize_generators(out) : out;
}

}  // namespace bourbaki
