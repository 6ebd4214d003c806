#include "engine.hpp"

#include <algorithm>

#include "bourbaki/error.hpp"

namespace bourbaki::detail {

Engine::Engine(Ring ring, ModuleOrder order, std::vector<int> shifts)
    : ring_(ring), order_(std::move(order)), shifts_(std::move(shifts)) {
  if (shifts_.empty()) shifts_.push_back(0);
}

Vec Engine::canonical(Vec v) const {
  std::sort(v.begin(), v.end(), [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().position == t.position && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Vec Engine::monic(Vec v) const {
  if (v.empty() || v.front().coeff.is_one()) return v;
  const FieldElement inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
  return v;
}

Vec Engine::from_polynomial(const Polynomial& f) const {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(VTerm{t.monomial, 0, t.coeff});
  return canonical(std::move(v));
}

Vec Engine::from_vector(const ModuleVector& mv) const {
  Vec v;
  for (int i = 0; i < mv.rank(); ++i) {
    for (const auto& t : mv[i].terms()) v.push_back(VTerm{t.monomial, i, t.coeff});
  }
  return canonical(std::move(v));
}

Polynomial Engine::to_polynomial(const Vec& v) const {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.monomial, t.coeff});
  return Polynomial(ring_, std::move(terms));
}

ModuleVector Engine::to_vector(const Vec& v, int rank) const {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps[t.position].push_back(Term{t.monomial, t.coeff});
  std::vector<Polynomial> polys;
  polys.reserve(rank);
  for (auto& c : comps) polys.emplace_back(ring_, std::move(c));
  std::vector<int> shifts(shifts_.begin(), shifts_.begin() + std::min<std::size_t>(rank, shifts_.size()));
  shifts.resize(rank, 0);
  return ModuleVector(std::move(polys), std::move(shifts));
}

Vec Engine::sub_mul(const Vec& f, std::size_t from, const Monomial& m, const FieldElement& c, const Vec& g) const {
  Vec out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    VTerm scaled{g[j].monomial * m, g[j].position, FieldElement()};
    int cmp = i == f.size() ? -1 : compare(f[i], scaled);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      scaled.coeff = -(g[j].coeff * c);
      out.push_back(std::move(scaled));
      ++j;
    } else {
      FieldElement s = f[i].coeff - g[j].coeff * c;
      if (!s.is_zero()) {
        scaled.coeff = std::move(s);
        out.push_back(std::move(scaled));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

Vec Engine::reduce(Vec f, const std::vector<Vec>& basis) const {
  std::vector<const Vec*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce(std::move(f), ptrs);
}

Vec Engine::reduce(Vec f, const std::vector<const Vec*>& basis) const {
  Vec rem;
  std::size_t at = 0;
  while (at < f.size()) {
    const VTerm& t = f[at];
    const Vec* reducer = nullptr;
    for (const Vec* g : basis) {
      if (!g->empty() && g->front().position == t.position && g->front().monomial.divides(t.monomial)) {
        reducer = g;
        break;
      }
    }
    if (reducer == nullptr) {
      rem.push_back(t);
      ++at;
      continue;
    }
    const VTerm& lead = reducer->front();
    const FieldElement c = t.coeff / lead.coeff;
    f = sub_mul(f, at + 1, t.monomial / lead.monomial, c, *reducer);
    at = 0;
  }
  return rem;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int position;
  int degree;
};

}  // namespace

std::vector<Vec> Engine::groebner(std::vector<Vec> input) const {
  const bool product_criterion = shifts_.size() == 1;
  std::vector<Vec> all;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_basis = [&]() {
    std::vector<const Vec*> b;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (active[k]) b.push_back(&all[k]);
    }
    return b;
  };

  // Gebauer-Moeller update with the new element h = all.back().
  auto update = [&]() {
    const std::size_t h = all.size() - 1;
    const VTerm& lh = all[h].front();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g] || all[g].front().position != lh.position) continue;
      const Monomial& lg = all[g].front().monomial;
      c.push_back({g, lcm(lh.monomial, lg), product_criterion && lh.monomial.coprime(lg)});
    }
    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m) {
          if (c[m].lcm.divides(c[k].lcm)) keep = false;
        }
        for (std::size_t m = 0; m < d.size() && keep; ++m) {
          if (d[m].lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + d.size());
    for (auto& p : pairs) {
      if (p.position == lh.position && lh.monomial.divides(p.lcm)) {
        const Monomial li = lcm(all[p.i].front().monomial, lh.monomial);
        const Monomial lj = lcm(all[p.j].front().monomial, lh.monomial);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (const auto& cand : d) {
      if (cand.coprime) continue;
      kept.push_back(Pair{cand.g, h, cand.lcm, lh.position, shifted_degree(cand.lcm, lh.position)});
    }
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && all[g].front().position == lh.position && lh.monomial.divides(all[g].front().monomial)) {
        active[g] = false;
      }
    }
    active.push_back(true);
  };

  auto insert = [&](Vec r) {
    all.push_back(monic(std::move(r)));
    update();
  };

  std::sort(input.begin(), input.end(), [this](const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    const int da = shifted_degree(a.front().monomial, a.front().position);
    const int db = shifted_degree(b.front().monomial, b.front().position);
    if (da != db) return da < db;
    return compare(a.front(), b.front()) < 0;
  });
  for (auto& f : input) {
    Vec r = reduce(canonical(std::move(f)), active_basis());
    if (!r.empty()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      const int c = order_.compare(a.lcm, a.position, b.lcm, b.position);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Vec& f = all[p.i];
    const Vec& g = all[p.j];
    // S = (lcm / lt f) f - (lcm / lt g) g, both monic.
    Vec s;
    s.reserve(f.size() + g.size());
    const Monomial mf = p.lcm / f.front().monomial;
    for (std::size_t k = 1; k < f.size(); ++k) s.push_back(VTerm{f[k].monomial * mf, f[k].position, f[k].coeff});
    // s stays sorted: multiplication by a monomial preserves the order.
    Vec full = sub_mul(s, 0, p.lcm / g.front().monomial, FieldElement::one(ring_.field()), g);
    Vec r = reduce(std::move(full), active_basis());
    if (!r.empty()) insert(std::move(r));
  }

  std::vector<Vec> basis;
  for (const Vec* v : active_basis()) basis.push_back(*v);
  std::sort(basis.begin(), basis.end(), [this](const Vec& a, const Vec& b) { return compare(a.front(), b.front()) < 0; });
  std::vector<Vec> reduced;
  reduced.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const Vec*> others;
    for (std::size_t m = 0; m < basis.size(); ++m) {
      if (m != k) others.push_back(&basis[m]);
    }
    reduced.push_back(monic(reduce(basis[k], others)));
  }
  return reduced;
}

}  // namespace bourbaki::detail
