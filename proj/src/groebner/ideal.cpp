#include <algorithm>
#include <string_view>

#include "bourbaki/error.hpp"
#include "bourbaki/groebner.hpp"
#include "engine.hpp"

namespace bourbaki {

namespace {

detail::Engine ideal_engine(const Ring& ring, const MonomialOrder& order) {
  return detail::Engine(ring, ModuleOrder(order), {0});
}

// A single-letter name unused by `ring`, for an auxiliary variable.
char fresh_name(const Ring& ring) {
  for (char c : std::string_view("tuvwabcdefghijklmnopqrs")) {
    if (ring.index_of(c) < 0) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "no free variable name");
}

Polynomial rering(const Polynomial& f, const Ring& target) { return Polynomial(target, f.terms()); }

}  // namespace

IdealBasis::IdealBasis(Ring ring, std::vector<Polynomial> generators) : ring_(ring) {
  for (auto& g : generators) {
    if (g.nvars() != ring_.nvars()) throw Error(ErrorKind::ArityMismatch, "generator outside the ideal's ring");
    if (!(g.field() == ring_.field())) throw Error(ErrorKind::FieldMismatch, "generator over a different field");
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    generators_.push_back(std::move(g));
  }
}

IdealBasis::IdealBasis(std::vector<Polynomial> generators)
    : IdealBasis(generators.empty() ? throw Error(ErrorKind::InvalidArgument, "cannot infer the ring of an empty ideal")
                                    : generators.front().ring(),
                 std::move(generators)) {}

std::string IdealBasis::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ">";
}

IdealBasis variables_ideal(const Ring& ring) {
  std::vector<Polynomial> gens;
  for (int v = 0; v < ring.nvars(); ++v) gens.push_back(Polynomial::variable(ring, v));
  return IdealBasis(ring, std::move(gens));
}

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(ring), order_(std::move(order)), elements_(std::move(elements)) {
  auto cache = std::make_shared<detail::BasisCache>(detail::BasisCache{ideal_engine(ring_, order_), {}});
  for (const auto& e : elements_) cache->vecs.push_back(cache->engine.from_polynomial(e));
  cache_ = std::move(cache);
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Monomial GroebnerBasis::leading_monomial(const Polynomial& f) const {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no leading monomial");
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    if (order_.compare(t.monomial, *best) > 0) best = &t.monomial;
  }
  return *best;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(cache_->vecs.size());
  for (const auto& v : cache_->vecs) out.push_back(v.front().monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != ring_.nvars()) throw Error(ErrorKind::ArityMismatch, "polynomial outside the basis ring");
  const auto& e = cache_->engine;
  return rering(e.to_polynomial(e.reduce(e.from_polynomial(f), cache_->vecs)), f.ring());
}

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order) {
  if (order.nvars() != ideal.ring().nvars()) throw Error(ErrorKind::ArityMismatch, "order and ring differ in arity");
  const detail::Engine engine = ideal_engine(ideal.ring(), order);
  std::vector<detail::Vec> input;
  input.reserve(ideal.size());
  for (const auto& g : ideal.generators()) input.push_back(engine.from_polynomial(g));
  std::vector<Polynomial> elements;
  for (const auto& v : engine.groebner(std::move(input))) elements.push_back(engine.to_polynomial(v));
  return GroebnerBasis(ideal.ring(), order, std::move(elements));
}

GroebnerBasis buchberger(const IdealBasis& ideal) {
  return buchberger(ideal, MonomialOrder::grevlex(ideal.ring().nvars()));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& els = gb.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    const Monomial li = gb.leading_monomial(els[i]);
    const FieldElement ci = els[i].coefficient(li);
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial lj = gb.leading_monomial(els[j]);
      const FieldElement cj = els[j].coefficient(lj);
      const Monomial l = lcm(li, lj);
      const Polynomial s = els[i].mul_term(l / li, ci.inverse()) - els[j].mul_term(l / lj, cj.inverse());
      if (!gb.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_contains(const IdealBasis& ideal, const Polynomial& f) { return buchberger(ideal).contains(f); }

bool ideal_subset(const IdealBasis& a, const IdealBasis& b) {
  const GroebnerBasis gb = buchberger(b);
  for (const auto& g : a.generators()) {
    if (!gb.contains(g)) return false;
  }
  return true;
}

bool ideals_equal(const IdealBasis& a, const IdealBasis& b) { return ideal_subset(a, b) && ideal_subset(b, a); }

IdealBasis elimination_ideal(const IdealBasis& ideal, const std::vector<int>& keep) {
  const int n = ideal.ring().nvars();
  std::vector<bool> kept(n, false);
  for (int v : keep) {
    if (v < 0 || v >= n) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
    kept[v] = true;
  }
  std::vector<int> precedence;
  for (int v = 0; v < n; ++v) {
    if (!kept[v]) precedence.push_back(v);
  }
  const int block = static_cast<int>(precedence.size());
  for (int v = 0; v < n; ++v) {
    if (kept[v]) precedence.push_back(v);
  }
  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(n, block).with_precedence(precedence));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool pure = true;
    for (int v = 0; v < n; ++v) pure = pure && (kept[v] || !g.involves(v));
    if (pure) out.push_back(g);
  }
  return IdealBasis(ideal.ring(), std::move(out));
}

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b) {
  const Ring& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return IdealBasis(ring, {});
  const int n = ring.nvars();
  const Ring big = ring.with_variable(n, fresh_name(ring));
  const Polynomial t = Polynomial::variable(big, n);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * rering(g, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * rering(g, big));
  std::vector<int> keep(n);
  for (int v = 0; v < n; ++v) keep[v] = v;
  const IdealBasis elim = elimination_ideal(IdealBasis(big, std::move(gens)), keep);
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(rering(g, ring));
  return IdealBasis(ring, std::move(out));
}

IdealBasis ideal_quotient(const IdealBasis& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "quotient by the zero polynomial");
  if (f.is_constant()) return ideal;
  const IdealBasis meet = intersect(ideal, IdealBasis(ideal.ring(), {f}));
  std::vector<Polynomial> out;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error(ErrorKind::InvalidArgument, "internal: intersection element not divisible by " + f.to_string());
    out.push_back(*q);
  }
  return IdealBasis(ideal.ring(), std::move(out));
}

IdealBasis ideal_quotient(const IdealBasis& ideal, const IdealBasis& by) {
  if (by.is_zero()) throw Error(ErrorKind::DivisionByZero, "quotient by the zero ideal");
  std::optional<IdealBasis> acc;
  for (const auto& f : by.generators()) {
    IdealBasis q = ideal_quotient(ideal, f);
    acc = acc ? intersect(*acc, q) : q;
  }
  // Reduced form keeps the generator lists small.
  return buchberger(*acc).ideal();
}

SaturationResult saturation(const IdealBasis& ideal, const IdealBasis& by, int cap) {
  if (by.is_zero()) throw Error(ErrorKind::DivisionByZero, "saturation by the zero ideal");
  GroebnerBasis current = buchberger(ideal);
  for (int s = 0; s < cap; ++s) {
    GroebnerBasis next = buchberger(ideal_quotient(current.ideal(), by));
    if (next.elements() == current.elements()) return SaturationResult{current.ideal(), s};
    current = std::move(next);
  }
  throw Error(ErrorKind::SaturationCap, "saturation did not stabilize within " + std::to_string(cap) + " quotients");
}

QuotientDimension vector_space_dimension(const IdealBasis& ideal) {
  const GroebnerBasis gb = buchberger(ideal);
  if (gb.is_unit()) return QuotientDimension{0, {}};
  const std::vector<Monomial> leads = gb.leading_monomials();
  const int n = ideal.ring().nvars();
  std::vector<int> bound(n, -1);
  for (const auto& m : leads) {
    for (int v = 0; v < n; ++v) {
      if (m.degree() == m.exponent(v)) {
        bound[v] = bound[v] < 0 ? m.exponent(v) : std::min(bound[v], m.exponent(v));
      }
    }
  }
  for (int b : bound) {
    if (b < 0) return QuotientDimension{std::nullopt, {}};
  }
  std::vector<Monomial> standard;
  std::vector<int> e(n, 0);
  while (true) {
    const Monomial m(e);
    bool divisible = false;
    for (const auto& l : leads) {
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) standard.push_back(m);
    int v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  std::sort(standard.begin(), standard.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  return QuotientDimension{static_cast<long>(standard.size()), std::move(standard)};
}

}  // namespace bourbaki
