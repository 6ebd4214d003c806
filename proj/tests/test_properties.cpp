#include <doctest.h>

#include <algorithm>
#include <map>

#include "bourbaki/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

FieldElement random_element(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  if (f.is_rational()) return q(f, num(rng), den(rng));
  return FieldElement::from_int(f, std::uniform_int_distribution<long>(0, f.characteristic() - 1)(rng));
}

// Random expression text together with the polynomial it denotes.
struct Expr {
  std::string text;
  Polynomial value;
};

Expr random_expr(std::mt19937_64& rng, const Ring& ring, int depth);

Expr random_factor(std::mt19937_64& rng, const Ring& ring, int depth) {
  const Field k = ring.field();
  const int kind = std::uniform_int_distribution<int>(0, depth > 0 ? 2 : 1)(rng);
  if (kind == 0) {
    const long n = std::uniform_int_distribution<long>(0, 12)(rng);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      const long d = std::uniform_int_distribution<long>(1, 7)(rng);
      return {std::to_string(n) + "/" + std::to_string(d), Polynomial::constant(ring, q(k, n, d))};
    }
    return {std::to_string(n), Polynomial::constant(ring, n)};
  }
  const int power = std::uniform_int_distribution<int>(0, 3)(rng);
  if (kind == 1) {
    const int var = std::uniform_int_distribution<int>(0, ring.nvars() - 1)(rng);
    const Polynomial x = Polynomial::variable(ring, var);
    std::string text(1, ring.name(var));
    if (power == 1) return {text, x};
    return {text + "^" + std::to_string(power), x.pow(power)};
  }
  const Expr inner = random_expr(rng, ring, depth - 1);
  const int p = std::min(power, 2);
  return {"(" + inner.text + ")^" + std::to_string(p), inner.value.pow(p)};
}

Expr random_term(std::mt19937_64& rng, const Ring& ring, int depth) {
  Expr out = random_factor(rng, ring, depth);
  const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < extra; ++i) {
    const Expr f = random_factor(rng, ring, depth);
    out = {out.text + " * " + f.text, out.value * f.value};
  }
  return out;
}

Expr random_expr(std::mt19937_64& rng, const Ring& ring, int depth) {
  Expr out = random_term(rng, ring, depth);
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) out = {"-" + out.text, -out.value};
  const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < extra; ++i) {
    const Expr t = random_term(rng, ring, depth);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      out = {out.text + " + " + t.text, out.value + t.value};
    } else {
      out = {out.text + " - " + t.text, out.value - t.value};
    }
  }
  return out;
}

// Random ideal of `count` homogeneous forms of the given degrees.
IdealBasis random_homogeneous_ideal(std::mt19937_64& rng, const Ring& ring, std::vector<int> degrees) {
  std::vector<Polynomial> gens;
  for (int d : degrees) gens.push_back(random_polynomial(rng, ring, d, 4, true));
  return IdealBasis(ring, std::move(gens));
}

// v in <gens> in degree D decided by linear algebra on (position, monomial) coordinates.
bool oracle_module_contains(const std::vector<ModuleVector>& gens, const ModuleVector& v) {
  const Ring& ring = v.ring();
  const int D = v.degree();
  std::vector<ModuleVector> spanning;
  for (const auto& g : gens) {
    const int shift = D - g.degree();
    if (shift < 0) continue;
    for (int a = 0; a <= shift; ++a) {
      for (int b = 0; a + b <= shift; ++b) {
        const Polynomial m = Polynomial::term(ring, Monomial{a, b, shift - a - b}, FieldElement::one(ring.field()));
        spanning.push_back(m * g);
      }
    }
  }
  std::map<std::pair<int, std::string>, std::size_t> index;
  auto coords = [&](const ModuleVector& w) {
    std::map<std::size_t, FieldElement> out;
    for (int i = 0; i < w.rank(); ++i) {
      for (const auto& t : w[i].terms()) {
        const auto key = std::make_pair(i, t.monomial.to_string(ring.names(), ring.nvars()));
        const auto [it, inserted] = index.try_emplace(key, index.size());
        out[it->second] = t.coeff;
      }
    }
    return out;
  };
  std::vector<std::map<std::size_t, FieldElement>> sparse;
  for (const auto& s : spanning) sparse.push_back(coords(s));
  const auto target = coords(v);
  auto dense = [&](const std::vector<std::map<std::size_t, FieldElement>>& rows) {
    std::vector<std::vector<FieldElement>> out;
    for (const auto& r : rows) {
      std::vector<FieldElement> row(index.size(), FieldElement::zero(ring.field()));
      for (const auto& [i, c] : r) row[i] = c;
      out.push_back(std::move(row));
    }
    return out;
  };
  const std::size_t base = oracle::exact_rank(dense(sparse), ring.field());
  sparse.push_back(target);
  return oracle::exact_rank(dense(sparse), ring.field()) == base;
}

std::vector<std::pair<std::string, std::optional<std::string>>> golden_curves() {
  return {{kNodal, std::nullopt},
          {kQuartic, std::string(kQuarticEpsilon)},
          {nearly_free(2, 3), std::nullopt},
          {nearly_free(3, 4), std::nullopt},
          {free_curve(2), std::nullopt},
          {two_point(2), two_point_epsilon(2)}};
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("field axioms") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::prime(32003), Field::prime(7)}) {
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
      REQUIRE((a + b) == (b + a));
      REQUIRE((a * b) == (b * a));
      REQUIRE(((a + b) + c) == (a + (b + c)));
      REQUIRE(((a * b) * c) == (a * (b * c)));
      REQUIRE((a * (b + c)) == (a * b + a * c));
      REQUIRE((a - a).is_zero());
      REQUIRE((a + FieldElement::zero(f)) == a);
      REQUIRE((a * FieldElement::one(f)) == a);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("parser round trip") {
  std::mt19937_64 rng(5);
  for (Ring ring : {qq(), fp()}) {
    for (int i = 0; i < 250; ++i) {
      const Expr e = random_expr(rng, ring, 2);
      CAPTURE(e.text);
      const Polynomial parsed = P(e.text, ring);
      REQUIRE(parsed == e.value);
      REQUIRE(P(parsed.to_string(), ring) == parsed);
    }
  }
}

TEST_CASE("homogenize and translate round trips") {
  std::mt19937_64 rng(17);
  const Ring xy(Field::rationals(), "xy");
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int d = std::uniform_int_distribution<int>(1, 6)(rng);
    const Polynomial g = random_polynomial(rng, qq(), d, 6, true);
    if (g.is_zero() || g.degree_in(2) == g.degree()) continue;
    // Strip z-content so dehomogenizing keeps the full degree.
    Polynomial h = g;
    while (auto quotient = divide_exact(h, P("z"))) h = *quotient;
    REQUIRE(homogenize(dehomogenize(h, 2), 2, h.degree()) == h);
    ++checked;

    const Polynomial f = random_polynomial(rng, xy, 6, 6);
    const std::vector<FieldElement> p{random_element(rng, xy.field()), random_element(rng, xy.field())};
    const std::vector<FieldElement> minus{-p[0], -p[1]};
    REQUIRE(translate(translate(f, p), minus) == f);
    const std::vector<FieldElement> origin{FieldElement::zero(xy.field()), FieldElement::zero(xy.field())};
    REQUIRE(evaluate(translate(f, p), origin) == evaluate(f, p));
  }
  CHECK(checked > 100);
}

TEST_CASE("euler identity") {
  std::mt19937_64 rng(23);
  for (Ring ring : {qq(), fp()}) {
    for (int i = 0; i < 100; ++i) {
      const int d = std::uniform_int_distribution<int>(1, 6)(rng);
      const Polynomial F = random_polynomial(rng, ring, d, 7, true);
      if (F.is_zero()) continue;
      const Polynomial lhs = P("x", ring) * differentiate(F, 0) + P("y", ring) * differentiate(F, 1) +
                             P("z", ring) * differentiate(F, 2);
      REQUIRE(lhs == F * q(ring.field(), d));
    }
  }
}

TEST_CASE("gcd cofactors") {
  std::mt19937_64 rng(29);
  for (Ring ring : {qq(), fp()}) {
    for (int i = 0; i < 60; ++i) {
      const Polynomial a = random_polynomial(rng, ring, 3, 4);
      const Polynomial b = random_polynomial(rng, ring, 3, 4);
      const Polynomial h = random_polynomial(rng, ring, 2, 3);
      if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
      const Polynomial f = a * h, g = b * h;
      const Polynomial d = gcd(f, g);
      CAPTURE(f.to_string());
      CAPTURE(g.to_string());
      REQUIRE(divide_exact(f, d).has_value());
      REQUIRE(divide_exact(g, d).has_value());
      REQUIRE(divide_exact(d, h).has_value());
      // The cofactors are coprime.
      REQUIRE(gcd(*divide_exact(f, d), *divide_exact(g, d)).is_constant());
    }
  }
}

TEST_CASE("normal form is idempotent and respects membership") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const IdealBasis I = random_homogeneous_ideal(rng, qq(), {2, 2, 3});
    if (I.is_zero()) continue;
    const GroebnerBasis gb = buchberger(I);
    REQUIRE(satisfies_buchberger_criterion(gb));
    const Polynomial f = random_polynomial(rng, qq(), 5, 6);
    const Polynomial r = gb.normal_form(f);
    REQUIRE(gb.normal_form(r) == r);
    REQUIRE(gb.contains(f - r));
    for (const auto& g : I.generators()) REQUIRE(gb.contains(g));
  }
}

TEST_CASE("minimal generators are independent of input order") {
  std::mt19937_64 rng(37);
  for (const char* text : {kNodal, kQuartic}) {
    const Curve c = curve(text);
    auto syz = syzygy_basis(c.partials());
    const auto reference = minimalize_generators(syz);
    std::vector<int> degrees;
    for (const auto& v : reference) degrees.push_back(plain_degree(v));
    for (int i = 0; i < 5; ++i) {
      std::shuffle(syz.begin(), syz.end(), rng);
      const auto mins = minimalize_generators(syz);
      std::vector<int> d;
      for (const auto& v : mins) d.push_back(plain_degree(v));
      CHECK(d == degrees);
      CHECK(submodules_equal(mins, reference));
    }
  }
}

TEST_CASE("saturation is stable") {
  std::mt19937_64 rng(41);
  const IdealBasis m = variables_ideal(qq());
  int checked = 0;
  for (int i = 0; i < 15; ++i) {
    const IdealBasis I = random_homogeneous_ideal(rng, qq(), {2, 3, 3});
    if (I.size() < 3) continue;
    const IdealBasis sat = saturation(I, m).ideal;
    const SaturationResult again = saturation(sat, m);
    CHECK(ideals_equal(again.ideal, sat));
    CHECK(again.exponent == 0);
    CHECK(ideal_subset(I, sat));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("<x f, y f> : m^inf = <f>") {
  std::mt19937_64 rng(43);
  const Ring xy(Field::rationals(), "xy");
  const IdealBasis m = variables_ideal(xy);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_polynomial(rng, xy, 3, 4);
    f = f - Polynomial::constant(xy, evaluate(f, std::vector<FieldElement>{q(xy.field(), 0), q(xy.field(), 0)})) +
        Polynomial::constant(xy, std::uniform_int_distribution<long>(1, 9)(rng));
    CAPTURE(f.to_string());
    const IdealBasis I(xy, {P("x", xy) * f, P("y", xy) * f});
    CHECK(ideals_equal(saturation(I, m).ideal, IdealBasis(xy, {f})));
  }
}

TEST_CASE("graded dimensions agree with the rank oracle") {
  std::mt19937_64 rng(47);
  for (Ring ring : {qq(), fp()}) {
    for (int i = 0; i < 8; ++i) {
      const IdealBasis I = random_homogeneous_ideal(rng, ring, {2, 2, 3});
      const GroebnerBasis gb = buchberger(I);
      for (int n = 0; n <= 8; ++n) {
        REQUIRE(standard_monomial_count(gb, n) == oracle::graded_dim_bruteforce(I, n));
      }
    }
  }
}

TEST_CASE("module membership agrees with linear algebra") {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (const char* text : {kNodal, kQuartic}) {
    const Curve c = curve(text);
    std::vector<ModuleVector> gens;
    for (const auto& g : minimalize_generators(syzygy_basis(c.partials()))) gens.push_back(unshifted(g));
    for (int i = 0; i < 6; ++i) {
      // Members: random combinations; non-members: perturbed combinations.
      const int D = std::uniform_int_distribution<int>(3, 6)(rng);
      ModuleVector v = ModuleVector::zero(c.ring(), {0, 0, 0});
      for (const auto& g : gens) {
        if (g.degree() > D) continue;
        v = v + random_polynomial(rng, c.ring(), D - g.degree(), 3, true) * g;
      }
      if (v.is_zero()) continue;
      CHECK(submodule_contains(gens, v));
      CHECK(oracle_module_contains(gens, v));
      const ModuleVector w = v + ModuleVector({Polynomial::term(c.ring(), Monomial{D, 0, 0}, q(c.field(), 1)),
                                               Polynomial(c.ring()), Polynomial(c.ring())});
      if (w.is_zero() || !w.is_homogeneous()) continue;
      CHECK(submodule_contains(gens, w) == oracle_module_contains(gens, w));
      ++checked;
    }
  }
  CHECK(checked > 6);
}

TEST_CASE("invariants do not depend on coordinates") {
  for (const auto& [text, eps] : golden_curves()) {
    CAPTURE(text);
    const Curve c = curve(text);
    AnalysisConfig config;
    if (eps) config.syzygy.epsilon = V(*eps);
    const CurveReport base = analyze(c, config);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const CoordinateChange change = random_coordinate_change(c.field(), seed);
      const CurveReport moved = analyze(validate_curve(change.apply(c.F)));
      CHECK(moved.bour_hilbert == base.bour_hilbert);
      CHECK(moved.tau.saturated_degree == base.tau.saturated_degree);
      CHECK(moved.classification == base.classification);
      CHECK(moved.consistent());
      // Local degrees travel with the points when everything is rational.
      if (base.residual == 0 && moved.residual == 0) {
        for (const auto& [p, b] : base.local_table) {
          CHECK(local_degree(change.apply(base.bourbaki.ideal), change.apply(p)) == b);
        }
      }
    }
  }
}

TEST_CASE("Bour does not depend on the choice of epsilon") {
  for (const std::string& text : {std::string(kNodal), std::string(kQuartic), two_point(2), nearly_free(2, 5)}) {
    CAPTURE(text);
    const Curve c = curve(text);
    const SyzygyAnalysis s = syzygy_analysis(c);
    std::optional<long> bour;
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      AnalysisConfig config;
      config.syzygy.epsilon_index = i;
      const CurveReport r = analyze(c, config);
      CHECK(r.consistent());
      if (!bour) bour = r.bour_hilbert;
      CHECK(r.bour_hilbert == *bour);
    }
    // Sums of candidates are minimal-degree syzygies too.
    if (s.candidates.size() > 1) {
      AnalysisConfig config;
      config.syzygy.epsilon = s.candidates[0] + s.candidates[1];
      CHECK(analyze(c, config).bour_hilbert == *bour);
    }
  }
}

TEST_CASE("rank is invariant under row shuffles") {
  std::mt19937_64 rng(59);
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    for (int i = 0; i < 30; ++i) {
      const int rows = std::uniform_int_distribution<int>(1, 8)(rng);
      const int cols = std::uniform_int_distribution<int>(1, 8)(rng);
      std::vector<std::vector<FieldElement>> m(rows);
      for (auto& row : m) {
        for (int j = 0; j < cols; ++j) {
          row.push_back(std::uniform_int_distribution<int>(0, 2)(rng) ? FieldElement::zero(f) : random_element(rng, f));
        }
      }
      // Add dependent rows.
      m.push_back(m.front());
      const std::size_t rank = oracle::exact_rank(m, f);
      CHECK(rank <= static_cast<std::size_t>(std::min(rows, cols)));
      std::shuffle(m.begin(), m.end(), rng);
      CHECK(oracle::exact_rank(m, f) == rank);
    }
  }
}

}  // TEST_SUITE
