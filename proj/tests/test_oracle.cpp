#include <doctest.h>

#include "bourbaki/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("oracle") {

TEST_CASE("exact rank") {
  const Field Q = Field::rationals();
  auto row = [&](std::initializer_list<long> xs) {
    std::vector<FieldElement> out;
    for (long x : xs) out.push_back(q(Q, x));
    return out;
  };
  CHECK(oracle::exact_rank({row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})}, Q) == 2);
  CHECK(oracle::exact_rank({row({0, 0}), row({0, 0})}, Q) == 0);
  CHECK(oracle::exact_rank({}, Q) == 0);
  std::vector<FieldElement> half{q(Q, 1, 2), q(Q, 1, 3)}, third{q(Q, 3), q(Q, 2)};
  CHECK(oracle::exact_rank({half, third}, Q) == 1);
  const Field F = Field::prime(5);
  // Rank 2 over Q, rank 1 mod 5.
  std::vector<FieldElement> a{q(F, 1), q(F, 2)}, b{q(F, 3), q(F, 1)};
  CHECK(oracle::exact_rank({a, b}, F) == 1);
}

TEST_CASE("graded dimensions") {
  CHECK(oracle::graded_dim_bruteforce(ideal({"x", "y"}), 4) == 1);
  CHECK(oracle::graded_dim_bruteforce(ideal({"2*x*y - y*z", "z"}), 3) == 2);
  CHECK(oracle::graded_dim_bruteforce(IdealBasis(qq(), {}), 2) == 6);
  CHECK_THROWS_AS(oracle::graded_dim_bruteforce(ideal({"x + 1"}), 2), Error);
}

TEST_CASE("degree") {
  CHECK(oracle::degree_bruteforce(ideal({"2*z^2", "y*z", "2*x*z + 3*y^2"})) == 3);
  CHECK(oracle::degree_bruteforce(ideal({"x", "y"})) == 1);
  CHECK(oracle::degree_bruteforce(ideal({"x", "y", "z"})) == 0);
  try {
    oracle::degree_bruteforce(ideal({"x"}));
    FAIL("a line never stabilizes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStabilized);
  }
}

TEST_CASE("local dimension") {
  const Ring yz(Field::rationals(), "yz");
  CHECK(oracle::local_dim_bruteforce(ideal({"z^2", "y*z", "2*z + 3*y^2"}, yz)) == 3);
  CHECK(oracle::local_dim_bruteforce(ideal({"y", "z"}, yz)) == 1);
  CHECK(oracle::local_dim_bruteforce(ideal({"y - 1", "z"}, yz)) == 0);
  const Ring xy(Field::rationals(), "xy");
  try {
    oracle::local_dim_bruteforce(ideal({"x + y"}, xy));
    FAIL("a line through the origin has infinite local dimension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStabilized);
  }
}

TEST_CASE("syzygy verification") {
  const std::vector<Polynomial> xyz{P("x"), P("y"), P("z")};
  CHECK(oracle::syzygy_verify(V("(y, -x, 0)"), xyz));
  CHECK_FALSE(oracle::syzygy_verify(V("(1, 0, 0)"), xyz));
  // Syzygies against the alternative generators (yz, 3y^2 + 2xz, 3x^2 + 2xz) of J_F.
  const std::vector<Polynomial> nodal_gens{P("y*z"), P("3*y^2 + 2*x*z"), P("3*x^2 + 2*x*z")};
  CHECK(oracle::syzygy_verify(V("(3*y^2 + 2*x*z, -y*z, 0)"), nodal_gens));
  for (const auto& v : nodal_reference_syzygies()) {
    CHECK(oracle::syzygy_verify(v, nodal_gens));
    CHECK(oracle::syzygy_verify(nodal_to_partials(v), curve(kNodal).partials()));
  }
}

}  // TEST_SUITE
