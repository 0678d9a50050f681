#include "coxforge/intlattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace coxforge;

TEST_CASE("floor division and modular helpers") {
  CHECK(floor_div(-7, 3) == -3);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(7, 3) == 1);
  ExtendedGcd e = xgcd(240, 46);
  CHECK(e.g == 2);
  CHECK(e.x * 240 + e.y * 46 == 2);
  CHECK((inverse_mod(3, 7) * 3) % 7 == 1);
  CHECK(smallest_prime_factor(91) == 7);
  CHECK(prime_factors(360) == std::vector<Integer>{2, 3, 5});
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_integer("12x"), Error);
}

TEST_CASE("determinant and rank against cofactor expansion") {
  IntMatrix m = int_matrix({{2, -1, 0, 3}, {1, 4, -2, 0}, {0, 5, 1, -1}, {3, 0, 2, 2}});
  CHECK(determinant(m) == oracle::det_cofactor(m));
  IntMatrix s = int_matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(determinant(s) == 0);
  CHECK(rank(s) == 2);
  RatMatrix q(2, 2);
  q << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5);
  CHECK(determinant(q) == Rational(1, 10) - Rational(1, 12));
}

TEST_CASE("minor gcd of the non-standard rank-2 example") {
  IntMatrix a = int_matrix({{3, 3, 3, 0, -2}, {1, 1, 1, 2, 0}});
  CHECK(minor_gcd(a, 2) == 2);
  CHECK(minor_gcd(a, 2) == oracle::all_minors_gcd(a, 2));
  CHECK_FALSE(is_standard(a));
  CHECK(smith_invariants(a) == std::vector<Integer>{1, 2});
  CHECK(minor_gcd(int_matrix({{1, 2}, {2, 4}}), 2) == 0);
}

TEST_CASE("standardize produces a standard factor") {
  IntMatrix a = int_matrix({{3, 3, 3, 0, -2}, {1, 1, 1, 2, 0}});
  Standardization s = standardize(a);
  CHECK(is_standard(s.standard));
  CHECK(same_matrix(IntMatrix(s.transform * s.standard), a));
  CHECK(abs(determinant(s.transform)) == 2);
}

TEST_CASE("SL lift of a residue matrix") {
  IntMatrix g = int_matrix({{2, 3}, {1, 1}});  // det -1 = 4 mod 5
  IntMatrix gbar = int_matrix({{3, 0}, {0, 2}});  // det 6 = 1 mod 5
  IntMatrix lift = sl_lift_mod_p(gbar, 5);
  CHECK(determinant(lift) == 1);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) CHECK(oracle::same_mod(lift(i, j), gbar(i, j), 5));
  UnimodularWitness w = sl_lift_witness(gbar, 5);
  CHECK(w.is_valid());
  CHECK_THROWS_AS(sl_lift_mod_p(g, 5), Error);
}

TEST_CASE("echelon mod p exposes a divisible row") {
  IntMatrix a = int_matrix({{3, 3, 3, 0, -2}, {1, 1, 1, 2, 0}});
  ModPEchelon e = echelon_mod_prime(a, 2);
  CHECK(e.rank_mod_p == 1);
  CHECK(e.transform.is_valid());
  IntMatrix t = e.transform.matrix * a;
  for (Index j = 0; j < a.cols(); ++j) CHECK(oracle::same_mod(t(1, j), 0, 2));
}

TEST_CASE("hermite form") {
  // textbook example with a hand-checked answer
  IntMatrix a = int_matrix({{2, 3, 6, 2}, {5, 6, 1, 6}, {8, 3, 1, 1}});
  HermiteDecomposition h = hermite_decomposition(a);
  CHECK(h.transform.is_valid());
  CHECK(same_matrix(IntMatrix(h.transform.matrix * a), h.form));
  CHECK(same_matrix(h.form, int_matrix({{1, 0, 50, -11}, {0, 3, 28, -2}, {0, 0, 61, -13}})));
  CHECK(h.rank == 3);
  CHECK(same_matrix(hnf_canonical(int_matrix({{0, 0}, {2, 4}})), int_matrix({{2, 4}, {0, 0}})));
  CHECK(unimodular_row_equivalent(int_matrix({{1, 1, 1, 0, -2}, {0, 0, 0, 1, 1}}),
                                  int_matrix({{1, 1, 1, 1, -1}, {0, 0, 0, 1, 1}})));
  CHECK_FALSE(unimodular_row_equivalent(int_matrix({{1, 0}, {0, 2}}), int_matrix({{1, 0}, {0, 1}})));
}

TEST_CASE("integer kernel") {
  IntMatrix a = int_matrix({{1, 1, 1, 0, -2}, {0, 0, 0, 1, 1}});
  IntMatrix k = integer_kernel(a);
  CHECK(k.rows() == 5);
  CHECK(k.cols() == 3);
  CHECK(IntMatrix(a * k).isZero());
  CHECK(is_standard(IntMatrix(k.transpose())));
  CHECK(content(int_vector({6, -4, 10})) == 2);
  CHECK(same_matrix(primitive(int_vector({6, -4, 10})), int_vector({3, -2, 5})));
}
