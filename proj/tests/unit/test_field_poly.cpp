#include <catch2/catch_amalgamated.hpp>

#include "lpdec/bivariate.hpp"
#include "lpdec/field.hpp"
#include "lpdec/linalg.hpp"
#include "lpdec/poly.hpp"
#include "lpdec/rng.hpp"

using namespace lpdec;

namespace {

// independent primality oracle: trial division
bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("field construction accepts primes and rejects composites") {
  CHECK_NOTHROW(field_new(7));
  CHECK_THROWS_AS(field_new(6), NotPrime);
  CHECK(trial_division_prime(10007));
  CHECK_NOTHROW(field_new(10007));
  CHECK_THROWS_AS(field_new(10005), NotPrime);
  CHECK_THROWS_AS(field_new(1), NotPrime);

  // Miller-Rabin agrees with trial division across a range
  for (std::uint64_t n = 2; n < 2000; ++n) {
    bool mr = detail::is_prime_u64(n);
    CHECK(mr == trial_division_prime(n));
  }
}

TEST_CASE("field inverse examples and exhaustive involution") {
  Field f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.inv(1) == 1);
  Field f5(5);
  CHECK_THROWS_AS(f5.inv(0), DivideByZero);

  for (std::uint64_t q = 2; q <= 101; ++q) {
    if (!detail::is_prime_u64(q)) continue;
    Field f(q);
    for (std::uint64_t a = 1; a < q; ++a) {
      std::uint64_t inv = f.inv(a);
      CHECK(f.mul(a, inv) == 1);
      CHECK(f.inv(inv) == a);
    }
  }
}

TEST_CASE("poly_eval examples") {
  Field f5(5);
  Poly p({1, 0, 1});  // 1 + x^2
  CHECK(poly_eval(f5, p, FieldElem(3, f5)).value == 0);
  CHECK(poly_eval(f5, Poly::zero(), FieldElem(2, f5)).value == 0);
  Field f7(7);
  Poly g({3, 2});  // 3 + 2x
  CHECK(poly_eval(f7, g, FieldElem(4, f7)).value == 4);
  CHECK_THROWS_AS(poly_eval(f7, g, FieldElem(4, f5)), FieldMismatch);
}

TEST_CASE("poly evaluation is a ring homomorphism in the polynomial") {
  Field f(13);
  RngStream rng = RngStream::keyed(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a, b;
    for (int i = 0; i < 5; ++i) {
      a.set_coeff(static_cast<std::size_t>(i), rng.uniform_below(13));
      b.set_coeff(static_cast<std::size_t>(i), rng.uniform_below(13));
    }
    a.normalize(f);
    b.normalize(f);
    std::uint64_t x = rng.uniform_below(13);
    CHECK(a.plus(f, b).eval(f, x) == f.add(a.eval(f, x), b.eval(f, x)));
    CHECK(a.times(f, b).eval(f, x) == f.mul(a.eval(f, x), b.eval(f, x)));
  }
}

TEST_CASE("nullspace solve: examples and re-multiplication oracle") {
  Field f5(5);
  {
    MatFq A(1, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 1;
    auto v = solve_nullspace(f5, A);
    REQUIRE(v.has_value());
    bool nonzero = (*v)[0] || (*v)[1];
    CHECK(nonzero);
    CHECK(f5.add((*v)[0], (*v)[1]) == 0);
  }
  {
    MatFq A(0, 3);
    auto v = solve_nullspace(f5, A);
    REQUIRE(v.has_value());
    CHECK(((*v)[0] || (*v)[1] || (*v)[2]));
  }
  {
    Field f7(7);
    RngStream rng = RngStream::keyed(6, 2);
    for (int trial = 0; trial < 20; ++trial) {
      MatFq A(3, 6);
      for (auto& e : A.a) e = rng.uniform_below(7);
      auto v = solve_nullspace(f7, A);
      REQUIRE(v.has_value());
      bool nonzero = false;
      for (auto x : *v) nonzero |= x != 0;
      CHECK(nonzero);
      auto prod = mat_vec(f7, A, *v);
      for (auto x : prod) CHECK(x == 0);
    }
  }
  {
    // full-rank square system has trivial kernel
    Field f3(3);
    MatFq A(2, 2);
    A.at(0, 0) = 1;
    A.at(1, 1) = 1;
    CHECK_FALSE(solve_nullspace(f3, A).has_value());
  }
}

TEST_CASE("bivariate polynomial basics") {
  Field f7(7);
  BivariatePoly Q(3, 3);
  // Q = (Y - 2 X)(Y - 3) = Y^2 - (2X + 3) Y + 6 X
  Q.set_coeff(0, 2, 1);
  Q.set_coeff(1, 1, f7.neg(2));
  Q.set_coeff(0, 1, f7.neg(3));
  Q.set_coeff(1, 0, 6);
  Poly r1({0, 2});  // 2X
  Poly r2({3});     // constant 3
  CHECK(Q.eval_y(f7, r1).is_zero());
  CHECK(Q.eval_y(f7, r2).is_zero());
  CHECK_FALSE(Q.eval_y(f7, Poly({1})).is_zero());
  CHECK(Q.eval(f7, 2, 4) == Q.eval_y(f7, Poly({4})).eval(f7, 2));

  auto binom = binomial_table(f7, 8);
  // Hasse derivative of order (0,0) is plain evaluation
  CHECK(Q.hasse_eval(f7, 0, 0, 2, 4, binom) == Q.eval(f7, 2, 4));
}
