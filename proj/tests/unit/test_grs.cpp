#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "lpdec/grs.hpp"
#include "lpdec/rng.hpp"

using namespace lpdec;

TEST_CASE("encode examples") {
  {
    CodeSpec code = CodeSpec::reed_solomon(5, 5, 2);
    Codeword c = encode(code, Poly({1, 1}));
    CHECK(c.symbols == std::vector<std::uint64_t>{1, 2, 3, 4, 0});
    Codeword z = encode(code, Poly::zero());
    CHECK(z.symbols == std::vector<std::uint64_t>(5, 0));
  }
  {
    CodeSpec code(Field(7), 3, 3, {1, 2, 3}, {2, 2, 2});
    Codeword c = encode(code, Poly({0, 0, 1}));
    CHECK(c.symbols == std::vector<std::uint64_t>{2, 1, 4});
  }
  {
    CodeSpec code = CodeSpec::reed_solomon(5, 5, 2);
    CHECK_THROWS_AS(encode(code, Poly({1, 1, 1})), DegreeTooLarge);
  }
}

TEST_CASE("encoding is linear") {
  CodeSpec code = CodeSpec::reed_solomon(13, 10, 4);
  RngStream rng = RngStream::keyed(9, 0);
  for (int t = 0; t < 30; ++t) {
    Poly a, b;
    for (std::size_t i = 0; i < code.k; ++i) {
      a.set_coeff(i, rng.uniform_below(13));
      b.set_coeff(i, rng.uniform_below(13));
    }
    a.normalize(code.field);
    b.normalize(code.field);
    Codeword ca = encode(code, a), cb = encode(code, b), cs = encode(code, a.plus(code.field, b));
    for (std::size_t i = 0; i < code.n; ++i)
      CHECK(cs.symbols[i] == code.field.add(ca.symbols[i], cb.symbols[i]));
  }
}

TEST_CASE("subclass_alpha_alpha examples") {
  CodeSpec c1 = subclass_alpha_alpha(7, 6, 2);
  CHECK(c1.alpha == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(c1.twist == c1.alpha);
  CHECK_THROWS_AS(subclass_alpha_alpha(5, 5, 2), LengthTooLarge);
  CodeSpec c2 = subclass_alpha_alpha(17, 16, 4);
  CHECK(c2.alpha.front() == 1);
  CHECK(c2.alpha.back() == 16);
}

TEST_CASE("minimum-distance bound examples") {
  CHECK(min_dist_lower_bound(2, 6, 2) == Catch::Approx(std::sqrt(45.0 * 7.0 / 48.0)).epsilon(1e-14));
  CHECK(min_dist_lower_bound(2, 6, 2) == Catch::Approx(2.5617).margin(1e-4));
  CHECK(min_dist_lower_bound(1, 6, 2) == Catch::Approx(45.0 / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(min_dist_lower_bound(1, 6, 0), InvalidDimension);
  CHECK_THROWS_AS(min_dist_lower_bound(1, 6, 7), InvalidDimension);
  // the (n+1)-form dominates the rate form
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(min_dist_lower_bound(1, 6, k) >= min_dist_lower_bound_rate_form(1, 6, k));
    CHECK(min_dist_lower_bound(2, 6, k) >= min_dist_lower_bound_rate_form(2, 6, k));
  }
}

TEST_CASE("exhaustive minimum distance respects the bounds") {
  // includes the spec's q=7 n=6 k=2 instance: true l1 minimum >= 5.625
  for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull}) {
    std::size_t n = q - 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      CodeSpec code = subclass_alpha_alpha(q, n, k);
      double l1 = exhaustive_min_dist(code, 1);
      double l2sq = exhaustive_min_dist(code, 2);
      double b1 = min_dist_lower_bound(1, n, k);
      double b2 = min_dist_lower_bound(2, n, k);
      INFO("q=" << q << " k=" << k);
      CHECK(l1 >= b1 - 1e-9);
      CHECK(l2sq >= b2 * b2 - 1e-9);
    }
  }
}

TEST_CASE("unique-decoding rate curves") {
  CHECK(r_uniq(2, 0.0) == 1.0);
  CHECK(r_uniq(1, 0.0) == 1.0);
  CHECK(r_uniq(2, 0.5) == Catch::Approx(1.0 / std::sqrt(13.0)).epsilon(1e-14));
  CHECK(r_uniq(2, 0.5) == Catch::Approx(0.27735).margin(1e-5));
  // asymptotes: r_uniq(2,d)*d -> 1/(4 sqrt3), r_uniq(1,d)*d -> 1/8
  double d = 1e3;
  CHECK(r_uniq(2, d) * d == Catch::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-3));
  CHECK(r_uniq(1, d) * d == Catch::Approx(0.125).epsilon(1e-3));
}
