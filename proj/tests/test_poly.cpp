#include <random>

#include "doctest.h"

#include "grassmann/poly.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grassmann;
using testing_support::chern_poly;
using testing_support::random_polynomial;
using testing_support::to_oracle;

TEST_CASE("addition") {
  CHECK((chern_poly(2, "c1") + chern_poly(2, "-c1")).is_zero());
  CHECK((chern_poly(2, "c1^2") + chern_poly(2, "c2")).to_string() == "c1^2 + c2");
  const auto h = truncated_inverse_series(2, 2);
  CHECK(h[2] + chern_poly(2, "c2") == chern_poly(2, "c1^2"));
}

TEST_CASE("multiplication") {
  const auto one = Polynomial::constant(Grading::chern(3), 1);
  const auto p = chern_poly(3, "2*c1^3 - 1/2*c2*c1 + c3");
  CHECK(one * p == p);
  CHECK((chern_poly(1, "c1") * chern_poly(1, "c1")).to_string() == "c1^2");
  CHECK(pow(chern_poly(2, "c1 + c2"), 3) == chern_poly(2, "c1^3 + 3*c1^2*c2 + 3*c1*c2^2 + c2^3"));
}

TEST_CASE("canonical text") {
  const auto p = chern_poly(2, "c2^2 + c1^4 - 3*c2*c1^2");
  CHECK(p.to_string() == "c1^4 - 3*c1^2*c2 + c2^2");
  CHECK(Polynomial::parse(p.to_string(), Grading::chern(2)) == p);
  CHECK(chern_poly(3, "-2/6*c3 + 0*c1").to_string() == "-1/3*c3");
  CHECK(Polynomial(Grading::chern(2)).to_string() == "0");
  CHECK_THROWS_AS(chern_poly(2, "c3"), std::invalid_argument);
  CHECK_THROWS_AS(chern_poly(2, "c1 +"), std::invalid_argument);
}

TEST_CASE("graded components") {
  CHECK(graded_component(chern_poly(1, "1 + c1 + c1^2"), 2) == chern_poly(1, "c1^2"));
  const auto h = truncated_inverse_series(2, 6);
  CHECK(graded_component(h[3], 3) == h[3]);
  Polynomial inverse_part(Grading::chern(2));
  for (int r = 0; r <= 4; ++r) inverse_part += h[r];
  CHECK(graded_component(chern_poly(2, "1 + c1 + c2") * inverse_part, 4).is_zero());
}

TEST_CASE("substitution") {
  CHECK(substitute(chern_poly(1, "c1^2"), std::vector{chern_poly(1, "c1")}) == chern_poly(1, "c1^2"));
  const std::vector<Polynomial> kill_top{chern_poly(1, "c1"), Polynomial{}};
  CHECK(substitute(chern_poly(2, "c2"), kill_top).is_zero());
  CHECK(substitute(chern_poly(2, "c1^2 - c2"), kill_top) == chern_poly(1, "c1^2"));
  CHECK_THROWS_AS(substitute(chern_poly(2, "c2"), std::vector{chern_poly(1, "c1"), chern_poly(1, "c1")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute(chern_poly(2, "c2"), std::vector{chern_poly(1, "c1")}), std::invalid_argument);
}

TEST_CASE("symbolic substitution into h_4") {
  // Images a*c1 and x*c1^2 + y*c2 over a grading holding both c and unknowns.
  auto g = std::make_shared<const Grading>(std::vector<std::string>{"c1", "c2", "a", "x", "y"},
                                           std::vector<int>{1, 2, 1, 1, 1});
  const auto h = truncated_inverse_series(2, 4);
  const std::vector<Polynomial> images{Polynomial::parse("a*c1", g), Polynomial::parse("x*c1^2 + y*c2", g)};
  const auto value = substitute(h[4], images, false);
  const auto expected = Polynomial::parse(
      "a^4*c1^4 - 3*a^2*x*c1^4 - 3*a^2*y*c1^2*c2 + x^2*c1^4 + 2*x*y*c1^2*c2 + y^2*c2^2", g);
  CHECK(value == expected);
}

TEST_CASE("inverse series") {
  const auto h = truncated_inverse_series(2, 4);
  CHECK(h[0] == chern_poly(2, "1"));
  CHECK(h[1] == chern_poly(2, "-c1"));
  CHECK(h[4] == chern_poly(2, "c1^4 - 3*c1^2*c2 + c2^2"));
  for (int k = 1; k <= 5; ++k) {
    const auto lib = truncated_inverse_series(k, 12);
    const auto series = oracle::series_h(k, 12);
    for (int r = 0; r <= 12; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      CHECK(to_oracle(lib[r]) == series[r]);
    }
  }
}

TEST_CASE("inverse series convolution identity") {
  for (int k = 1; k <= 5; ++k) {
    const auto g = Grading::chern(k);
    const auto h = truncated_inverse_series(k, 15);
    for (int r = 1; r <= 15; ++r) {
      Polynomial sum = h[r];
      for (int i = 1; i <= std::min(k, r); ++i) sum += Polynomial::variable(g, i - 1) * h[r - i];
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 4;
    const auto a = random_polynomial(rng, k, 6, 5);
    const auto b = random_polynomial(rng, k, 6, 5);
    const auto c = random_polynomial(rng, k, 6, 5);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
  }
}

TEST_CASE("graded components reconstruct") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    const auto p = random_polynomial(rng, k, 8, 7);
    Polynomial sum(Grading::chern(k));
    for (int r = 0; r <= std::max(0, p.max_degree()); ++r) {
      const auto part = graded_component(p, r);
      if (!part.is_zero()) CHECK(*part.homogeneous_degree() == r);
      sum += part;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 3, l = 1 + (trial / 3) % 3;
    std::vector<Polynomial> images;
    for (int i = 1; i <= k; ++i) {
      // A random homogeneous image of degree i in the l-variable ring.
      auto q = graded_component(random_polynomial(rng, l, i, 6), i);
      images.push_back(q);
    }
    const auto p = random_polynomial(rng, k, 5, 4);
    const auto q = random_polynomial(rng, k, 5, 4);
    CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
    CHECK(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
  }
}

TEST_CASE("weighted grevlex order") {
  const auto g = Grading::chern(3);
  const Monomial c1_3({3, 0, 0}), c1c2({1, 1, 0}), c3({0, 0, 1}), c2({0, 1, 0});
  CHECK(g->compare(c1_3, c1c2) > 0);
  CHECK(g->compare(c1c2, c3) > 0);
  CHECK(g->compare(c3, c2) > 0);
  CHECK(g->compare(c2, c2) == 0);
  const auto ms = monomials_of_degree(*g, 3);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == c1_3);
  CHECK(ms[2] == c3);
}

TEST_CASE("evaluation") {
  const auto p = chern_poly(2, "c1^2 - 1/2*c2 + 3");
  const std::vector<Rational> point{Rational(2), Rational(-4)};
  CHECK(p.evaluate(point) == Rational(9));
  CHECK(p.coefficient(Monomial({0, 1})) == Rational(-1, 2));
}
