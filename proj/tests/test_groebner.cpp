#include <random>

#include "doctest.h"

#include "grassmann/groebner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grassmann;
using testing_support::to_oracle;

namespace {

GradingPtr xyz() {
  static const auto g = std::make_shared<const Grading>(std::vector<std::string>{"x", "y", "z"},
                                                        std::vector<int>{1, 1, 1});
  return g;
}

Polynomial P(const char* text, const GradingPtr& g = xyz()) { return Polynomial::parse(text, g); }

oracle::Order order_of(const Grading& g) { return oracle::Order{g.weights()}; }

void check_against_oracle(const std::vector<Polynomial>& gens) {
  const auto g = gens.front().grading();
  const auto gb = groebner_basis(gens);
  std::vector<oracle::Poly> in;
  for (const auto& p : gens) in.push_back(to_oracle(p));
  auto expected = oracle::buchberger(in, order_of(*g));
  std::vector<oracle::Poly> got;
  for (const auto& p : gb) got.push_back(to_oracle(p));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  const auto gb = groebner_basis({P("x^2 - y"), P("x*y - 1")});
  // Leading monomials are sorted descending and every element is monic.
  for (std::size_t i = 0; i + 1 < gb.size(); ++i)
    CHECK(xyz()->compare(gb[i].leading_monomial(), gb[i + 1].leading_monomial()) > 0);
  for (const auto& p : gb) CHECK(p.leading_coeff() == 1);
  CHECK(reduce(P("x^3 - 1"), gb).is_zero());
  CHECK(reduce(P("y^3 - 1"), gb).is_zero());
  CHECK_FALSE(reduce(P("x - 1"), gb).is_zero());

  CHECK(groebner_basis({}).empty());
  const auto unit = groebner_basis({P("x*y - 1"), P("x")});
  CHECK(is_unit_ideal(unit));
}

TEST_CASE("bases agree with plain Buchberger") {
  check_against_oracle({P("x^2 - y"), P("x*y - 1")});
  check_against_oracle({P("x^2 + y*z - 2"), P("x*y - z^2"), P("y^2 - x + z")});
  check_against_oracle({P("x*y*z - 1"), P("x^2 - y^2"), P("z^3 - x")});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing_support::random_polynomial(rng, 3, 3, 3));
    bool any = false;
    for (const auto& p : gens) any = any || !p.is_zero();
    if (any) check_against_oracle(gens);
  }
}

TEST_CASE("weighted grading") {
  const auto g = Grading::chern(2);
  const auto rel = std::vector<Polynomial>{Polynomial::parse("-c1^3 + 2*c1*c2", g),
                                           Polynomial::parse("c1^4 - 3*c1^2*c2 + c2^2", g)};
  check_against_oracle(rel);
  const auto gb = groebner_basis(rel);
  CHECK(is_zero_dimensional(gb));
  const auto sm = standard_monomials(gb);
  CHECK(sm.size() == 6);  // rank of H*(G(4,2))
}

TEST_CASE("dimension predicates") {
  const auto gb = groebner_basis({P("x^2"), P("y^3 - x*y"), P("z^2 - y")});
  CHECK(has_pure_power(gb, 0));
  CHECK(is_zero_dimensional(gb));
  const auto line = groebner_basis({P("x*y"), P("z")});
  CHECK_FALSE(is_zero_dimensional(line));
  CHECK_FALSE(has_pure_power(line, 0));
  CHECK(has_pure_power(line, 2));
  CHECK(standard_monomials(groebner_basis({P("x^2"), P("y"), P("z^2")})).size() == 4);
}

TEST_CASE("budgets") {
  Budget tight(BudgetLimits{5, std::size_t{64} << 20});
  CHECK_THROWS_AS(groebner_basis({P("x^2 - y*z + 1"), P("x*y - z^2"), P("y^2 - x*z - 2")}, tight),
                  BudgetExceeded);
  Budget small_bytes(BudgetLimits{1'000'000, 64});
  CHECK_THROWS_AS(groebner_basis({P("123456789123456789*x^2 - y"), P("x*y - 987654321987654321")}, small_bytes),
                  BudgetExceeded);
  Budget fine;
  GroebnerStats stats;
  groebner_basis({P("x^2 - y"), P("x*y - 1"), P("x*z")}, fine, &stats);
  CHECK(fine.steps_used() > 0);
  CHECK(stats.pairs_created >= stats.pairs_reduced);
}

TEST_CASE("embedding into a larger grading") {
  auto big = std::make_shared<const Grading>(std::vector<std::string>{"x", "y", "z", "t"},
                                             std::vector<int>{1, 1, 1, 1});
  const auto p = embed(P("x*y - z^2"), big);
  CHECK(p == Polynomial::parse("x*y - z^2", big));
}
