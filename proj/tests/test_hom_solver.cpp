#include <random>

#include "doctest.h"

#include "grassmann/hom_solver.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace grassmann;
using testing_support::to_oracle;

namespace {

RingPtr ring(int n, int k) { return build_ring(RingSpec::make(n, k)); }

bool nonzero_in_positive_degree(const GradedHom& h) {
  for (const auto& x : h.images)
    if (!x.is_zero()) return true;
  return false;
}

void check_constraints_against_oracle(int n, int k, int m, int l, bool pin) {
  const auto sys = build_hom_system(ring(n, k), ring(m, l), pin);
  const oracle::RingOracle target(m, l);
  const auto expected = oracle::hom_constraints(n, k, target, pin);
  std::map<std::pair<int, int>, oracle::Poly> got;
  for (const auto& c : sys.constraints)
    if (!c.poly.is_zero()) got[{c.relation, c.basis_index}] = to_oracle(c.poly);
  CAPTURE(n);
  CAPTURE(k);
  CAPTURE(m);
  CAPTURE(l);
  CAPTURE(pin);
  CHECK(got == expected);
}

}  // namespace

TEST_CASE("system shape") {
  const auto sys = build_hom_system(ring(4, 2), ring(4, 2), true);
  REQUIRE(sys.unknowns.size() == 2);
  CHECK(sys.unknowns[0].name == "u2_1");
  CHECK(sys.unknowns[1].name == "u2_2");
  CHECK(sys.grading->weights() == std::vector<int>{2, 2});
  const auto free = build_hom_system(ring(4, 2), ring(4, 2), false);
  REQUIRE(free.unknowns.size() == 3);
  CHECK(free.unknowns[0].name == "u1_1");
  CHECK(free.grading->weights() == std::vector<int>{1, 2, 2});
  for (const auto& c : free.constraints) CHECK((c.relation == 3 || c.relation == 4));
}

TEST_CASE("constraints agree with direct substitution") {
  check_constraints_against_oracle(4, 2, 4, 2, true);
  check_constraints_against_oracle(4, 2, 4, 2, false);
  check_constraints_against_oracle(3, 1, 5, 2, false);
  check_constraints_against_oracle(5, 2, 5, 2, false);
  check_constraints_against_oracle(5, 2, 9, 3, true);
  check_constraints_against_oracle(5, 2, 9, 3, false);
  check_constraints_against_oracle(4, 2, 6, 3, false);
  check_constraints_against_oracle(6, 3, 6, 3, true);
  check_constraints_against_oracle(6, 2, 8, 3, false);
}

TEST_CASE("symbolic relation images obey the recursion") {
  const auto sys = build_hom_system(ring(5, 2), ring(7, 3), false);
  const auto h = symbolic_relation_images(sys, 5);
  REQUIRE(h.size() == 6);
  CHECK(h[0].coords(0)[0] == Polynomial::constant(sys.grading, 1));
  // Constraints are the coordinates of phi(h_4), phi(h_5).
  for (const auto& c : sys.constraints)
    CHECK(h[c.relation].coords(c.relation)[static_cast<std::size_t>(c.basis_index)] == c.poly);
}

TEST_CASE("the zero assignment satisfies every system") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const int k = std::uniform_int_distribution<int>(1, n / 2)(rng);
    const int m = std::uniform_int_distribution<int>(2, 8)(rng);
    const int l = std::uniform_int_distribution<int>(1, m / 2)(rng);
    const bool pin = trial % 2 == 0;
    const auto sys = build_hom_system(ring(n, k), ring(m, l), pin);
    const std::vector<Rational> zero(sys.unknowns.size(), 0);
    for (const auto& p : sys.polynomials()) CHECK(p.evaluate(zero) == 0);
    const auto h = sys.assemble(zero);
    CHECK(check_well_defined(h).ok);
    CHECK_FALSE(nonzero_in_positive_degree(h));
  }
}

TEST_CASE("dimension shortcut") {
  CHECK(c1_vanishing_shortcut(RingSpec::make(3, 1), RingSpec::make(5, 2)));
  CHECK_FALSE(c1_vanishing_shortcut(RingSpec::make(4, 2), RingSpec::make(4, 2)));
  const auto e = c1_shortcut_evidence(ring(3, 1), ring(5, 2));
  CHECK(e.applies);
  CHECK(e.source_dimension == 2);
  CHECK(e.target_dimension == 6);
  CHECK(e.source_c1_nilpotency == 3);
  CHECK(e.target_c1_power_nonzero);
}

TEST_CASE("solver examples") {
  const auto cubic = solve_system(build_hom_system(ring(3, 1), ring(5, 2), false));
  CHECK(cubic.outcome == Outcome::only_trivial);
  CHECK(cubic.origin_only_over_closure);

  CHECK(solve_system(build_hom_system(ring(5, 1), ring(6, 1), true)).outcome == Outcome::only_trivial);

  const auto pinned = solve_system(build_hom_system(ring(5, 2), ring(9, 3), true));
  CHECK(pinned.outcome == Outcome::only_trivial);
}

TEST_CASE("grid search finds no nonzero point for G(5,2) -> G(9,3) pinned") {
  const auto sys = build_hom_system(ring(5, 2), ring(9, 3), true);
  REQUIRE(sys.unknowns.size() == 2);
  const auto polys = sys.polynomials();
  int tried = 0;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int da = 1; da <= 3; ++da)
        for (int db = 1; db <= 3; ++db) {
          if (a == 0 && b == 0) continue;
          const std::vector<Rational> v{Rational(a, da), Rational(b, db)};
          bool all_zero = true;
          for (const auto& p : polys) all_zero = all_zero && p.evaluate(v) == 0;
          CHECK_FALSE(all_zero);
          ++tried;
        }
  CHECK(tried > 1000);
}

TEST_CASE("identity is found for source = target") {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {5, 1}}) {
    CAPTURE(n);
    CAPTURE(k);
    const auto sys = build_hom_system(ring(n, k), ring(n, k), false);
    const auto result = solve_system(sys);
    REQUIRE(result.outcome == Outcome::witness);
    REQUIRE(result.witness);
    const auto& w = *result.witness;
    CHECK(check_well_defined(w).ok);
    CHECK(nonzero_in_positive_degree(w));

    // Graded rescaling c_i -> t^i c_i keeps solutions solutions.
    for (const Rational& t : {Rational(2), Rational(-1, 3), Rational(5, 7)}) {
      std::vector<Rational> scaled = result.witness_values;
      for (std::size_t u = 0; u < scaled.size(); ++u) {
        Rational f = 1;
        for (int e = 0; e < sys.unknowns[u].generator; ++e) f *= t;
        scaled[u] *= f;
      }
      for (const auto& p : sys.polynomials()) CHECK(p.evaluate(scaled) == 0);
      CHECK(check_well_defined(sys.assemble(scaled)).ok);
    }
  }
}

TEST_CASE("endomorphism reduction") {
  const auto zero = zero_hom(ring(3, 1), ring(5, 2));
  const auto endo = endo_reduction(1, 2, 5, 3, zero);
  CHECK(endo.source->spec() == RingSpec::make(4, 1));
  CHECK(endo.target->spec() == RingSpec::make(4, 1));
  CHECK_FALSE(nonzero_in_positive_degree(endo));

  // phi: G(5,2) -> G(9,3) with c1 -> 0, c2 -> c2 is not a hom, but the
  // composite still kills c1.
  const auto phi = make_hom(ring(5, 2), ring(9, 3),
                            std::vector<Polynomial>{Polynomial{}, Polynomial::parse("c2", Grading::chern(3))});
  const auto e2 = endo_reduction(2, 3, 9, 5, phi);
  CHECK(e2.images[0].is_zero());
  CHECK_FALSE(e2.images[1].is_zero());
}

TEST_CASE("hypothesis checklist") {
  auto holds = [](const std::vector<Hypothesis>& hs, const std::string& name) {
    for (const auto& h : hs)
      if (h.name == name) return h.holds;
    FAIL("missing hypothesis " << name);
    return false;
  };
  for (const auto& h : rigidity_hypotheses(2, 3, 9, 5, true)) CHECK(h.holds);
  CHECK_FALSE(holds(rigidity_hypotheses(2, 2, 8, 5, true), "k_lt_l"));
  CHECK_FALSE(holds(rigidity_hypotheses(1, 2, 4, 3, true), "codim"));
  CHECK_FALSE(holds(rigidity_hypotheses(3, 4, 7, 6, true), "l_range"));
  // k = 4: 2k^2 - k - 1 = 27, so m - l = 27 separates the two readings.
  CHECK_FALSE(holds(rigidity_hypotheses(4, 5, 32, 9, true), "quadratic_bound"));
  CHECK(holds(rigidity_hypotheses(4, 5, 32, 9, false), "quadratic_bound"));
  CHECK(holds(rigidity_hypotheses(3, 4, 9, 6, true), "quadratic_bound"));
}

TEST_CASE("rigidity certificates") {
  for (auto [k, l, m, n] : {std::array{1, 2, 5, 3}, {1, 2, 6, 4}, {2, 3, 9, 5}, {2, 3, 10, 6}}) {
    CAPTURE(k);
    CAPTURE(l);
    CAPTURE(m);
    CAPTURE(n);
    const auto cert = certify_rigidity(k, l, m, n, true);
    CHECK(cert.conclusion == Conclusion::only_trivial);
    REQUIRE(cert.unpinned);
    CHECK(cert.unpinned->outcome == Outcome::only_trivial);
    REQUIRE(cert.reduction);
    CHECK(cert.reduction->alpha.target->spec() == RingSpec::make(m - l + k, k));
    CHECK(cert.method == "dimension-shortcut");
  }
  const auto bad = certify_rigidity(2, 2, 8, 5, true);
  CHECK(bad.conclusion == Conclusion::unverified_hypotheses);
  CHECK(bad.method == "none");
  CHECK_FALSE(bad.solve);
}

TEST_CASE("budget exhaustion is inconclusive, not a claim") {
  CertifyOptions options;
  options.solve.limits.steps = 1;
  const auto cert = certify_rigidity(3, 4, 8, 6, true, options);
  CHECK(cert.conclusion == Conclusion::inconclusive);
  REQUIRE(cert.solve);
  CHECK_FALSE(cert.solve->reason.empty());
  CHECK(certify_rigidity(3, 4, 8, 6, true).conclusion == Conclusion::only_trivial);

  // Propagation alone needs no reduction steps.
  CHECK(certify_rigidity(2, 3, 9, 5, true, options).conclusion == Conclusion::only_trivial);

  SolveOptions starved;
  starved.limits.steps = 1;
  const auto probe = conjecture_scan(5, 2, starved);
  CHECK(probe.result.outcome == Outcome::inconclusive);
  CHECK_FALSE(probe.finding);
}

TEST_CASE("conjecture probe") {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {5, 1}}) {
    const auto report = conjecture_scan(n, k);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(report.result.outcome == Outcome::only_trivial);
    CHECK_FALSE(report.finding);
  }
}
