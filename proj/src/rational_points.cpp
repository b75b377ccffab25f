#include "grassmann/rational_points.hpp"

#include <algorithm>

#include "grassmann/linalg.hpp"

namespace grassmann {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Prime factors (with multiplicity) of |a| > 0.
std::vector<Integer> factor(Integer a) {
  a = abs(a);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p <= kTrialLimit && a > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > a) break;
    while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
    }
  }
  if (a > 1) {
    if (a > Integer(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(a.get_mpz_t(), 30) == 0)
      throw RootSearchLimit("rational_roots: cannot factor " + a.get_str());
    primes.push_back(a);
  }
  return primes;
}

std::vector<Integer> divisors(const Integer& a) {
  const auto primes = factor(a);
  std::vector<Integer> out{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t before = out.size();
    Integer pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (std::size_t t = 0; t < before; ++t) out.push_back(out[t] * pk);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational horner(const std::vector<Integer>& c, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + Rational(c[i]);
  return v;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  Integer den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& q : c) z.push_back(Integer(q * den));

  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (z[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (z.size() > 1) {
    for (const auto& p : divisors(z.front()))
      for (const auto& q : divisors(z.back())) {
        if (gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          Rational x(sign * p, q);
          x.canonicalize();
          if (horner(z, x) == 0) roots.push_back(x);
        }
      }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> minimal_polynomial(std::span<const Polynomial> gb, std::size_t i, Budget& budget) {
  const auto basis = standard_monomials(gb);
  const GradingPtr& g = gb.front().grading();
  const Index dim = static_cast<Index>(basis.size());
  auto coords = [&](const Polynomial& p) {
    std::vector<Rational> v(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) v[t] = p.coefficient(basis[t]);
    return v;
  };
  std::vector<std::vector<Rational>> powers;
  Polynomial x = Polynomial::variable(g, i);
  Polynomial cur = Polynomial::constant(g, 1);
  for (Index p = 0; p <= dim; ++p) {
    powers.push_back(coords(cur));
    // Columns v_0..v_p; a dependence shows up as a non-pivot column.
    RowMatrix<Rational> m(dim, p + 1);
    for (Index r = 0; r < dim; ++r)
      for (Index c = 0; c <= p; ++c) m(r, c) = powers[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    const auto ech = reduced_row_echelon(m);
    if (ech.rank() <= p) {
      // v_p = sum over pivot columns; x^p - sum = 0.
      std::vector<Rational> poly(static_cast<std::size_t>(p + 1));
      poly[static_cast<std::size_t>(p)] = 1;
      for (Index r = 0; r < ech.rank(); ++r) poly[static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(r)])] = -ech.rows(r, p);
      return poly;
    }
    cur = reduce(cur * x, gb, budget);
  }
  throw std::logic_error("minimal_polynomial: no dependence within the quotient dimension");
}

namespace {

void solve_from(std::vector<Polynomial> system, std::size_t var, std::size_t nvars, Budget& budget,
                std::vector<Rational>& partial, AffinePoints& out) {
  const auto gb = groebner_basis(system, budget);
  if (is_unit_ideal(gb)) return;
  if (!is_zero_dimensional(gb)) {
    out.finite = false;
    return;
  }
  if (var == nvars) {
    out.points.push_back(partial);
    return;
  }
  const GradingPtr& g = gb.front().grading();
  for (const auto& root : rational_roots(minimal_polynomial(gb, var, budget))) {
    std::vector<Polynomial> next = gb;
    next.push_back(Polynomial::variable(g, var) - Polynomial::constant(g, root));
    partial.push_back(root);
    solve_from(std::move(next), var + 1, nvars, budget, partial, out);
    partial.pop_back();
    if (!out.finite) return;
  }
}

}  // namespace

AffinePoints rational_solutions(const std::vector<Polynomial>& system, Budget& budget) {
  AffinePoints out;
  GradingPtr g;
  for (const auto& p : system)
    if (p.grading()) g = p.grading();
  if (!g) {
    // No equations over no known variables: nothing to enumerate.
    out.finite = false;
    return out;
  }
  if (std::all_of(system.begin(), system.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    out.finite = g->size() == 0;
    if (out.finite) out.points.push_back({});
    return out;
  }
  std::vector<Rational> partial;
  solve_from(system, 0, g->size(), budget, partial, out);
  if (!out.finite) out.points.clear();
  return out;
}

}  // namespace grassmann
