#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: polynomials are plain maps, arithmetic is schoolbook, and the
// algorithms are the slowest obvious ones.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Exps = std::vector<int>;
using Poly = std::map<Exps, Q>;

void add_term(Poly& p, const Exps& e, const Q& c);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Q& c);
Poly variable(std::size_t nvars, std::size_t i);
Poly constant(std::size_t nvars, const Q& c);

/// Weighted grevlex with deg(x_i) = weights[i].
struct Order {
  std::vector<int> weights;

  int degree(const Exps& e) const;
  bool greater(const Exps& a, const Exps& b) const;
  const Exps& leading(const Poly& p) const;
};

Order chern_order(int k);

/// h_0..h_max_r as the graded pieces of sum_j (-1)^j (c_1 + ... + c_k)^j.
std::vector<Poly> series_h(int k, int max_r);

/// Number of partitions of r fitting a rows x cols box, r = 0..rows*cols,
/// by listing all of them.
std::vector<Z> box_partition_counts(int rows, int cols);

/// [n choose k]_q by the q-Pascal rule.
std::vector<Z> gaussian_pascal(int n, int k);

/// Standard Young tableaux of rectangular shape, counted by adding boxes
/// one at a time over all intermediate shapes.
Z rectangular_tableaux(int rows, int cols);

/// Diagonal of a Smith normal form (nonzero entries, positive).
std::vector<Z> smith_diagonal(std::vector<std::vector<Z>> a);

/// Buchberger with only the coprime-leading-monomial criterion, pairs by
/// smallest lcm degree, then interreduced and monic.
std::vector<Poly> buchberger(std::vector<Poly> gens, const Order& order);

/// Rewrites with one basis element at a time, always at the largest
/// reducible term, until no term is divisible by a leading monomial.
Poly rewrite(Poly p, const std::vector<Poly>& basis, const Order& order);

/// H*(G_{n,k}; Q) from the series relations and the basis above.
struct RingOracle {
  int n = 0, k = 0;
  Order order;
  std::vector<Poly> relations;
  std::vector<Poly> gb;

  RingOracle(int n, int k);

  Poly reduce(const Poly& p) const { return rewrite(p, gb, order); }
  /// Standard monomials of weighted degree r, descending.
  std::vector<Exps> basis(int r) const;
};

/// Constraint coefficients of graded maps H*(G_{n,k}) -> target, by direct
/// substitution of generic images into the series relations. Unknowns are
/// numbered generator by generator, basis position by basis position; the
/// degree-1 ones are left out when pinned. Keyed by (j of h_j, basis index);
/// values are polynomials in the unknowns. Zero constraints are omitted.
std::map<std::pair<int, int>, Poly> hom_constraints(int n, int k, const RingOracle& target,
                                                    bool pin_c1);

/// Random polynomial in k Chern variables with terms of degree <= max_degree.
Poly random_poly(std::mt19937_64& rng, int k, int max_degree, int terms);

}  // namespace oracle
