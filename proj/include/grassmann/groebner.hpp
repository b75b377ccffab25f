#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassmann/poly.hpp"

namespace grassmann {

struct BudgetLimits {
  std::uint64_t steps = 1'000'000;          // reduction steps per solve
  std::size_t bytes = std::size_t{64} << 20;  // live coefficient storage
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Step and coefficient-size accounting shared by every computation of one
/// solve. Exceeding a limit throws BudgetExceeded.
class Budget {
 public:
  Budget() = default;
  explicit Budget(BudgetLimits limits) : limits_(limits) {}

  void charge_steps(std::uint64_t n = 1);
  void observe_bytes(std::size_t live);

  std::uint64_t steps_used() const { return steps_; }
  std::size_t peak_bytes() const { return peak_; }
  const BudgetLimits& limits() const { return limits_; }

 private:
  BudgetLimits limits_;
  std::uint64_t steps_ = 0;
  std::size_t peak_ = 0;
};

std::size_t coefficient_bytes(const Polynomial& p);

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of p modulo `basis` (remainder of multivariate division,
/// divisors tried in basis order).
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, Budget& budget);
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// Reduced Groebner basis (monic, sorted by leading monomial, descending)
/// in the grading's weighted grevlex order. Buchberger with the product and
/// chain criteria; pairs are taken by smallest lcm degree, then lcm, then
/// index, so the run is deterministic. An empty input gives an empty basis.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, Budget& budget,
                                       GroebnerStats* stats = nullptr);
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators);

bool is_unit_ideal(std::span<const Polynomial> gb);

/// Some leading monomial is a pure power of variable i.
bool has_pure_power(std::span<const Polynomial> gb, std::size_t i);

/// Finitely many standard monomials, i.e. a pure power of every variable.
bool is_zero_dimensional(std::span<const Polynomial> gb);

/// Monomials not divisible by any leading monomial; gb must be
/// zero-dimensional and not the unit ideal. Ascending order.
std::vector<Monomial> standard_monomials(std::span<const Polynomial> gb);

/// Copy of p over `to`, whose first p.num_vars() variables are p's.
Polynomial embed(const Polynomial& p, const GradingPtr& to);

}  // namespace grassmann
