#pragma once

#include <stdexcept>
#include <vector>

#include "grassmann/groebner.hpp"

namespace grassmann {

/// Divisor enumeration was needed for an integer that trial division could
/// not factor.
class RootSearchLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct rational roots, ascending. coeffs[i] multiplies x^i; the
/// polynomial must be nonzero.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// Monic minimal polynomial of variable i modulo a zero-dimensional proper
/// ideal given by its reduced Groebner basis; ascending coefficients.
std::vector<Rational> minimal_polynomial(std::span<const Polynomial> gb, std::size_t i, Budget& budget);

struct AffinePoints {
  /// False when the system has infinitely many solutions over the algebraic
  /// closure; points is then empty and says nothing.
  bool finite = true;
  std::vector<std::vector<Rational>> points;
};

/// All rational solutions of a polynomial system (all polynomials over the
/// same grading), in lexicographic order of coordinates.
AffinePoints rational_solutions(const std::vector<Polynomial>& system, Budget& budget);

}  // namespace grassmann
