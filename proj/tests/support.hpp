#pragma once

// Conversions between library types and the oracle representation.

#include <random>
#include <stdexcept>

#include "grassmann/ring.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Poly to_oracle(const grassmann::Polynomial& p) {
  oracle::Poly out;
  for (const auto& t : p.terms()) oracle::add_term(out, t.monomial.exponents, t.coeff);
  return out;
}

inline grassmann::Polynomial from_oracle(const oracle::Poly& p, const grassmann::GradingPtr& grading) {
  std::vector<grassmann::Term> terms;
  for (const auto& [e, c] : p) terms.push_back({grassmann::Monomial(e), c});
  return grassmann::Polynomial::from_terms(grading, std::move(terms));
}

inline grassmann::Polynomial random_polynomial(std::mt19937_64& rng, int k, int max_degree, int terms) {
  return from_oracle(oracle::random_poly(rng, k, max_degree, terms), grassmann::Grading::chern(k));
}

inline grassmann::Polynomial chern_poly(int k, const char* text) {
  return grassmann::Polynomial::parse(text, grassmann::Grading::chern(k));
}

}  // namespace testing_support
