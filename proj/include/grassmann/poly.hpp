#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace grassmann {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector (e_1, ..., e_k) over the variables of a Grading.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents(num_vars, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }

  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; caller guarantees b divides a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Variable names and positive integer weights. The weight of c_i is i
/// (complex degree); hom-system unknowns carry the weight of the generator
/// whose image they parameterize.
class Grading {
 public:
  Grading(std::vector<std::string> names, std::vector<int> weights);

  /// Variables c1..ck with deg(c_i) = i. Instances are interned per k.
  static std::shared_ptr<const Grading> chern(int k);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::string>& names() const { return names_; }

  int degree(const Monomial& m) const;

  /// Weighted graded reverse lexicographic order: -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using GradingPtr = std::shared_ptr<const Grading>;

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// strictly descending in the grading's monomial order with no zero
/// coefficients, so equality is structural.
///
/// A default-constructed Polynomial is the zero polynomial without a grading;
/// it combines with any graded polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(GradingPtr grading) : grading_(std::move(grading)) {}

  static Polynomial constant(GradingPtr grading, const Rational& c);
  static Polynomial variable(GradingPtr grading, std::size_t i);
  static Polynomial monomial(GradingPtr grading, Monomial m, const Rational& c = 1);
  /// Builds from unsorted terms, merging duplicates.
  static Polynomial from_terms(GradingPtr grading, std::vector<Term> terms);

  const GradingPtr& grading() const { return grading_; }
  std::size_t num_vars() const { return grading_ ? grading_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  /// Degree if every term has the same weighted degree; nullopt for zero or
  /// mixed-degree polynomials.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  /// this -= c * m * q, by merging.
  void subtract_scaled(const Rational& c, const Monomial& m, const Polynomial& q);
  /// Divides by the leading coefficient.
  void make_monic();

  Rational evaluate(std::span<const Rational> point) const;
  Rational coefficient(const Monomial& m) const;

  /// Canonical rendering, e.g. "c1^4 - 3*c1^2*c2 + c2^2".
  std::string to_string() const;
  static Polynomial parse(std::string_view text, GradingPtr grading);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void adopt(const Polynomial& other);
  void check_compatible(const Polynomial& other) const;

  GradingPtr grading_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
Polynomial pow(const Polynomial& p, unsigned e);

/// Sum of the terms of weighted degree exactly r.
Polynomial graded_component(const Polynomial& p, int r);

/// Replaces variable i by images[i] and expands. In strict mode every
/// nonzero image must be homogeneous of degree weight(i) in its own grading.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images,
                      bool strict = true);

/// h_0, ..., h_max_r where h_r is the degree-r part of (1 + c_1 + ... + c_k)^{-1},
/// via h_r = -(c_1 h_{r-1} + ... + c_k h_{r-k}).
std::vector<Polynomial> truncated_inverse_series(int k, int max_r);

/// All monomials of weighted degree r, descending in the grading's order.
std::vector<Monomial> monomials_of_degree(const Grading& grading, int r);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace grassmann
