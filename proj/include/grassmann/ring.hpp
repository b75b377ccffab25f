#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "grassmann/linalg.hpp"
#include "grassmann/poly.hpp"

namespace grassmann {

/// Thrown for parameters outside 1 <= k < n, n >= 2. The message names the
/// violated inequality.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters (n, k) of G_{n,k}. make() normalizes to 1 <= k <= n/2.
struct RingSpec {
  int n = 2;
  int k = 1;
  /// Set when the caller asked for (n, n-k) and the spec was flipped.
  bool dualized = false;

  static RingSpec make(int n, int k);
  /// Validated but not normalized: the presentation with k generators even
  /// when k > n/2. Used where maps fix the generator count (i*, j*).
  static RingSpec presentation(int n, int k);

  bool normalized() const { return 2 * k <= n; }

  int complex_dimension() const { return k * (n - k); }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.n == b.n && a.k == b.k;
  }
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  bool fits(int rows, int cols) const;
};

/// Partitions of r with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int r, int rows, int cols);

/// Coefficients of the Gaussian binomial [n choose k]_q, degrees 0..k(n-k).
std::vector<Integer> gaussian_binomial(int n, int k);

/// One graded piece of a quotient Q[c]/I. Columns are the monomials of the
/// degree in descending order; the basis is the set of standard monomials
/// (non-pivot columns after reducing the ideal slice), and row i of
/// `reduction` expresses monomials[i] in that basis.
struct DegreeSlice {
  std::vector<Monomial> monomials;
  std::vector<Index> basis;
  Matrix<Rational> reduction;
  /// True when the slice was reduced with unimodular integer row operations
  /// only, which certifies the integral quotient is free in this degree.
  bool unit_pivots = false;
};

/// Integer matrix of the degree-r slice of the ideal: one row per m * h,
/// m a monomial of complementary degree and h a relation.
RowMatrix<Integer> ideal_slice_matrix(const Grading& grading, std::span<const Polynomial> relations,
                                      int r);

/// Reduces the degree-r slice of the ideal generated by `relations`.
DegreeSlice reduce_ideal_slice(const Grading& grading, std::span<const Polynomial> relations, int r);

/// Cohomology ring H*(G_{n,k}) = Z[c_1..c_k] / (h_{n-k+1}, ..., h_n), with
/// per-degree bases and reduction maps for degrees 0..k(n-k). Immutable.
class RingTable {
 public:
  RingTable(RingSpec spec, std::vector<Polynomial> relations, std::vector<DegreeSlice> slices);

  const RingSpec& spec() const { return spec_; }
  int dimension() const { return spec_.complex_dimension(); }
  const GradingPtr& grading() const { return grading_; }
  int num_generators() const { return spec_.k; }
  const std::vector<Polynomial>& relations() const { return relations_; }

  const DegreeSlice& slice(int r) const { return slices_.at(static_cast<std::size_t>(r)); }
  const std::vector<DegreeSlice>& slices() const { return slices_; }

  /// Rank of H^{2r}; zero outside [0, d].
  int betti(int r) const;

  const Monomial& basis_monomial(int r, Index j) const {
    const auto& s = slice(r);
    return s.monomials[static_cast<std::size_t>(s.basis[static_cast<std::size_t>(j)])];
  }
  /// Row of the reduction matrix for a monomial of degree r, or -1.
  Index monomial_row(int r, const Monomial& m) const;

 private:
  RingSpec spec_;
  GradingPtr grading_;
  std::vector<Polynomial> relations_;
  std::vector<DegreeSlice> slices_;
  std::vector<std::unordered_map<Monomial, Index, MonomialHash>> rows_;
};

using RingPtr = std::shared_ptr<const RingTable>;

RingPtr build_ring(const RingSpec& spec);

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Polynomial& c) { return c.is_zero(); }
}  // namespace detail

/// Element of a RingTable's ring, stored as per-degree coordinates in the
/// standard-monomial basis. Coeff is Rational, or Polynomial when the
/// coordinates are symbolic in hom-system unknowns.
template <typename Coeff>
class GradedElement {
 public:
  GradedElement() = default;
  explicit GradedElement(RingPtr ring) : ring_(std::move(ring)) {
    coords_.resize(static_cast<std::size_t>(ring_->dimension() + 1));
    for (int r = 0; r <= ring_->dimension(); ++r)
      coords_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(ring_->betti(r)), Coeff{});
  }

  const RingPtr& ring() const { return ring_; }
  const RingTable& table() const { return *ring_; }

  std::vector<Coeff>& coords(int r) { return coords_.at(static_cast<std::size_t>(r)); }
  const std::vector<Coeff>& coords(int r) const { return coords_.at(static_cast<std::size_t>(r)); }
  int top_degree() const { return static_cast<int>(coords_.size()) - 1; }

  bool is_zero() const {
    for (const auto& v : coords_)
      for (const auto& c : v)
        if (!detail::coeff_is_zero(c)) return false;
    return true;
  }
  bool is_zero_in_degree(int r) const {
    for (const auto& c : coords(r))
      if (!detail::coeff_is_zero(c)) return false;
    return true;
  }
  /// Degree of the unique nonzero component; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (int r = 0; r <= top_degree(); ++r) {
      if (is_zero_in_degree(r)) continue;
      if (deg) return std::nullopt;
      deg = r;
    }
    return deg;
  }
  GradedElement component(int r) const {
    GradedElement out(ring_);
    out.coords(r) = coords(r);
    return out;
  }

  GradedElement& operator+=(const GradedElement& other) {
    check_same_ring(other);
    for (std::size_t r = 0; r < coords_.size(); ++r)
      for (std::size_t i = 0; i < coords_[r].size(); ++i) coords_[r][i] += other.coords_[r][i];
    return *this;
  }
  GradedElement& operator-=(const GradedElement& other) {
    check_same_ring(other);
    for (std::size_t r = 0; r < coords_.size(); ++r)
      for (std::size_t i = 0; i < coords_[r].size(); ++i) coords_[r][i] -= other.coords_[r][i];
    return *this;
  }
  GradedElement& operator*=(const Rational& s) {
    for (auto& v : coords_)
      for (auto& c : v) c *= s;
    return *this;
  }

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const Rational& s) { return a *= s; }

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && a.ring_->spec() == b.ring_->spec()))
      return false;
    for (std::size_t r = 0; r < a.coords_.size(); ++r)
      for (std::size_t i = 0; i < a.coords_[r].size(); ++i)
        if (!(a.coords_[r][i] == b.coords_[r][i])) return false;
    return true;
  }

  void check_same_ring(const GradedElement& other) const {
    if (ring_ != other.ring_ && !(ring_ && other.ring_ && ring_->spec() == other.ring_->spec()))
      throw std::invalid_argument("ring element: operands live in different rings");
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<Coeff>> coords_;
};

using RingElement = GradedElement<Rational>;

/// Ring product through the reduction tables.
template <typename Coeff>
GradedElement<Coeff> operator*(const GradedElement<Coeff>& a, const GradedElement<Coeff>& b) {
  a.check_same_ring(b);
  const RingTable& ring = a.table();
  GradedElement<Coeff> out(a.ring());
  const int d = ring.dimension();
  for (int s = 0; s <= d; ++s) {
    const auto& ca = a.coords(s);
    for (int t = 0; s + t <= d; ++t) {
      const auto& cb = b.coords(t);
      auto& target = out.coords(s + t);
      const auto& red = ring.slice(s + t).reduction;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (detail::coeff_is_zero(ca[i])) continue;
        const Monomial& mi = ring.basis_monomial(s, static_cast<Index>(i));
        for (std::size_t j = 0; j < cb.size(); ++j) {
          if (detail::coeff_is_zero(cb[j])) continue;
          const Index row = ring.monomial_row(s + t, mi * ring.basis_monomial(t, static_cast<Index>(j)));
          const Coeff prod = ca[i] * cb[j];
          for (Index col = 0; col < red.cols(); ++col) {
            const Rational& f = red(row, col);
            if (f == 0) continue;
            target[static_cast<std::size_t>(col)] += prod * f;
          }
        }
      }
    }
  }
  return out;
}

template <typename Coeff>
GradedElement<Coeff> pow(const GradedElement<Coeff>& x, unsigned e, const Coeff& one) {
  GradedElement<Coeff> result(x.ring());
  result.coords(0)[0] = one;
  for (unsigned i = 0; i < e; ++i) {
    result = result * x;
    if (result.is_zero()) break;
  }
  return result;
}

RingElement pow(const RingElement& x, unsigned e);

RingElement ring_one(const RingPtr& ring);
RingElement ring_generator(const RingPtr& ring, int i);  // c_i, 1-based
RingElement basis_element(const RingPtr& ring, int r, Index j);

/// Class of p in the quotient. Terms above the top degree vanish.
RingElement normal_form(const RingPtr& ring, const Polynomial& p);

/// Representative polynomial: combination of standard basis monomials.
Polynomial to_polynomial(const RingElement& x);

int betti(const RingTable& ring, int r);

struct FreenessReport {
  bool free = true;
  std::vector<int> ranks;             // per complex degree checked
  std::vector<bool> unit_certified;   // degree certified by unimodular elimination
  std::optional<int> offending_degree;
  std::vector<Integer> offending_factors;
};

/// Certifies that the integral quotient is free in every degree 0..max_degree
/// (invariant factors of each ideal slice all equal to 1).
FreenessReport freeness_check(int k, std::span<const Polynomial> relations, int max_degree);
FreenessReport freeness_check(const RingSpec& spec);

/// dim_Q of the quotient in degrees 0..max_degree.
std::vector<int> hilbert_series(int k, std::span<const Polynomial> relations, int max_degree);

/// True iff the Hilbert series of Q[c_1..c_k]/(relations) equals
/// [n choose k]_q. Degrees d+1..d+k are checked to vanish, which forces all
/// higher degrees to vanish too.
bool hilbert_check(const RingSpec& spec, std::span<const Polynomial> relations);
bool hilbert_check(const RingSpec& spec);

/// The relations h_{n-k+1}, ..., h_n.
std::vector<Polynomial> grassmann_relations(const RingSpec& spec);

/// N = d! 1! 2! ... (k-1)! / ((n-k)! ... (n-1)!); throws if not integral.
Integer top_identity_constant(const RingSpec& spec);

struct TopIdentity {
  Integer N;
  bool verified = false;
  /// Coefficient of c_1^d on the class of c_k^{n-k}.
  Rational c1_power_coefficient;
};

TopIdentity top_identity(const RingPtr& ring);
TopIdentity top_identity(const RingSpec& spec);

/// <a, b> = top coefficient of a*b over the degree-r and degree-(d-r) bases.
Matrix<Integer> pairing_matrix(const RingPtr& ring, int r);

/// Least e >= 1 with x^e = 0. x must be homogeneous of positive degree
/// (or zero, giving 1).
int nilpotency_degree(const RingElement& x);

}  // namespace grassmann
