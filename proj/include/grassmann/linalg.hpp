#pragma once

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace grassmann {

using Integer = mpz_class;
using Rational = mpq_class;
using Index = Eigen::Index;
using Int128 = __int128;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Row echelon data: `rows` holds only the nonzero rows, and pivots[i] is the
/// leading column of row i. Pivot entries are 1 and pivot columns are
/// otherwise zero (fully reduced).
template <typename Scalar>
struct Echelon {
  RowMatrix<Scalar> rows;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(Int128 v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

inline bool abs_less(std::int64_t a, std::int64_t b) {
  // Both nonzero; unsigned magnitude avoids overflow on INT64_MIN.
  auto mag = [](std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
                 : static_cast<std::uint64_t>(v);
  };
  return mag(a) < mag(b);
}
inline bool abs_less(Int128 a, Int128 b) {
  // |INT128_MIN| never occurs: negate() reports it as overflow first.
  return (a < 0 ? -a : a) < (b < 0 ? -b : b);
}
inline bool abs_less(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

/// target -= f * source; false on overflow.
inline bool sub_mul(std::int64_t& target, std::int64_t f, std::int64_t source) {
  std::int64_t prod;
  if (__builtin_mul_overflow(f, source, &prod)) return false;
  return !__builtin_sub_overflow(target, prod, &target);
}
inline bool sub_mul(Int128& target, Int128 f, Int128 source) {
  Int128 prod;
  if (__builtin_mul_overflow(f, source, &prod)) return false;
  return !__builtin_sub_overflow(target, prod, &target);
}
inline bool sub_mul(Integer& target, const Integer& f, const Integer& source) {
  mpz_submul(target.get_mpz_t(), f.get_mpz_t(), source.get_mpz_t());
  return true;
}

inline bool negate(std::int64_t& v) { return !__builtin_sub_overflow(0, v, &v); }
inline bool negate(Int128& v) { return !__builtin_sub_overflow(Int128{0}, v, &v); }
inline bool negate(Integer& v) {
  v = -v;
  return true;
}

inline std::int64_t trunc_quotient(std::int64_t a, std::int64_t b) { return a / b; }
inline Int128 trunc_quotient(Int128 a, Int128 b) { return a / b; }
inline Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <typename Scalar>
std::vector<Index> nonzero_columns(const RowMatrix<Scalar>& a, Index row, Index from) {
  std::vector<Index> cols;
  for (Index j = from; j < a.cols(); ++j)
    if (a(row, j) != 0) cols.push_back(j);
  return cols;
}

}  // namespace detail

/// Reduced row echelon form over a field (Rational). Columns are processed
/// left to right, so each pivot is the leftmost nonzero entry of its row.
template <typename Scalar>
Echelon<Scalar> reduced_row_echelon(RowMatrix<Scalar> a) {
  const Index m = a.rows(), n = a.cols();
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index p = row;
    while (p < m && a(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < n; ++j)
      if (a(row, j) != 0) a(row, j) *= inv;
    const auto nz = detail::nonzero_columns(a, row, col);
    for (Index i = 0; i < m; ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Index j : nz) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  Echelon<Scalar> out;
  out.rows = a.topRows(row);
  out.pivots = std::move(pivots);
  return out;
}

enum class UnitEchelonStatus { ok, non_unit_pivot, overflow };

template <typename Scalar>
struct UnitEchelon {
  UnitEchelonStatus status = UnitEchelonStatus::ok;
  Echelon<Scalar> echelon;
  Index failed_column = -1;
};

/// Integer row reduction to reduced echelon form using only unimodular row
/// operations: a forward pass, then back substitution.
/// Where no row carries a unit in the current column, a Euclidean pass over
/// the column tries to produce one. Success certifies that the row lattice
/// has an echelon basis with unit pivots, i.e. Z^n / rowspan is free of rank
/// n - rank. Works for std::int64_t (overflow-checked) and Integer.
template <typename Scalar>
UnitEchelon<Scalar> unit_pivot_echelon(RowMatrix<Scalar> a) {
  UnitEchelon<Scalar> result;
  const Index m = a.rows(), n = a.cols();
  std::vector<Index> pivots;
  Index row = 0;
  auto fail = [&](UnitEchelonStatus s, Index col) {
    result.status = s;
    result.failed_column = col;
    return result;
  };
  for (Index col = 0; col < n && row < m; ++col) {
    Index p = -1;
    for (;;) {
      Index smallest = -1;
      int nonzero = 0;
      p = -1;
      for (Index i = row; i < m; ++i) {
        if (a(i, col) == 0) continue;
        ++nonzero;
        if (detail::is_unit(a(i, col))) {
          p = i;
          break;
        }
        if (smallest < 0 || detail::abs_less(a(i, col), a(smallest, col))) smallest = i;
      }
      if (p >= 0 || nonzero == 0) break;
      if (nonzero == 1) return fail(UnitEchelonStatus::non_unit_pivot, col);
      const auto nz = detail::nonzero_columns(a, smallest, col);
      for (Index i = row; i < m; ++i) {
        if (i == smallest || a(i, col) == 0) continue;
        const Scalar q = detail::trunc_quotient(a(i, col), a(smallest, col));
        for (Index j : nz)
          if (!detail::sub_mul(a(i, j), q, a(smallest, j)))
            return fail(UnitEchelonStatus::overflow, col);
      }
    }
    if (p < 0) continue;
    if (p != row) a.row(p).swap(a.row(row));
    if (a(row, col) != 1) {
      for (Index j = col; j < n; ++j)
        if (a(row, j) != 0 && !detail::negate(a(row, j)))
          return fail(UnitEchelonStatus::overflow, col);
    }
    const auto nz = detail::nonzero_columns(a, row, col);
    for (Index i = row + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Index j : nz)
        if (!detail::sub_mul(a(i, j), f, a(row, j))) return fail(UnitEchelonStatus::overflow, col);
    }
    pivots.push_back(col);
    ++row;
  }
  // Back substitution, bottom pivot first.
  for (Index r = row - 1; r > 0; --r) {
    const Index col = pivots[static_cast<std::size_t>(r)];
    const auto nz = detail::nonzero_columns(a, r, col);
    for (Index i = 0; i < r; ++i) {
      if (a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Index j : nz)
        if (!detail::sub_mul(a(i, j), f, a(r, j))) return fail(UnitEchelonStatus::overflow, col);
    }
  }
  result.echelon.rows = a.topRows(row);
  result.echelon.pivots = std::move(pivots);
  return result;
}

template <typename Dst, typename Src>
RowMatrix<Dst> exact_cast(const RowMatrix<Src>& a) {
  RowMatrix<Dst> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Dst(a(i, j));
  return out;
}

template <>
inline RowMatrix<Integer> exact_cast<Integer, std::int64_t>(const RowMatrix<std::int64_t>& a) {
  RowMatrix<Integer> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Integer(static_cast<long>(a(i, j)));
  return out;
}

template <>
inline RowMatrix<Rational> exact_cast<Rational, std::int64_t>(const RowMatrix<std::int64_t>& a) {
  RowMatrix<Rational> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(static_cast<long>(a(i, j)));
  return out;
}

/// Rank over Q.
Index rank(const RowMatrix<Rational>& a);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const Matrix<Integer>& a);

/// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form,
/// all positive.
std::vector<Integer> invariant_factors(Matrix<Integer> a);

}  // namespace grassmann
