#include "grassmann/linalg.hpp"

#include <stdexcept>

namespace grassmann {

Index rank(const RowMatrix<Rational>& a) { return reduced_row_echelon(a).rank(); }

Integer determinant(const Matrix<Integer>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = input.rows();
  if (n == 0) return 1;
  Matrix<Integer> a = input;
  int sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> invariant_factors(Matrix<Integer> a) {
  const Index m = a.rows(), n = a.cols();
  std::vector<Integer> diag;
  for (Index t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    a.row(pi).swap(a.row(t));
    a.col(pj).swap(a.col(t));
    for (;;) {
      bool dirty = false;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (Index j = t; j < n; ++j)
          if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          a.row(i).swap(a.row(t));
          dirty = true;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (Index i = t; i < m; ++i)
          if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          dirty = true;
        }
      }
      if (dirty) continue;
      // Row and column t are clear; enforce divisibility of the remainder.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Index j = t; j < n; ++j) a(t, j) += a(bad, j);
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

}  // namespace grassmann
