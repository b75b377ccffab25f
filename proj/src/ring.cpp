#include "grassmann/ring.hpp"

#include <algorithm>
#include <limits>

namespace grassmann {

RingSpec RingSpec::presentation(int n, int k) {
  if (n < 2) throw InvalidSpec("n >= 2 violated (n = " + std::to_string(n) + ")");
  if (k < 1) throw InvalidSpec("k >= 1 violated (k = " + std::to_string(k) + ")");
  if (k >= n)
    throw InvalidSpec("k < n violated (n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                      ")");
  RingSpec spec;
  spec.n = n;
  spec.k = k;
  return spec;
}

RingSpec RingSpec::make(int n, int k) {
  RingSpec spec = presentation(n, k);
  if (2 * k > n) {
    spec.k = n - k;
    spec.dualized = true;
  }
  return spec;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::fits(int rows, int cols) const {
  if (static_cast<int>(parts.size()) > rows) return false;
  return parts.empty() || parts.front() <= cols;
}

namespace {

void enumerate_partitions(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_partitions(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int r, int rows, int cols) {
  std::vector<Partition> out;
  if (r < 0) return out;
  std::vector<int> cur;
  enumerate_partitions(r, cols, rows, cur, out);
  return out;
}

std::vector<Integer> gaussian_binomial(int n, int k) {
  // Multiply out the numerator prod (1 - q^{n-k+i}), then divide exactly by
  // each (1 - q^i).
  std::vector<Integer> poly{1};
  for (int i = 1; i <= k; ++i) {
    const int e = n - k + i;
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + static_cast<std::size_t>(e)] -= poly[j];
    }
    poly = std::move(next);
  }
  for (int i = 1; i <= k; ++i) {
    // poly / (1 - q^i): q_j = p_j + q_{j-i}.
    const std::size_t step = static_cast<std::size_t>(i);
    std::vector<Integer> quot(poly.size() - step, 0);
    for (std::size_t j = 0; j < quot.size(); ++j) {
      quot[j] = poly[j];
      if (j >= step) quot[j] += quot[j - step];
    }
    // Remainder check: the top i coefficients must be consistent.
    for (std::size_t j = quot.size(); j < poly.size(); ++j) {
      Integer rem = poly[j];
      if (j >= step && j - step < quot.size()) rem += quot[j - step];
      if (rem != 0) throw std::logic_error("gaussian_binomial: inexact division");
    }
    poly = std::move(quot);
  }
  poly.resize(static_cast<std::size_t>(k * (n - k) + 1));
  return poly;
}

namespace {

struct SliceRows {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, Index, MonomialHash> column;
  std::vector<std::vector<std::pair<Index, Rational>>> rows;
};

SliceRows collect_slice(const Grading& grading, std::span<const Polynomial> relations, int r) {
  SliceRows s;
  s.monomials = monomials_of_degree(grading, r);
  for (std::size_t i = 0; i < s.monomials.size(); ++i)
    s.column.emplace(s.monomials[i], static_cast<Index>(i));
  for (const auto& h : relations) {
    if (h.is_zero()) continue;
    const auto deg = h.homogeneous_degree();
    if (!deg) throw std::invalid_argument("ideal slice: relation is not homogeneous");
    if (*deg > r) continue;
    for (const auto& m : monomials_of_degree(grading, r - *deg)) {
      std::vector<std::pair<Index, Rational>> row;
      row.reserve(h.size());
      for (const auto& t : h.terms()) row.emplace_back(s.column.at(t.monomial * m), t.coeff);
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

bool rows_fit_int64(const SliceRows& s) {
  for (const auto& row : s.rows)
    for (const auto& [c, v] : row)
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return false;
  return true;
}

template <typename Scalar>
DegreeSlice slice_from_echelon(std::vector<Monomial> monomials, const Echelon<Scalar>& ech,
                               bool unit) {
  DegreeSlice out;
  const Index ncols = static_cast<Index>(monomials.size());
  std::vector<Index> pivot_row(static_cast<std::size_t>(ncols), -1);
  for (Index i = 0; i < ech.rank(); ++i) pivot_row[static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(i)])] = i;
  for (Index c = 0; c < ncols; ++c)
    if (pivot_row[static_cast<std::size_t>(c)] < 0) out.basis.push_back(c);
  const Index nb = static_cast<Index>(out.basis.size());
  out.reduction = Matrix<Rational>::Zero(ncols, nb);
  for (Index t = 0; t < nb; ++t) out.reduction(out.basis[static_cast<std::size_t>(t)], t) = 1;
  for (Index c = 0; c < ncols; ++c) {
    const Index i = pivot_row[static_cast<std::size_t>(c)];
    if (i < 0) continue;
    for (Index t = 0; t < nb; ++t) {
      const auto& v = ech.rows(i, out.basis[static_cast<std::size_t>(t)]);
      if (v != 0) out.reduction(c, t) = -Rational(v);
    }
  }
  out.monomials = std::move(monomials);
  out.unit_pivots = unit;
  return out;
}

template <>
DegreeSlice slice_from_echelon<std::int64_t>(std::vector<Monomial> monomials,
                                             const Echelon<std::int64_t>& ech, bool unit) {
  Echelon<Integer> wide;
  wide.rows = exact_cast<Integer>(ech.rows);
  wide.pivots = ech.pivots;
  return slice_from_echelon(std::move(monomials), wide, unit);
}

template <typename Scalar>
RowMatrix<Scalar> dense_rows(const SliceRows& s) {
  RowMatrix<Scalar> a = RowMatrix<Scalar>::Zero(static_cast<Index>(s.rows.size()),
                                                static_cast<Index>(s.monomials.size()));
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (const auto& [c, v] : s.rows[i]) {
      if constexpr (std::is_same_v<Scalar, std::int64_t>)
        a(static_cast<Index>(i), c) = v.get_num().get_si();
      else if constexpr (std::is_same_v<Scalar, Integer>)
        a(static_cast<Index>(i), c) = v.get_num();
      else
        a(static_cast<Index>(i), c) = v;
    }
  return a;
}

}  // namespace

RowMatrix<Integer> ideal_slice_matrix(const Grading& grading, std::span<const Polynomial> relations,
                                      int r) {
  const SliceRows s = collect_slice(grading, relations, r);
  for (const auto& row : s.rows)
    for (const auto& [c, v] : row)
      if (v.get_den() != 1)
        throw std::invalid_argument("ideal_slice_matrix: relation has non-integer coefficients");
  return dense_rows<Integer>(s);
}

DegreeSlice reduce_ideal_slice(const Grading& grading, std::span<const Polynomial> relations,
                               int r) {
  SliceRows s = collect_slice(grading, relations, r);
  const bool integral = std::all_of(s.rows.begin(), s.rows.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const auto& e) { return e.second.get_den() == 1; });
  });
  if (integral) {
    // Non-unit pivots are a property of the lattice, so only an int64
    // overflow is worth retrying with wide integers.
    bool retry_wide = true;
    if (rows_fit_int64(s)) {
      auto fast = unit_pivot_echelon(dense_rows<std::int64_t>(s));
      if (fast.status == UnitEchelonStatus::ok)
        return slice_from_echelon(std::move(s.monomials), fast.echelon, true);
      retry_wide = fast.status == UnitEchelonStatus::overflow;
    }
    if (retry_wide) {
      auto wide = unit_pivot_echelon(dense_rows<Integer>(s));
      if (wide.status == UnitEchelonStatus::ok)
        return slice_from_echelon(std::move(s.monomials), wide.echelon, true);
    }
  }
  const auto ech = reduced_row_echelon(dense_rows<Rational>(s));
  return slice_from_echelon(std::move(s.monomials), ech, false);
}

RingTable::RingTable(RingSpec spec, std::vector<Polynomial> relations,
                     std::vector<DegreeSlice> slices)
    : spec_(spec),
      grading_(Grading::chern(spec.k)),
      relations_(std::move(relations)),
      slices_(std::move(slices)) {
  if (static_cast<int>(slices_.size()) != spec_.complex_dimension() + 1)
    throw std::invalid_argument("ring table: expected one slice per degree 0..d");
  rows_.resize(slices_.size());
  for (std::size_t r = 0; r < slices_.size(); ++r) {
    const auto& s = slices_[r];
    if (s.reduction.rows() != static_cast<Index>(s.monomials.size()) ||
        s.reduction.cols() != static_cast<Index>(s.basis.size()))
      throw std::invalid_argument("ring table: reduction matrix shape mismatch in degree " +
                                  std::to_string(r));
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
      rows_[r].emplace(s.monomials[i], static_cast<Index>(i));
  }
}

int RingTable::betti(int r) const {
  if (r < 0 || r > dimension()) return 0;
  return static_cast<int>(slice(r).basis.size());
}

Index RingTable::monomial_row(int r, const Monomial& m) const {
  if (r < 0 || r > dimension()) return -1;
  const auto& map = rows_[static_cast<std::size_t>(r)];
  auto it = map.find(m);
  return it == map.end() ? -1 : it->second;
}

std::vector<Polynomial> grassmann_relations(const RingSpec& spec) {
  auto h = truncated_inverse_series(spec.k, spec.n);
  return {h.begin() + (spec.n - spec.k + 1), h.end()};
}

RingPtr build_ring(const RingSpec& spec) {
  auto relations = grassmann_relations(spec);
  const GradingPtr g = Grading::chern(spec.k);
  const int d = spec.complex_dimension();
  const auto expected = gaussian_binomial(spec.n, spec.k);
  std::vector<DegreeSlice> slices;
  slices.reserve(static_cast<std::size_t>(d + 1));
  for (int r = 0; r <= d; ++r) {
    slices.push_back(reduce_ideal_slice(*g, relations, r));
    if (Integer(static_cast<long>(slices.back().basis.size())) != expected[static_cast<std::size_t>(r)])
      throw std::logic_error("build_ring: rank in degree " + std::to_string(r) +
                             " disagrees with the box-partition count");
  }
  Monomial top(static_cast<std::size_t>(spec.k));
  top[static_cast<std::size_t>(spec.k - 1)] = spec.n - spec.k;
  const auto& last = slices.back();
  if (last.monomials[static_cast<std::size_t>(last.basis.front())] != top)
    throw std::logic_error("build_ring: top basis element is not c_k^{n-k}");
  return std::make_shared<const RingTable>(spec, std::move(relations), std::move(slices));
}

RingElement ring_one(const RingPtr& ring) {
  RingElement x(ring);
  x.coords(0)[0] = 1;
  return x;
}

RingElement ring_generator(const RingPtr& ring, int i) {
  if (i < 1 || i > ring->num_generators())
    throw std::out_of_range("ring_generator: c_" + std::to_string(i) + " does not exist");
  return normal_form(ring, Polynomial::variable(ring->grading(), static_cast<std::size_t>(i - 1)));
}

RingElement basis_element(const RingPtr& ring, int r, Index j) {
  RingElement x(ring);
  x.coords(r).at(static_cast<std::size_t>(j)) = 1;
  return x;
}

RingElement normal_form(const RingPtr& ring, const Polynomial& p) {
  RingElement out(ring);
  if (p.is_zero()) return out;
  if (!(*p.grading() == *ring->grading()))
    throw std::invalid_argument("normal_form: polynomial is not over c1..c" +
                                std::to_string(ring->num_generators()));
  const Grading& g = *ring->grading();
  for (const auto& t : p.terms()) {
    const int r = g.degree(t.monomial);
    if (r > ring->dimension()) continue;
    const Index row = ring->monomial_row(r, t.monomial);
    const auto& red = ring->slice(r).reduction;
    auto& target = out.coords(r);
    for (Index c = 0; c < red.cols(); ++c)
      if (red(row, c) != 0) target[static_cast<std::size_t>(c)] += t.coeff * red(row, c);
  }
  return out;
}

Polynomial to_polynomial(const RingElement& x) {
  const RingTable& ring = x.table();
  std::vector<Term> terms;
  for (int r = 0; r <= ring.dimension(); ++r) {
    const auto& c = x.coords(r);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) terms.push_back({ring.basis_monomial(r, static_cast<Index>(j)), c[j]});
  }
  return Polynomial::from_terms(ring.grading(), std::move(terms));
}

RingElement pow(const RingElement& x, unsigned e) { return pow(x, e, Rational(1)); }

int betti(const RingTable& ring, int r) { return ring.betti(r); }

FreenessReport freeness_check(int k, std::span<const Polynomial> relations, int max_degree) {
  const GradingPtr g = Grading::chern(k);
  FreenessReport report;
  for (int r = 0; r <= max_degree; ++r) {
    const auto slice = reduce_ideal_slice(*g, relations, r);
    report.ranks.push_back(static_cast<int>(slice.basis.size()));
    report.unit_certified.push_back(slice.unit_pivots);
    if (slice.unit_pivots) continue;
    const auto factors = invariant_factors(ideal_slice_matrix(*g, relations, r));
    std::vector<Integer> bad;
    for (const auto& f : factors)
      if (f != 1) bad.push_back(f);
    if (!bad.empty()) {
      report.free = false;
      report.offending_degree = r;
      report.offending_factors = std::move(bad);
      break;
    }
  }
  return report;
}

FreenessReport freeness_check(const RingSpec& spec) {
  const auto relations = grassmann_relations(spec);
  return freeness_check(spec.k, relations, spec.complex_dimension() + spec.k);
}

std::vector<int> hilbert_series(int k, std::span<const Polynomial> relations, int max_degree) {
  const GradingPtr g = Grading::chern(k);
  std::vector<int> series;
  for (int r = 0; r <= max_degree; ++r)
    series.push_back(static_cast<int>(reduce_ideal_slice(*g, relations, r).basis.size()));
  return series;
}

bool hilbert_check(const RingSpec& spec, std::span<const Polynomial> relations) {
  const int d = spec.complex_dimension();
  const auto series = hilbert_series(spec.k, relations, d + spec.k);
  const auto expected = gaussian_binomial(spec.n, spec.k);
  for (int r = 0; r <= d + spec.k; ++r) {
    const Integer want = r <= d ? expected[static_cast<std::size_t>(r)] : Integer(0);
    if (Integer(series[static_cast<std::size_t>(r)]) != want) return false;
  }
  return true;
}

bool hilbert_check(const RingSpec& spec) {
  const auto relations = grassmann_relations(spec);
  return hilbert_check(spec, relations);
}

Integer top_identity_constant(const RingSpec& spec) {
  auto factorial = [](int m) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
  };
  const int n = spec.n, k = spec.k;
  Integer num = factorial(k * (n - k));
  for (int i = 1; i <= k - 1; ++i) num *= factorial(i);
  Integer den = 1;
  for (int i = n - k; i <= n - 1; ++i) den *= factorial(i);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("top_identity_constant: N is not an integer for G(" + std::to_string(n) +
                           "," + std::to_string(k) + ")");
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

TopIdentity top_identity(const RingPtr& ring) {
  const RingSpec& spec = ring->spec();
  const int d = ring->dimension();
  TopIdentity result;
  result.N = top_identity_constant(spec);
  const RingElement c1_top = pow(ring_generator(ring, 1), static_cast<unsigned>(d));
  const RingElement ck_top = pow(ring_generator(ring, spec.k), static_cast<unsigned>(spec.n - spec.k));
  result.c1_power_coefficient = c1_top.coords(d).at(0);
  Monomial top(static_cast<std::size_t>(spec.k));
  top[static_cast<std::size_t>(spec.k - 1)] = spec.n - spec.k;
  result.verified = ring->betti(d) == 1 && ring->basis_monomial(d, 0) == top &&
                    ck_top.coords(d)[0] == 1 && c1_top == ck_top * Rational(result.N);
  return result;
}

TopIdentity top_identity(const RingSpec& spec) { return top_identity(build_ring(spec)); }

Matrix<Integer> pairing_matrix(const RingPtr& ring, int r) {
  const int d = ring->dimension();
  if (r < 0 || r > d) throw std::out_of_range("pairing_matrix: degree outside [0, d]");
  const int rows = ring->betti(r), cols = ring->betti(d - r);
  const auto& top = ring->slice(d).reduction;
  Matrix<Integer> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Monomial prod = ring->basis_monomial(r, i) * ring->basis_monomial(d - r, j);
      const Rational& v = top(ring->monomial_row(d, prod), 0);
      if (v.get_den() != 1) throw std::logic_error("pairing_matrix: non-integral pairing value");
      m(i, j) = v.get_num();
    }
  return m;
}

int nilpotency_degree(const RingElement& x) {
  if (x.is_zero()) return 1;
  const auto deg = x.homogeneous_degree();
  if (!deg) throw std::invalid_argument("nilpotency_degree: element is not homogeneous");
  if (*deg == 0) throw std::invalid_argument("nilpotency_degree: degree-0 element is not nilpotent");
  RingElement power = x;
  int e = 1;
  while (!power.is_zero()) {
    power = power * x;
    ++e;
  }
  return e;
}

}  // namespace grassmann
