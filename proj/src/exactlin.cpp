#include "cutpoly/exactlin.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cutpoly {

namespace {

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

bool fits_int64(__int128 v) { return v >= kInt64Min && v <= kInt64Max; }

// Fraction-free elimination on 64-bit entries. Intermediate products are taken
// in 128 bits; the exact quotients are minors of the input and are checked to
// fit back into 64 bits.
std::size_t bareiss_rank_int64(std::vector<std::int64_t> a, std::size_t nrows, std::size_t ncols) {
  std::size_t r = 0;
  std::int64_t prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * ncols + j]; };
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && at(piv, c) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < ncols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::int64_t p = at(r, c);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const std::int64_t f = at(i, c);
      for (std::size_t j = c + 1; j < ncols; ++j) {
        const __int128 v = (static_cast<__int128>(p) * at(i, j) - static_cast<__int128>(f) * at(r, j)) / prev;
        if (!fits_int64(v)) throw OverflowError("bareiss_rank_int64");
        at(i, j) = static_cast<std::int64_t>(v);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t bareiss_rank_big(std::vector<BigInt> a, std::size_t nrows, std::size_t ncols) {
  std::size_t r = 0;
  BigInt prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * ncols + j]; };
  BigInt t;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == nrows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < ncols; ++j) std::swap(at(piv, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t nrows = m.rows.size();
  for (std::size_t c = 0; c < m.cols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && sgn(m.rows[piv][c]) == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m.rows[piv], m.rows[r]);
    const Rational inv = 1 / m.rows[r][c];
    for (std::size_t j = c; j < m.cols; ++j) m.rows[r][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || sgn(m.rows[i][c]) == 0) continue;
      const Rational f = m.rows[i][c];
      for (std::size_t j = c; j < m.cols; ++j) m.rows[i][j] -= f * m.rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QMatrix::QMatrix(std::size_t nrows, std::size_t ncols)
    : cols(ncols), rows(nrows, QVector(ncols)) {}

void QMatrix::append_row(QVector row) {
  if (row.size() != cols) throw std::invalid_argument("QMatrix row length mismatch");
  rows.push_back(std::move(row));
}

IntMatrix::IntMatrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows), cols_(ncols), data_(nrows * ncols, 0) {}

void IntMatrix::append_row(std::span<const std::int64_t> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("IntMatrix row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::select_rows(std::span<const std::uint32_t> ids) const {
  IntMatrix out(ids.size(), cols_);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto src = row(ids[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> ids) const {
  IntMatrix out(rows_, ids.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) out(i, j) = (*this)(i, ids[j]);
  return out;
}

QMatrix to_qmatrix(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q.rows[i][j] = Rational(static_cast<long>(m(i, j)));
  return q;
}

std::size_t rank(const QMatrix& m) {
  QMatrix copy = m;
  return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<std::int64_t> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    a.insert(a.end(), r.begin(), r.end());
  }
  try {
    return bareiss_rank_int64(std::move(a), m.rows(), m.cols());
  } catch (const OverflowError&) {
    std::vector<BigInt> b(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b[i * m.cols() + j] = static_cast<long>(m(i, j));
    return bareiss_rank_big(std::move(b), m.rows(), m.cols());
  }
}

std::size_t affine_rank(const QMatrix& points) {
  if (points.rows.empty()) throw std::invalid_argument("affine_rank of an empty point set");
  QMatrix diff(points.rows.size() - 1, points.cols);
  for (std::size_t i = 1; i < points.rows.size(); ++i)
    for (std::size_t j = 0; j < points.cols; ++j)
      diff.rows[i - 1][j] = points.rows[i][j] - points.rows[0][j];
  return rank(diff) + 1;
}

QMatrix nullspace(const QMatrix& m) {
  QMatrix e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  QMatrix basis;
  basis.cols = m.cols;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.rows[r][free];
    basis.rows.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> primitive_big_vector(const QVector& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
  make_primitive(std::span<BigInt>(ints));
  return ints;
}

std::vector<std::int64_t> primitive_integer_vector(const QVector& v) {
  const auto ints = primitive_big_vector(v);
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!ints[i].fits_slong_p()) throw OverflowError("primitive_integer_vector: entry exceeds 64 bits");
    out[i] = ints[i].get_si();
  }
  return out;
}

std::vector<std::vector<std::int64_t>> integer_nullspace(const IntMatrix& m) {
  const QMatrix basis = nullspace(to_qmatrix(m));
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(basis.rows.size());
  for (const auto& row : basis.rows) out.push_back(primitive_integer_vector(row));
  return out;
}

void make_primitive(std::span<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

void make_primitive(std::span<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (!fits_int64(s)) throw OverflowError("dot product exceeds 64 bits");
  return static_cast<std::int64_t>(s);
}

bool RowBasis::add(std::span<const std::int64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("RowBasis row length mismatch");
  bool any = false;
  for (auto x : row) any = any || x != 0;
  if (!any) return false;
  QVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = static_cast<long>(row[j]);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (sgn(v[c]) == 0) continue;
    const Rational f = v[c];
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
  }
  std::size_t lead = 0;
  while (lead < cols_ && sgn(v[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  const Rational inv = 1 / v[lead];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

std::vector<std::size_t> RowBasis::pivot_columns() const {
  auto p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::size_t rank_of_rows(const IntMatrix& m, std::span<const std::uint32_t> ids, std::size_t target) {
  RowBasis b(m.cols());
  for (auto i : ids) {
    b.add(m.row(i));
    if (b.rank() >= target || b.rank() == m.cols()) break;
  }
  return b.rank();
}

}  // namespace cutpoly
