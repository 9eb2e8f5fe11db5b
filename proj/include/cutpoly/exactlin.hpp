#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace cutpoly {

using BigInt = mpz_class;

// mpq_class keeps values reduced with a positive denominator as long as every
// construction from a raw numerator/denominator pair goes through make_rational.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational make_rational(const BigInt& num, const BigInt& den);

struct QMatrix {
  std::size_t cols = 0;
  std::vector<QVector> rows;

  QMatrix() = default;
  QMatrix(std::size_t nrows, std::size_t ncols);

  std::size_t num_rows() const { return rows.size(); }
  void append_row(QVector row);
};

// Dense row-major matrix of 64-bit integers. This is the working format of the
// enumeration kernels; generators and inequalities of cut polytopes are small.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t nrows, std::size_t ncols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(std::span<const std::int64_t> r);
  IntMatrix select_rows(std::span<const std::uint32_t> ids) const;
  IntMatrix select_cols(std::span<const std::size_t> ids) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

QMatrix to_qmatrix(const IntMatrix& m);

/// Linear rank over the rationals.
std::size_t rank(const QMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Number of affinely independent rows (rank of differences to the first row, plus one).
std::size_t affine_rank(const QMatrix& points);

/// Basis of {x : m x = 0}, one vector per row of the result.
QMatrix nullspace(const QMatrix& m);

/// Nullspace basis scaled to primitive integer vectors.
std::vector<std::vector<std::int64_t>> integer_nullspace(const IntMatrix& m);

/// Divides by the gcd of the entries; the zero vector is left alone.
void make_primitive(std::span<std::int64_t> v);
void make_primitive(std::span<BigInt> v);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Converts a rational vector to the primitive integer vector on the same ray.
std::vector<std::int64_t> primitive_integer_vector(const QVector& v);

/// Same, without the 64-bit restriction.
std::vector<BigInt> primitive_big_vector(const QVector& v);

/// Incrementally grown echelon basis of a row space over the rationals.
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols) : cols_(cols) {}
  /// Returns true if the row was independent of the rows added so far.
  bool add(std::span<const std::int64_t> row);
  std::size_t rank() const { return rows_.size(); }
  /// Leading columns of the echelon rows, ascending.
  std::vector<std::size_t> pivot_columns() const;

 private:
  std::size_t cols_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the rows of m listed in ids, stopping once `target` is reached.
std::size_t rank_of_rows(const IntMatrix& m, std::span<const std::uint32_t> ids, std::size_t target = SIZE_MAX);

}  // namespace cutpoly
