#include <doctest.h>

#include <random>

#include "cutpoly/exactlin.hpp"

using namespace cutpoly;

namespace {

// Independent rank oracle: rational Gaussian elimination without pivot search
// tricks, used against the Bareiss path.
std::size_t naive_rank(const IntMatrix& m) {
  std::vector<QVector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    QVector r;
    for (auto x : m.row(i)) r.emplace_back(static_cast<long>(x));
    a.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  IntMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1;
  CHECK(rank(m) == 2);
  CHECK(rank(IntMatrix(0, 4)) == 0);
}

TEST_CASE("bareiss rank agrees with naive elimination on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? 0 : val(rng);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("rank falls back to big integers on overflow") {
  IntMatrix m(3, 3);
  const std::int64_t big = std::int64_t{1} << 62;
  m(0, 0) = big; m(0, 1) = big - 1; m(0, 2) = 3;
  m(1, 0) = big - 5; m(1, 1) = big; m(1, 2) = 7;
  m(2, 0) = 1; m(2, 1) = 2; m(2, 2) = big - 11;
  CHECK(rank(m) == 3);
  IntMatrix d(2, 2);
  d(0, 0) = big; d(0, 1) = big - 1;
  d(1, 0) = big; d(1, 1) = big - 1;
  CHECK(rank(d) == 1);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
    const auto ns = integer_nullspace(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < r; ++i) CHECK(dot(m.row(i), v) == 0);
      std::int64_t g = 0;
      for (auto x : v) g = std::gcd(g, x);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("affine rank") {
  QMatrix pts(3, 2);
  pts.rows[0] = {Rational(0), Rational(0)};
  pts.rows[1] = {Rational(1), Rational(1)};
  pts.rows[2] = {Rational(2), Rational(2)};
  CHECK(affine_rank(pts) == 2);
  pts.rows[2] = {Rational(1), Rational(0)};
  CHECK(affine_rank(pts) == 3);
}

TEST_CASE("primitive integer vector") {
  QVector v{make_rational(1, 2), make_rational(-3, 4), Rational(0)};
  CHECK(primitive_integer_vector(v) == std::vector<std::int64_t>{2, -3, 0});
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("dot product overflow is detected") {
  std::vector<std::int64_t> a{std::int64_t{1} << 62, std::int64_t{1} << 62};
  std::vector<std::int64_t> b{2, 2};
  CHECK_THROWS_AS(dot(a, b), OverflowError);
}
