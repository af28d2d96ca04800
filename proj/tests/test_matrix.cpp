#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zinbiel/matrix.hpp"

using namespace zinbiel;

namespace {

Matrix make(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec> vr;
  for (auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(Scalar(x));
    vr.push_back(v);
  }
  return Matrix::from_rows(vr);
}

Scalar det_laplace(const Matrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar acc = 0;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = m(0, j) * det_laplace(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Independent rank oracle: the largest r with a nonvanishing r x r minor.
int rank_by_minors(const Matrix& m) {
  int maxr = std::min(m.rows(), m.cols());
  for (int r = maxr; r >= 1; --r) {
    std::vector<int> rowsel(r), colsel(r);
    std::vector<bool> rowmask(m.rows(), false), colmask(m.cols(), false);
    std::fill(rowmask.begin(), rowmask.begin() + r, true);
    do {
      std::fill(colmask.begin(), colmask.end(), false);
      std::fill(colmask.begin(), colmask.begin() + r, true);
      do {
        Matrix sub(r, r);
        int ri = 0;
        for (int i = 0; i < m.rows(); ++i) {
          if (!rowmask[i]) continue;
          int ci = 0;
          for (int j = 0; j < m.cols(); ++j)
            if (colmask[j]) sub(ri, ci++) = m(i, j);
          ++ri;
        }
        if (!det_laplace(sub).is_zero()) return r;
      } while (std::prev_permutation(colmask.begin(), colmask.end()));
    } while (std::prev_permutation(rowmask.begin(), rowmask.end()));
  }
  return 0;
}

Matrix random_rational_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  SECTION("identity is its own rref") {
    auto rr = rref(Matrix::identity(2));
    CHECK(rr.matrix == Matrix::identity(2));
    CHECK(rr.pivots == std::vector<int>{0, 1});
  }
  SECTION("rank-1 matrix") {
    auto rr = rref(make({{2, 4}, {1, 2}}));
    CHECK(rr.matrix == make({{1, 2}, {0, 0}}));
    CHECK(rr.pivots == std::vector<int>{0});
  }
  SECTION("rref is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_rational_matrix(4, 6, rng);
      auto rr = rref(m);
      CHECK(rref(rr.matrix).matrix == rr.matrix);
    }
  }
}

TEST_CASE("rank agrees with the minor-expansion oracle on random 5x7 matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_rational_matrix(5, 7, rng);
    CHECK(rank(m) == rank_by_minors(m));
  }
  // and on a matrix engineered to have deficient rank
  Matrix m = random_rational_matrix(5, 7, rng);
  for (int j = 0; j < 7; ++j) {
    m(3, j) = m(0, j) * Scalar(2) - m(1, j);
    m(4, j) = m(2, j) * Scalar(1, 2);
  }
  CHECK(rank(m) == rank_by_minors(m));
  CHECK(rank(m) <= 3);
}

TEST_CASE("kernel") {
  SECTION("zero matrix has full kernel") { CHECK(kernel(Matrix(3, 3)).size() == 3); }
  SECTION("identity has empty kernel") { CHECK(kernel(Matrix::identity(3)).empty()); }
  SECTION("row [1 1 0]") {
    auto k = kernel(make({{1, 1, 0}}));
    REQUIRE(k.size() == 2);
    Subspace s = Subspace::span(3, k);
    CHECK(s.contains(Vec{Scalar(1), Scalar(-1), Scalar(0)}));
  }
  SECTION("rank-nullity on random matrices, and m v = 0 for kernel vectors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_rational_matrix(4, 6, rng);
      auto k = kernel(m);
      CHECK(int(k.size()) + rank(m) == m.cols());
      for (const Vec& v : k) CHECK(is_zero(m.apply(v)));
      CHECK(Subspace::span(6, k).dim() == int(k.size()));  // independence
    }
  }
}

TEST_CASE("solve") {
  SECTION("identity") {
    Vec b{Scalar(3), Scalar(-2)};
    auto x = solve(Matrix::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);
  }
  SECTION("underdetermined") {
    auto x = solve(make({{1, 1}}), Vec{Scalar(2)});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == Scalar(2));
  }
  SECTION("inconsistent") {
    CHECK(!solve(make({{1}, {1}}), Vec{Scalar(0), Scalar(1)}));
  }
  SECTION("random exactness: m x = b") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix m = random_rational_matrix(5, 4, rng);
      Vec x0(4);
      for (auto& s : x0) s = Scalar(int(rng() % 9) - 4);
      Vec b = m.apply(x0);
      auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m.apply(*x) == b);
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_rational_matrix(4, 4, rng);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < 4);
      continue;
    }
    CHECK((*inv) * m == Matrix::identity(4));
  }
  CHECK(!inverse(make({{1, 2}, {2, 4}})));
}

TEST_CASE("subspace lattice") {
  auto e = [](int i) {
    Vec v(3);
    v[i] = 1;
    return v;
  };
  SECTION("span{e1} + span{e2} has dimension 2") {
    auto s = Subspace::span(3, {e(0)}) + Subspace::span(3, {e(1)});
    CHECK(s.dim() == 2);
  }
  SECTION("span{e1, e1+e2} meet span{e2} = span{e2}") {
    Vec e12 = e(0);
    e12[1] = 1;
    auto u = Subspace::span(3, {e(0), e12});
    auto w = Subspace::span(3, {e(1)});
    CHECK(u.intersect(w) == w);
  }
  SECTION("membership") {
    auto s = Subspace::span(3, {e(0), e(1)});
    Vec v{Scalar(2), Scalar(-3), Scalar(0)};
    CHECK(s.contains(v));
    v[2] = 1;
    CHECK(!s.contains(v));
  }
  SECTION("dimension formula dim(U+W) = dim U + dim W - dim(U meet W) on random spans") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Vec> us, ws;
      for (int i = 0; i < 3; ++i) us.push_back(random_rational_matrix(1, 5, rng).row(0));
      for (int i = 0; i < 2; ++i) ws.push_back(random_rational_matrix(1, 5, rng).row(0));
      auto u = Subspace::span(5, us);
      auto w = Subspace::span(5, ws);
      CHECK((u + w).dim() == u.dim() + w.dim() - u.intersect(w).dim());
    }
  }
  SECTION("ambient mismatch is rejected") {
    auto u = Subspace::span(3, {e(0)});
    Subspace w(4);
    CHECK_THROWS(u + w);
  }
}
