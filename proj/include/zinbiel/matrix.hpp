#pragma once

// Dense exact linear algebra over the rationals: RREF, kernels, solving,
// and the subspace lattice. Gaussian elimination uses first-nonzero pivoting,
// so every result is a deterministic function of the input.

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

using Vec = std::vector<Scalar>;

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec& add_scaled(Vec& dst, const Scalar& factor, const Vec& src) {
  assert(dst.size() == src.size());
  if (factor.is_zero()) return dst;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!src[i].is_zero()) dst[i] += factor * src[i];
  return dst;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (int(rows[i].size()) != m.cols_) throw std::runtime_error("ragged rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  Vec row(int i) const { return Vec(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_); }
  Vec col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw std::runtime_error("matrix apply dimension mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("matrix sum dimension mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix operator-(const Matrix& o) const { return *this + (-o); }
  Matrix scaled(const Scalar& f) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= f;
    return r;
  }

  bool operator==(const Matrix& o) const = default;
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
      os << "[";
      for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
      os << "]\n";
    }
    return os.str();
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<int> pivots;  // ascending pivot column indices
  int rank() const { return int(pivots.size()); }
};

/// Unique reduced row echelon form, first-nonzero pivoting.
inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Scalar inv = m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return rref(m).rank(); }

/// Basis of the null space {v : m v = 0}; count = cols - rank.
inline std::vector<Vec> kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (int r = 0; r < rr.rank(); ++r) v[rr.pivots[r]] = -rr.matrix(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One exact solution of m x = b, or nullopt when b is outside the column
/// space. Free variables are set to zero.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::runtime_error("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(std::move(aug));
  for (int p : rr.pivots)
    if (p == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (int r = 0; r < rr.rank(); ++r) x[rr.pivots[r]] = rr.matrix(r, m.cols());
  return x;
}

/// Inverse of a square matrix; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::runtime_error("inverse: not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.rank() != n || (n > 0 && rr.pivots.back() != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.matrix(i, n + j);
  return inv;
}

/// A linear subspace held in canonical form (RREF row span), so equal
/// subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult rr = rref(Matrix::from_rows(vectors));
    Matrix b(rr.rank(), ambient);
    for (int i = 0; i < rr.rank(); ++i)
      for (int j = 0; j < ambient; ++j) b(i, j) = rr.matrix(i, j);
    s.basis_ = std::move(b);
    return s;
  }
  static Subspace full(int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) {
      Vec v(ambient);
      v[i] = 1;
      rows.push_back(std::move(v));
    }
    return span(ambient, rows);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }
  bool is_trivial() const { return dim() == 0; }

  bool contains(const Vec& v) const {
    check_ambient(int(v.size()));
    if (zinbiel::is_zero(v)) return true;
    std::vector<Vec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    int before = int(rows.size());
    rows.push_back(v);
    return Subspace::span(ambient_, rows).dim() == before;
  }
  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  Subspace operator+(const Subspace& o) const {
    check_ambient(o.ambient_);
    std::vector<Vec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    for (int i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
    return span(ambient_, rows);
  }

  Subspace intersect(const Subspace& o) const {
    check_ambient(o.ambient_);
    // x in U cap W  <=>  x = a^T U = b^T W; solve [U^T | -W^T] (a,b)^T = 0.
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    Matrix sys(ambient_, dim() + o.dim());
    for (int i = 0; i < ambient_; ++i) {
      for (int j = 0; j < dim(); ++j) sys(i, j) = basis_(j, i);
      for (int j = 0; j < o.dim(); ++j) sys(i, dim() + j) = -o.basis_(j, i);
    }
    std::vector<Vec> vecs;
    for (const Vec& k : kernel(sys)) {
      Vec x(ambient_);
      for (int j = 0; j < dim(); ++j) add_scaled(x, k[j], basis_.row(j));
      vecs.push_back(std::move(x));
    }
    return span(ambient_, vecs);
  }

  /// Coordinates of v in this subspace's basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const {
    check_ambient(int(v.size()));
    return solve(basis_.transposed(), v);
  }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  void check_ambient(int other) const {
    if (other != ambient_) throw std::runtime_error("subspace ambient dimension mismatch");
  }
  int ambient_;
  Matrix basis_;
};

}  // namespace zinbiel
