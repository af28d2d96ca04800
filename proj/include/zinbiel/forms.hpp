#pragma once

// Bilinear form data for quadratic structures: the four form checks (even,
// supersymmetric, invariant, non-degenerate), the solver for the space of
// candidate invariant forms, and the structural consequences of carrying an
// invariant scalar product.

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/structure.hpp"

namespace zinbiel {

/// Raised when computed data contradicts a structural fact the library
/// relies on (e.g. a quadratic Zinbiel algebra failing 2-step nilpotency).
/// The CLI maps it to its own exit code so harnesses can tell these apart
/// from ordinary check failures.
class StructuralContradiction : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BilinearForm {
  Matrix gram;
  Scalar eval(const Vec& x, const Vec& y) const {
    Scalar acc = 0;
    for (int i = 0; i < gram.rows(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < gram.cols(); ++j)
        if (!gram(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * gram(i, j) * y[j];
    }
    return acc;
  }
};

struct FormFlags {
  bool even = false, supersymmetric = false, invariant = false, nondegenerate = false;
  bool all() const { return even && supersymmetric && invariant && nondegenerate; }
};

inline FormFlags form_checks(const SuperAlgebra& a, const BilinearForm& b) {
  int n = a.dim();
  if (b.gram.rows() != n || b.gram.cols() != n)
    throw std::runtime_error("form_checks: gram dimension mismatch");
  FormFlags f;
  f.even = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(a.parity(i) == a.parity(j)) && !b.gram(i, j).is_zero()) f.even = false;
  f.supersymmetric = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar s = (a.parity(i).odd() && a.parity(j).odd()) ? Scalar(-1) : Scalar(1);
      if (b.gram(i, j) != s * b.gram(j, i)) f.supersymmetric = false;
    }
  f.invariant = true;
  for (int i = 0; i < n && f.invariant; ++i)
    for (int j = 0; j < n && f.invariant; ++j)
      for (int k = 0; k < n; ++k) {
        // B(e_i e_j, e_k) = B(e_i, e_j e_k)
        Scalar lhs = b.eval(a.product_of_basis(i, j), a.basis(k).coeffs());
        Scalar rhs = b.eval(a.basis(i).coeffs(), a.product_of_basis(j, k));
        if (lhs != rhs) {
          f.invariant = false;
          break;
        }
      }
  f.nondegenerate = rank(b.gram) == n;
  return f;
}

/// Basis of the linear space of even supersymmetric invariant bilinear
/// forms on a (non-degeneracy is not linear; test members separately).
inline std::vector<Matrix> invariant_form_space(const SuperAlgebra& a) {
  int n = a.dim();
  auto idx = [n](int i, int j) { return i * n + j; };
  std::vector<Vec> rows;
  auto row = [&]() { return Vec(std::size_t(n) * n); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(a.parity(i) == a.parity(j))) {  // even: cross-parity entries vanish
        Vec r = row();
        r[idx(i, j)] = 1;
        rows.push_back(std::move(r));
        continue;
      }
      if (i < j) {  // supersymmetry
        Vec r = row();
        r[idx(i, j)] = 1;
        r[idx(j, i)] = (a.parity(i).odd() && a.parity(j).odd()) ? Scalar(1) : Scalar(-1);
        rows.push_back(std::move(r));
      }
      if (i == j && a.parity(i).odd()) {  // odd diagonal forced to zero
        Vec r = row();
        r[idx(i, i)] = 1;
        rows.push_back(std::move(r));
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // sum_m c[i][j][m] B_{mk} - sum_m c[j][k][m] B_{im} = 0
        Vec r = row();
        bool nonzero = false;
        for (int m = 0; m < n; ++m) {
          if (!a.c(i, j, m).is_zero()) {
            r[idx(m, k)] += a.c(i, j, m);
            nonzero = true;
          }
          if (!a.c(j, k, m).is_zero()) {
            r[idx(i, m)] -= a.c(j, k, m);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(r));
      }
  std::vector<Matrix> basis;
  Matrix sys = Matrix::from_rows(rows);
  if (sys.rows() == 0) sys = Matrix(0, n * n);
  for (const Vec& v : kernel(sys)) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = v[idx(i, j)];
    basis.push_back(std::move(g));
  }
  return basis;
}

/// Deterministic search for a non-degenerate member of the invariant-form
/// space: basis elements, then pair combinations with small coefficients.
inline std::optional<BilinearForm> find_invariant_form(const SuperAlgebra& a) {
  std::vector<Matrix> basis = invariant_form_space(a);
  auto good = [&](const Matrix& g) { return rank(g) == a.dim(); };
  for (const Matrix& g : basis)
    if (good(g)) return BilinearForm{g};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (int ci : {1, -1, 2})
        for (int cj : {1, 2, 3}) {
          Matrix g = basis[i].scaled(Scalar(ci)) + basis[j].scaled(Scalar(cj));
          if (good(g)) return BilinearForm{g};
        }
  // all-basis sum with growing weights as a last resort
  if (!basis.empty()) {
    Matrix g(a.dim(), a.dim());
    Scalar w = 1;
    for (const Matrix& b : basis) {
      g = g + b.scaled(w);
      w *= 3;
    }
    if (good(g)) return BilinearForm{g};
  }
  return std::nullopt;
}

struct QuadraticConsequences {
  bool symmetric_zinbiel = false;
  std::optional<int> nil_index;
  bool two_step = false;
  bool contradiction() const { return !(symmetric_zinbiel && two_step); }
};

/// For a left or right Zinbiel algebra carrying an invariant scalar product:
/// verifies it is symmetric and 2-step nilpotent. Failure of either is a
/// structural contradiction, not an ordinary negative result.
inline QuadraticConsequences quadratic_consequences(const SuperAlgebra& a, const BilinearForm& b) {
  FormFlags f = form_checks(a, b);
  if (!f.all()) throw std::runtime_error("quadratic_consequences: form checks must all pass");
  bool left = in_variety(a, VarietyName::LeftZinbiel).member;
  bool right = in_variety(a, VarietyName::RightZinbiel).member;
  if (!left && !right)
    throw std::runtime_error("quadratic_consequences: input is not a left or right Zinbiel algebra");
  QuadraticConsequences q;
  q.symmetric_zinbiel = in_variety(a, VarietyName::SymmetricZinbiel).member;
  NilReport nil = nil_report(a);
  q.nil_index = nil.nil_index;
  q.two_step = nil.nilpotent() && *nil.nil_index <= 3;
  return q;
}

}  // namespace zinbiel
