#pragma once

// Representation pairs (r, l) on graded modules, the axiom checks for left
// and right representations, adjoint and coadjoint pairs, and split
// extensions A (+) V.

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// Per-basis-vector endomorphism families on a graded module. r[a] and l[a]
/// are the matrices of r(e_a), l(e_a); as maps they shift the module parity
/// by |e_a|.
struct RepresentationPair {
  int module_even = 0, module_odd = 0;
  std::vector<Matrix> r, l;

  int module_dim() const { return module_even + module_odd; }
  Degree module_parity(int i) const { return i < module_even ? kEven : kOdd; }

  Matrix r_of(const SuperAlgebra& a, const Vec& x) const { return combine(a, r, x); }
  Matrix l_of(const SuperAlgebra& a, const Vec& x) const { return combine(a, l, x); }

  /// Entries must vanish outside blocks of parity shifted by |e_a|.
  void validate(const SuperAlgebra& a) const {
    if (int(r.size()) != a.dim() || int(l.size()) != a.dim())
      throw std::runtime_error("representation pair: one matrix per basis vector required");
    for (int idx = 0; idx < a.dim(); ++idx)
      for (const std::vector<Matrix>* fam : {&r, &l}) {
        const Matrix& m = (*fam)[idx];
        if (m.rows() != module_dim() || m.cols() != module_dim())
          throw std::runtime_error("representation pair: module dimension mismatch");
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() &&
                !(module_parity(j) + a.parity(idx) == module_parity(i)))
              throw std::runtime_error("representation matrix violates the grading shift");
      }
  }

 private:
  Matrix combine(const SuperAlgebra& a, const std::vector<Matrix>& fam, const Vec& x) const {
    Matrix out(module_dim(), module_dim());
    for (int i = 0; i < a.dim(); ++i)
      if (!x[i].is_zero()) out = out + fam[i].scaled(x[i]);
    return out;
  }
};

struct AxiomViolation {
  std::string axiom;
  int i, j;  // basis pair where it fails
  std::string describe(const SuperAlgebra& a) const {
    return axiom + " fails at (" + a.label(i) + "," + a.label(j) + ")";
  }
};

namespace detail {
inline Scalar koszul(const SuperAlgebra& a, int i, int j) {
  return (a.parity(i).odd() && a.parity(j).odd()) ? Scalar(-1) : Scalar(1);
}
}  // namespace detail

/// Left-representation equations, on all homogeneous basis pairs:
///   l(xy) = l(x)l(y) + l(x)r(y)
///   r(x)r(y) = r(xy) + (-1)^{|x||y|} r(yx)
///   l(x)l(y) = (-1)^{|x||y|} r(y)l(x) - l(x)r(y)
inline std::optional<AxiomViolation> is_left_representation(const SuperAlgebra& a,
                                                            const RepresentationPair& rp) {
  rp.validate(a);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Scalar s = detail::koszul(a, i, j);
      Matrix lxy = rp.l_of(a, a.product_of_basis(i, j));
      Matrix lyx = rp.l_of(a, a.product_of_basis(j, i));
      Matrix rxy = rp.r_of(a, a.product_of_basis(i, j));
      Matrix ryx = rp.r_of(a, a.product_of_basis(j, i));
      if (!(lxy == rp.l[i] * rp.l[j] + rp.l[i] * rp.r[j]))
        return AxiomViolation{"l(xy) = l(x)l(y) + l(x)r(y)", i, j};
      if (!(rp.r[i] * rp.r[j] == rxy + ryx.scaled(s)))
        return AxiomViolation{"r(x)r(y) = r(xy) + (-1)^{|x||y|} r(yx)", i, j};
      if (!(rp.l[i] * rp.l[j] == (rp.r[j] * rp.l[i]).scaled(s) - rp.l[i] * rp.r[j]))
        return AxiomViolation{"l(x)l(y) = (-1)^{|x||y|}[r(y),l(x)]", i, j};
    }
  return std::nullopt;
}

/// Right-representation equations:
///   l(x)l(y) = l(xy) + (-1)^{|x||y|} l(yx)
///   l(x)r(y) = r(xy)
///   r(xy) = (-1)^{|x||y|} (r(y)r(x) + r(y)l(x))
inline std::optional<AxiomViolation> is_right_representation(const SuperAlgebra& a,
                                                             const RepresentationPair& rp) {
  rp.validate(a);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Scalar s = detail::koszul(a, i, j);
      Matrix lxy = rp.l_of(a, a.product_of_basis(i, j));
      Matrix lyx = rp.l_of(a, a.product_of_basis(j, i));
      Matrix rxy = rp.r_of(a, a.product_of_basis(i, j));
      if (!(rp.l[i] * rp.l[j] == lxy + lyx.scaled(s)))
        return AxiomViolation{"l(x)l(y) = l(xy) + (-1)^{|x||y|} l(yx)", i, j};
      if (!(rp.l[i] * rp.r[j] == rxy))
        return AxiomViolation{"l(x)r(y) = r(xy)", i, j};
      if (!(rxy == (rp.r[j] * rp.r[i] + rp.r[j] * rp.l[i]).scaled(s)))
        return AxiomViolation{"r(xy) = (-1)^{|x||y|}(r(y)r(x) + r(y)l(x))", i, j};
    }
  return std::nullopt;
}

inline bool is_representation(const SuperAlgebra& a, const RepresentationPair& rp,
                              std::optional<AxiomViolation>* why = nullptr) {
  if (auto v = is_left_representation(a, rp)) {
    if (why) *why = std::move(v);
    return false;
  }
  if (auto v = is_right_representation(a, rp)) {
    if (why) *why = std::move(v);
    return false;
  }
  return true;
}

/// Adjoint pair (R, L): L(x)y = xy, R(x)y = (-1)^{|x||y|} yx.
inline RepresentationPair adjoint_pair(const SuperAlgebra& a) {
  int n = a.dim();
  RepresentationPair rp{a.n_even(), a.n_odd(), {}, {}};
  for (int x = 0; x < n; ++x) {
    Matrix L(n, n), R(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        L(k, i) = a.c(x, i, k);
        R(k, i) = detail::koszul(a, x, i) * a.c(i, x, k);
      }
    }
    rp.l.push_back(std::move(L));
    rp.r.push_back(std::move(R));
  }
  return rp;
}

/// Coadjoint pair (R*, L*) on the dual basis:
///   L*(x)(f) = (-1)^{|f||x|} f o R(x),  R*(x)(f) = (-1)^{|f||x|} f o L(x).
inline RepresentationPair coadjoint_pair(const SuperAlgebra& a) {
  int n = a.dim();
  RepresentationPair rp{a.n_even(), a.n_odd(), {}, {}};
  for (int x = 0; x < n; ++x) {
    Matrix Lstar(n, n), Rstar(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // L*(e_x)(e_j^*) = sum_i (-1)^{|x|(|i|+|j|)} (e_i e_x)_j e_i^*
        Scalar sij = (a.parity(x).odd() && ((a.parity(i).parity + a.parity(j).parity) % 2 == 1))
                         ? Scalar(-1)
                         : Scalar(1);
        Lstar(i, j) = sij * a.c(i, x, j);
        Rstar(i, j) = sij * a.c(x, i, j);
      }
    rp.l.push_back(std::move(Lstar));
    rp.r.push_back(std::move(Rstar));
  }
  return rp;
}

inline bool coadjoint_is_representation(const SuperAlgebra& a) {
  return is_representation(a, coadjoint_pair(a));
}

/// A (+) V with (x+u)(y+v) = xy + l(x)v + (-1)^{|x||y|} r(y)u. Refuses
/// pairs that fail the representation axioms. Basis order: A evens, module
/// evens, A odds, module odds.
inline SuperAlgebra split_extension(const SuperAlgebra& a, const RepresentationPair& rp) {
  std::optional<AxiomViolation> why;
  if (!is_representation(a, rp, &why))
    throw std::runtime_error("split_extension: not a representation: " + why->describe(a));
  int n = a.dim(), m = rp.module_dim();
  auto alg_index = [&](int i) { return a.parity(i).odd() ? rp.module_even + i : i; };
  auto mod_index = [&](int i) {
    return rp.module_parity(i).odd() ? n + i : a.n_even() + i;
  };
  SuperAlgebra out(a.n_even() + rp.module_even, a.n_odd() + rp.module_odd);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) out.set_c(alg_index(i), alg_index(j), alg_index(k), a.c(i, j, k));
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < m; ++u) {
      for (int w = 0; w < m; ++w) {
        if (!rp.l[i](w, u).is_zero()) out.set_c(alg_index(i), mod_index(u), mod_index(w), rp.l[i](w, u));
        Scalar s = (a.parity(i).odd() && rp.module_parity(u).odd()) ? Scalar(-1) : Scalar(1);
        if (!rp.r[i](w, u).is_zero())
          out.set_c(mod_index(u), alg_index(i), mod_index(w), s * rp.r[i](w, u));
      }
    }
  out.validate_grading();
  return out;
}

}  // namespace zinbiel
