#pragma once

// Nilpotency filtration over all bracketings, annihilators, generator
// counts, and the structural predicates built on them.

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/identities.hpp"

namespace zinbiel {

struct NilReport {
  // Smallest t >= 1 such that every product of t elements, under every
  // bracketing, vanishes; nullopt when not reached up to the bound dim+1.
  std::optional<int> nil_index;
  std::string step_class;      // "abelian", "2-step", "3-step", "other"
  std::vector<int> power_dims;  // dim of the span of all length-k products, k = 1..
  bool nilpotent() const { return nil_index.has_value(); }
};

namespace detail {
inline Subspace product_span(const SuperAlgebra& a, const Subspace& u, const Subspace& w) {
  std::vector<Vec> prods;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) prods.push_back(a.multiply_vec(u.basis_vector(i), w.basis_vector(j)));
  return Subspace::span(a.dim(), prods);
}
}  // namespace detail

/// Spans of all length-k products, k = 1..max_len. The sum over all
/// bracketing shapes of length k satisfies S_k = sum_{i+j=k} span(S_i S_j),
/// which memoizes the Catalan family of shapes by split point.
inline std::vector<Subspace> power_spans(const SuperAlgebra& a, int max_len) {
  std::vector<Subspace> s;
  s.push_back(Subspace::full(a.dim()));  // length 1
  for (int k = 2; k <= max_len; ++k) {
    Subspace acc(a.dim());
    for (int i = 1; i < k; ++i) acc = acc + detail::product_span(a, s[i - 1], s[k - i - 1]);
    s.push_back(acc);
  }
  return s;
}

/// Left-normed enumeration only: L_1 = A, L_{k+1} = span(L_k A). Valid as a
/// substitute for the all-bracketings filtration only under extra identities
/// (e.g. once 2-step is confirmed); used for cross-validation.
inline std::vector<Subspace> left_comb_spans(const SuperAlgebra& a, int max_len) {
  std::vector<Subspace> s;
  s.push_back(Subspace::full(a.dim()));
  for (int k = 2; k <= max_len; ++k) s.push_back(detail::product_span(a, s.back(), s[0]));
  return s;
}

inline NilReport nil_report(const SuperAlgebra& a) {
  NilReport r;
  if (a.dim() == 0) {
    r.nil_index = 1;
    r.step_class = "abelian";
    r.power_dims = {};
    return r;
  }
  int bound = a.dim() + 1;
  std::vector<Subspace> s = power_spans(a, bound + 1);
  for (int k = 1; k <= bound + 1; ++k) {
    r.power_dims.push_back(s[k - 1].dim());
    if (s[k - 1].dim() == 0) {
      r.nil_index = k;
      r.power_dims.resize(k);
      break;
    }
  }
  if (!r.nil_index)
    r.step_class = "other";
  else if (*r.nil_index <= 2)
    r.step_class = "abelian";
  else if (*r.nil_index == 3)
    r.step_class = "2-step";
  else if (*r.nil_index == 4)
    r.step_class = "3-step";
  else
    r.step_class = "other";
  return r;
}

/// x^3 = 0 for every homogeneous x, both bracketings. Pointwise per parity
/// block (unsigned polarization on all-even and all-odd triples), plus the
/// Koszul-signed polarized forms on mixed tuples for graded input.
inline bool cube_zero(const SuperAlgebra& a, std::optional<Counterexample>* witness = nullptr) {
  auto record = [&](std::optional<Counterexample> ce) {
    if (witness) *witness = std::move(ce);
    return false;
  };
  for (const SignedIdentity& cubic : {ids::sq_x_left(), ids::sq_x_right()}) {
    SignedIdentity pol = polarize(cubic);
    if (!a.graded()) {
      if (auto ce = holds(a, pol)) return record(std::move(ce));
      continue;
    }
    // signed multilinear forms on all homogeneous tuples
    if (auto ce = holds(a, pol)) return record(std::move(ce));
    // pointwise x^3 = 0 inside each parity block: unsigned symmetrization
    SignedIdentity unsign = pol.unsigned_form();
    for (int parity = 0; parity <= 1; ++parity) {
      std::vector<int> block;
      for (int i = 0; i < a.dim(); ++i)
        if (a.parity(i).parity == parity) block.push_back(i);
      std::vector<int> tuple(3, 0);
      std::size_t m = block.size();
      if (m == 0) continue;
      for (;;) {
        std::vector<int> assignment = {block[tuple[0]], block[tuple[1]], block[tuple[2]]};
        Vec residual(a.dim());
        for (const IdentityTerm& t : unsign.terms)
          add_scaled(residual, t.coeff, t.monomial.evaluate(a, assignment));
        if (!is_zero(residual))
          return record(Counterexample{assignment, residual, cubic.name + " (block polarization)"});
        int k = 2;
        while (k >= 0 && ++tuple[k] == int(m)) tuple[k--] = 0;
        if (k < 0) break;
      }
    }
  }
  return true;
}

struct GradedSubspace {
  Subspace even, odd;
  Subspace whole;
  int dim() const { return whole.dim(); }
};

/// Ann(A) = {x : xA = Ax = 0}, as the kernel of the stacked left and right
/// multiplication maps, with its even/odd components.
inline GradedSubspace annihilator(const SuperAlgebra& a) {
  int n = a.dim();
  Matrix stacked(2 * n * n, n);
  int row = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        stacked(row, i) = a.c(i, j, k);          // (x e_j)_k
        stacked(row + 1, i) = a.c(j, i, k);      // (e_j x)_k
      }
      row += 2;
    }
  Subspace whole = Subspace::span(n, kernel(stacked));
  // the annihilator of a graded algebra is graded: split per parity
  std::vector<Vec> ev, od;
  for (int i = 0; i < whole.dim(); ++i) {
    Vec v = whole.basis_vector(i);
    Vec e(n), o(n);
    for (int k = 0; k < n; ++k) (a.parity(k).odd() ? o : e)[k] = v[k];
    if (!is_zero(e)) ev.push_back(e);
    if (!is_zero(o)) od.push_back(o);
  }
  GradedSubspace g{Subspace::span(n, ev), Subspace::span(n, od), whole};
  if (g.even.dim() + g.odd.dim() != whole.dim())
    throw std::runtime_error("annihilator failed to split by parity");
  return g;
}

class NotNilpotentError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Minimal generating count of a nilpotent algebra: dim A - dim A^2.
inline int generator_count(const SuperAlgebra& a) {
  NilReport r = nil_report(a);
  if (!r.nilpotent()) throw NotNilpotentError("generator_count requires a nilpotent algebra");
  if (a.dim() == 0) return 0;
  return a.dim() - power_spans(a, 2)[1].dim();
}

/// dim A <= -d + d^2 + 2d^3 + d^4 with d = generator_count(a).
inline bool dim_bound_check(const SuperAlgebra& a) {
  long long d = generator_count(a);
  long long bound = -d + d * d + 2 * d * d * d + d * d * d * d;
  return a.dim() <= bound;
}

struct RegradeResult {
  std::optional<SuperAlgebra> regraded;   // even-first basis order on success
  std::vector<int> new_index_of;          // old basis index -> new index
  std::string violation;                  // nonempty on failure
};

/// Regrades an ungraded 2-step-classification algebra with its minimal
/// generators odd and everything else even (parities of non-generators are
/// forced through the nonzero products), then verifies grading compatibility
/// and the graded symmetric-Zinbiel identities. For three-step input this
/// returns the violated constraint instead.
inline RegradeResult odd_generator_grading_check(const SuperAlgebra& a) {
  if (a.graded()) throw std::runtime_error("odd_generator_grading_check expects ungraded input");
  int n = a.dim();
  // generators: basis vectors outside the span of products (catalog tables
  // keep A^2 basis-aligned, so this is the table's generator set)
  Subspace square = power_spans(a, 2)[1];
  std::vector<int> parity(n, -1);
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    if (!square.contains(e)) parity[i] = 1;  // generator -> odd
  }
  // propagate forced parities through nonzero products until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (parity[i] < 0 || parity[j] < 0) continue;
        int want = (parity[i] + parity[j]) % 2;
        for (int k = 0; k < n; ++k) {
          if (a.c(i, j, k).is_zero()) continue;
          if (parity[k] < 0) {
            parity[k] = want;
            changed = true;
          } else if (parity[k] != want) {
            return {std::nullopt, {},
                    "grading conflict: " + a.label(i) + "*" + a.label(j) + " forces " + a.label(k) +
                        " to parity " + std::to_string(want)};
          }
        }
      }
  }
  for (int i = 0; i < n; ++i)
    if (parity[i] < 0) parity[i] = 0;  // untouched vectors default even
  // permute even-first
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (parity[i] == 0) order.push_back(i);
  int n_even = int(order.size());
  for (int i = 0; i < n; ++i)
    if (parity[i] == 1) order.push_back(i);
  std::vector<int> new_index(n);
  for (int pos = 0; pos < n; ++pos) new_index[order[pos]] = pos;
  std::vector<std::string> labels;
  for (int pos = 0; pos < n; ++pos) labels.push_back(a.label(order[pos]));
  SuperAlgebra g(n_even, n - n_even, labels);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) g.set_c(new_index[i], new_index[j], new_index[k], a.c(i, j, k));
  g.validate_grading();
  auto res = in_variety(g, VarietyName::SymmetricZinbiel);
  if (!res.member)
    return {std::nullopt, new_index, "super identity violated: " + res.certificate->describe(g)};
  return {std::move(g), new_index, ""};
}

}  // namespace zinbiel
