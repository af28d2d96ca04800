#pragma once

// Truncated Grassmann envelope: the ungraded algebra
// Gamma(A) = A_0 (x) Gamma_0  (+)  A_1 (x) Gamma_1 inside A (x) /\V_k,
// used to cross-validate every Koszul sign convention in the identity
// registry: a super identity holds on A iff its unsigned form holds on the
// envelope.

#include <string>
#include <vector>

#include "zinbiel/identities.hpp"

namespace zinbiel {

/// Exterior algebra on k generators: basis = subsets of {1..k}, wedge
/// product with alternating signs, xi_i xi_i = 0, dimension 2^k.
class TruncatedGrassmann {
 public:
  explicit TruncatedGrassmann(int k) : k_(k) {
    if (k < 0 || k > 10) throw std::runtime_error("grassmann rank out of range");
    for (unsigned mask = 0; mask < (1u << k); ++mask) subsets_.push_back(mask);
  }
  int rank() const { return k_; }
  int dim() const { return int(subsets_.size()); }
  unsigned subset(int idx) const { return subsets_[idx]; }
  static int weight(unsigned mask) { return __builtin_popcount(mask); }

  /// xi_S ^ xi_T: zero on overlap, else signed union. The sign counts the
  /// transpositions needed to interleave T into S.
  static std::pair<int, unsigned> wedge(unsigned s, unsigned t) {
    if (s & t) return {0, 0};
    int inversions = 0;
    for (unsigned bt = t; bt; bt &= bt - 1) {
      int pos = __builtin_ctz(bt);
      unsigned higher = s >> (pos + 1);
      inversions += weight(higher);
    }
    return {(inversions % 2) ? -1 : 1, s | t};
  }

 private:
  int k_;
  std::vector<unsigned> subsets_;
};

/// Gamma(a) for Grassmann rank k, as an ungraded algebra with product
/// (x (x) g)(y (x) h) = xy (x) (g ^ h). Basis vectors are pairs (e_i, S)
/// with |e_i| = |S| mod 2.
inline SuperAlgebra grassmann_envelope(const SuperAlgebra& a, int k) {
  if (k > 4) throw std::runtime_error("grassmann_envelope: rank bound is 4");
  TruncatedGrassmann g(k);
  struct BasisPair {
    int alg_index;
    unsigned subset;
  };
  std::vector<BasisPair> basis;
  std::vector<std::vector<int>> index_of(a.dim(), std::vector<int>(g.dim(), -1));
  for (int i = 0; i < a.dim(); ++i)
    for (int s = 0; s < g.dim(); ++s) {
      if ((TruncatedGrassmann::weight(g.subset(s)) % 2) != a.parity(i).parity) continue;
      index_of[i][s] = int(basis.size());
      basis.push_back({i, g.subset(s)});
    }
  std::vector<std::string> labels;
  for (const BasisPair& b : basis) {
    std::string l = a.label(b.alg_index) + "w";
    for (int bit = 0; bit < k; ++bit)
      if (b.subset & (1u << bit)) l += std::to_string(bit + 1);
    labels.push_back(l);
  }
  SuperAlgebra env(int(basis.size()), 0, labels);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q) {
      auto [sign, uni] = TruncatedGrassmann::wedge(basis[p].subset, basis[q].subset);
      if (sign == 0) continue;
      const Vec& prod = a.product_of_basis(basis[p].alg_index, basis[q].alg_index);
      Vec out(env.dim());
      bool nz = false;
      for (int m = 0; m < a.dim(); ++m) {
        if (prod[m].is_zero()) continue;
        int s_idx = -1;
        for (int s = 0; s < g.dim(); ++s)
          if (g.subset(s) == uni) s_idx = s;
        int target = index_of[m][s_idx];
        if (target < 0) continue;  // cannot happen when gradings are consistent
        out[target] = Scalar(sign) * prod[m];
        nz = true;
      }
      if (nz) env.set_product(int(p), int(q), std::move(out));
    }
  return env;
}

struct EnvelopeVerdict {
  std::string identity;
  bool super_holds;
  bool envelope_holds;
  bool agree() const { return super_holds == envelope_holds; }
};

/// For each registry identity that is meaningful on graded algebras, compare
/// the signed verdict on a with the unsigned verdict on Gamma(a, k).
inline std::vector<EnvelopeVerdict> envelope_cross_check(const SuperAlgebra& a, int k = 3) {
  SuperAlgebra env = grassmann_envelope(a, k);
  std::vector<SignedIdentity> suite = {
      ids::left_zinbiel(),  ids::right_zinbiel(),       ids::left_leibniz(),
      ids::right_leibniz(), ids::lr_right_commutative(), ids::lr_left_commutative(),
      ids::anti_flexible(), ids::cyclic_left(),          ids::reversal(),
      ids::associative(),   ids::triples_left_zero(),    ids::triples_right_zero(),
  };
  std::vector<EnvelopeVerdict> out;
  for (const SignedIdentity& id : suite) {
    bool super_holds = !holds(a, id).has_value();
    bool env_holds = !holds(env, id.unsigned_form()).has_value();
    out.push_back({id.name, super_holds, env_holds});
  }
  return out;
}

}  // namespace zinbiel
