#pragma once

// Independent brute-force cocycle-space enumerator, used to cross-validate
// the library solver. Deliberately separate machinery: the unknowns are only
// the parity-compatible omega entries, the two cocycle equations are
// transcribed directly with explicit sign arithmetic, and the rank is
// computed by a plain forward elimination written here.

#include <vector>

#include "zinbiel/superalgebra.hpp"

namespace zinbiel::brute {

inline int rank_of(std::vector<std::vector<Scalar>> rows, int ncols) {
  int rank = 0;
  for (int col = 0; col < ncols; ++col) {
    int piv = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col] / rows[rank][col];
      for (int c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
    if (rank == int(rows.size())) break;
  }
  return rank;
}

struct Dims {
  int z2 = 0, b2 = 0, h2 = 0;
  bool coboundaries_are_cocycles = true;
  bool operator==(const Dims& o) const { return z2 == o.z2 && b2 == o.b2 && h2 == o.h2; }
};

inline Dims cocycle_dims(const SuperAlgebra& a, Degree parity) {
  int n = a.dim();
  // unknowns: parity-compatible entries only
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.parity(i) + a.parity(j) == parity) {
        slot_of[i][j] = int(slots.size());
        slots.push_back({i, j});
      }
  int nunk = int(slots.size());
  std::vector<std::vector<Scalar>> rows;
  auto blank = [&]() { return std::vector<Scalar>(nunk); };
  auto sign = [&](int i, int j) {
    return (a.parity(i).odd() && a.parity(j).odd()) ? Scalar(-1) : Scalar(1);
  };
  auto add_entry = [&](std::vector<Scalar>& row, int i, int j, const Scalar& coeff) {
    if (slot_of[i][j] >= 0) row[slot_of[i][j]] += coeff;
    // incompatible entries are identically zero, nothing to record
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // w(e_i e_j, e_k) - w(e_i, e_j e_k) - s(j,k) w(e_i, e_k e_j) = 0
        auto r1 = blank();
        for (int m = 0; m < n; ++m) {
          add_entry(r1, m, k, a.c(i, j, m));
          add_entry(r1, i, m, -a.c(j, k, m));
          add_entry(r1, i, m, -sign(j, k) * a.c(k, j, m));
        }
        rows.push_back(std::move(r1));
        // w(e_i, e_j e_k) - w(e_i e_j, e_k) - s(i,j) w(e_j e_i, e_k) = 0
        auto r2 = blank();
        for (int m = 0; m < n; ++m) {
          add_entry(r2, i, m, a.c(j, k, m));
          add_entry(r2, m, k, -a.c(i, j, m));
          add_entry(r2, m, k, -sign(i, j) * a.c(j, i, m));
        }
        rows.push_back(std::move(r2));
      }
  Dims d;
  d.z2 = nunk - rank_of(rows, nunk);
  std::vector<std::vector<Scalar>> brows;
  std::vector<std::vector<Scalar>> residuals;  // equation residuals per raw generator
  for (int k = 0; k < n; ++k) {
    if (!(a.parity(k) == parity)) continue;
    auto r = blank();
    bool nonzero = false;
    for (int s = 0; s < nunk; ++s) {
      auto [i, j] = slots[s];
      r[s] = a.c(i, j, k);
      if (!r[s].is_zero()) nonzero = true;
    }
    if (nonzero) {
      std::vector<Scalar> res;
      res.reserve(rows.size());
      for (const auto& eq : rows) {
        Scalar acc = 0;
        for (int s = 0; s < nunk; ++s)
          if (!eq[s].is_zero() && !r[s].is_zero()) acc += eq[s] * r[s];
        if (!acc.is_zero()) d.coboundaries_are_cocycles = false;
        res.push_back(std::move(acc));
      }
      residuals.push_back(std::move(res));
      brows.push_back(std::move(r));
    }
  }
  d.b2 = rank_of(brows, nunk);
  // h2 = dim Z^2 / (Z^2 meet B^2); dim(Z^2 meet B^2) = b2 - rank(M G) with
  // M the constraint matrix and G the generator columns
  int mg_rank = residuals.empty() ? 0 : rank_of(residuals, int(rows.size()));
  d.h2 = d.z2 - (d.b2 - mg_rank);
  return d;
}

}  // namespace zinbiel::brute
