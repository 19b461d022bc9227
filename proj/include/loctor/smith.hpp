#pragma once

// Smith normal form over Z and the abelianization report it yields for a
// finite presentation.

#include <loctor/linalg.hpp>
#include <loctor/numeric.hpp>
#include <loctor/presentation.hpp>

#include <vector>

namespace loctor {

/// Diagonal of the Smith normal form of an integer matrix (nonnegative,
/// each dividing the next, padded with zeros up to min(rows, cols)).
inline std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = 0, c = 0;
  std::vector<Int> diag;
  while (r < rows && c < cols) {
    // smallest nonzero entry in the remaining block to the pivot
    size_t pi = rows, pj = cols;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;  // block is zero
    std::swap(m[r], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) {  // remainder smaller than pivot: swap up, redo
          std::swap(m[r], m[i]);
          clean = false;
        }
      }
      for (size_t j = c + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        Int q = m[r][j] / m[r][c];
        for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
        if (m[r][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide every remaining entry; if not, fold the
        // offending row in and restart the reduction
        for (size_t i = r + 1; i < rows && clean; ++i)
          for (size_t j = c + 1; j < cols && clean; ++j)
            if (m[i][j] % m[r][c] != 0) {
              for (size_t jj = c; jj < cols; ++jj) m[r][jj] += m[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(abs(m[r][c]));
    ++r;
    ++c;
  }
  while (diag.size() < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

struct AbelianizationReport {
  std::vector<Int> invariant_factors;  // entries > 1, divisibility chain
  size_t free_rank;

  bool operator==(const AbelianizationReport& o) const {
    return invariant_factors == o.invariant_factors && free_rank == o.free_rank;
  }
};

/// H_1 of a finite presentation: Smith normal form of the relator exponent
/// matrix; torsion = diagonal entries > 1, free rank = generators - rank.
inline AbelianizationReport abelianization_snf(const GroupPresentation& p) {
  auto m = p.relator_exponent_matrix();
  AbelianizationReport rep;
  rep.free_rank = p.generators.size();
  if (m.empty()) return rep;
  size_t rank = 0;
  for (const Int& d : smith_normal_form(std::move(m))) {
    if (d != 0) ++rank;
    if (d > 1) rep.invariant_factors.push_back(d);
  }
  rep.free_rank = p.generators.size() - rank;
  return rep;
}

}  // namespace loctor
