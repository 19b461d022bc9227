#pragma once

// Exact linear algebra over Z and Q: fraction-free determinants, dense
// rational elimination, and the support-graph component split used to keep
// block-diagonal inputs cheap.

#include <loctor/numeric.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace loctor {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int bareiss_det(IntMatrix m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / denom;
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

/// Determinant of a rational matrix: rows are scaled integral, then Bareiss.
inline Rat rational_det(const RatMatrix& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix im(n, std::vector<Int>(n));
  Rat scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(m[i][j]));
    for (size_t j = 0; j < n; ++j) im[i][j] = num(m[i][j]) * (l / den(m[i][j]));
    scale /= Rat(l);
  }
  return Rat(bareiss_det(std::move(im))) * scale;
}

/// Solves A x = b over Q; nullopt when A is singular.
inline std::optional<std::vector<Rat>> solve_linear(RatMatrix a,
                                                    std::vector<Rat> b) {
  size_t n = a.size();
  if (n != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rat inv_p = Rat(1) / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv_p;
    b[col] *= inv_p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

/// Partition of {0..n-1} into connected components of a symmetric support
/// relation.  Used to split block-diagonal matrices before expensive exact
/// work; a permutation-congruence preserves both determinant factorization
/// and Hermitian signature.
template <class Pred>
std::vector<std::vector<size_t>> support_components(size_t n, Pred linked) {
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (linked(i, j)) parent[find(i)] = find(j);
  std::vector<std::vector<size_t>> comps;
  std::vector<long> slot(n, -1);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<size_t>(slot[r])].push_back(i);
  }
  return comps;
}

}  // namespace loctor
