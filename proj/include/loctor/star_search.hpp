#pragma once

// Search for integer combinations of basis knots satisfying the two-part
// condition: vanishing circle integral with nonvanishing root-of-unity sum.
// The search works on the exact invariant vectors (kernel of the 1 x n
// rational integral matrix, scanned for nonzero sum); certificates are
// re-verifiable from scratch by building the connected sum and recomputing
// both quantities on the assembled matrix.

#include <loctor/numeric.hpp>
#include <loctor/seifert.hpp>
#include <loctor/signature.hpp>

#include <optional>
#include <vector>

namespace loctor {

struct StarCertificate {
  std::vector<Int> coefficients;  // negative entry = mirror copies
  Int sum_value;                  // root_sum of the combination
};

/// Realize a coefficient vector as an explicit Seifert matrix: |c_i| copies
/// of basis[i], mirrored when c_i < 0, all block-summed.
inline SeifertMatrix assemble_combination(const std::vector<Int>& coeffs,
                                          const std::vector<SeifertMatrix>& basis) {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("assemble_combination: size mismatch");
  SeifertMatrix acc = SeifertMatrix::unknot();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    SeifertMatrix piece = coeffs[i] > 0 ? basis[i] : mirror(basis[i]);
    for (Int k = 0; k < abs(coeffs[i]); ++k) acc = connected_sum(acc, piece);
  }
  return acc;
}

/// Independent check of a certificate: recompute both halves directly on
/// the assembled connected sum.
inline bool verify_star_certificate(const StarCertificate& cert,
                                    const std::vector<SeifertMatrix>& basis,
                                    const Int& p) {
  bool nonzero = false;
  for (const Int& c : cert.coefficients) nonzero = nonzero || c != 0;
  if (!nonzero) return false;
  SeifertMatrix K = assemble_combination(cert.coefficients, basis);
  return circle_integral(K) == 0 && root_sum(K, p) == cert.sum_value &&
         cert.sum_value != 0;
}

/// Smallest certificate (by max-norm, then lexicographic order) with all
/// |c_i| <= bound, or nullopt when no combination within the bound works.
/// Deterministic regardless of evaluation order.
inline std::optional<StarCertificate> search_star(
    const Int& p, const std::vector<SeifertMatrix>& basis, long bound = 64) {
  if (basis.empty())
    throw std::invalid_argument("search_star: basis must be nonempty");
  size_t n = basis.size();
  std::vector<Rat> integrals;
  std::vector<Int> sums;
  for (const auto& A : basis) {
    integrals.push_back(circle_integral(A));
    sums.push_back(root_sum(A, p));
  }

  std::vector<Int> c(n, Int(0));
  for (long radius = 1; radius <= bound; ++radius) {
    // enumerate the cube [-radius, radius]^n in lexicographic order,
    // skipping interior points already covered by smaller radii
    std::vector<long> v(n, -radius);
    while (true) {
      bool on_shell = false;
      for (long x : v) on_shell = on_shell || x == radius || x == -radius;
      if (on_shell) {
        Rat integral = 0;
        Int sum = 0;
        for (size_t i = 0; i < n; ++i) {
          integral += Rat(v[i]) * integrals[i];
          sum += Int(v[i]) * sums[i];
        }
        if (integral == 0 && sum != 0) {
          for (size_t i = 0; i < n; ++i) c[i] = v[i];
          return StarCertificate{c, sum};
        }
      }
      size_t k = n;
      while (k > 0 && v[k - 1] == radius) v[--k] = -radius;
      if (k == 0) break;
      ++v[k - 1];
    }
  }
  return std::nullopt;
}

}  // namespace loctor
