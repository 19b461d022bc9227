#pragma once

// Floating-point signature oracle, independent of the exact path: build the
// Hermitian matrix (1-w)A + (1-conj w)A^T in doubles, embed it as the real
// symmetric matrix [[X, -Y], [Y, X]] (eigenvalues doubled), and run cyclic
// Jacobi.  Counts eigenvalue signs with a tolerance well below the spectral
// gaps of the sampled angles.

#include <loctor/seifert.hpp>

#include <cmath>
#include <complex>
#include <vector>

namespace loctor_test {

inline int float_signature(const loctor::SeifertMatrix& A, double turns) {
  size_t n = A.size();
  if (n == 0) return 0;
  std::complex<double> w = std::polar(1.0, 2.0 * M_PI * turns);
  std::complex<double> s = 1.0 - w, sbar = std::conj(s);
  std::vector<std::vector<std::complex<double>>> H(
      n, std::vector<std::complex<double>>(n));
  double norm = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      H[i][j] = s * static_cast<double>(A.at(i, j)) +
                sbar * static_cast<double>(A.at(j, i));
      norm = std::max(norm, std::abs(H[i][j]));
    }
  if (norm == 0) return 0;

  size_t m = 2 * n;
  std::vector<std::vector<double>> S(m, std::vector<double>(m, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      S[i][j] = H[i][j].real();
      S[n + i][n + j] = H[i][j].real();
      S[i][n + j] = -H[i][j].imag();
      S[n + i][j] = H[i][j].imag();
    }

  // cyclic Jacobi sweeps
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (size_t p = 0; p < m; ++p)
      for (size_t q = p + 1; q < m; ++q) off += S[p][q] * S[p][q];
    if (off < 1e-24 * norm * norm) break;
    for (size_t p = 0; p < m; ++p) {
      for (size_t q = p + 1; q < m; ++q) {
        if (std::abs(S[p][q]) < 1e-18 * norm) continue;
        double theta = 0.5 * std::atan2(2 * S[p][q], S[q][q] - S[p][p]);
        double c = std::cos(theta), t = std::sin(theta);
        for (size_t k = 0; k < m; ++k) {
          double spk = S[p][k], sqk = S[q][k];
          S[p][k] = c * spk - t * sqk;
          S[q][k] = t * spk + c * sqk;
        }
        for (size_t k = 0; k < m; ++k) {
          double skp = S[k][p], skq = S[k][q];
          S[k][p] = c * skp - t * skq;
          S[k][q] = t * skp + c * skq;
        }
      }
    }
  }

  int sig2 = 0;
  for (size_t i = 0; i < m; ++i) {
    if (S[i][i] > 1e-7 * norm) ++sig2;
    else if (S[i][i] < -1e-7 * norm) --sig2;
  }
  return sig2 / 2;  // doubled spectrum
}

}  // namespace loctor_test
