#pragma once

// Exact Levine-Tristram signatures from Seifert matrices.
//
// At a rational angle w = u/n the matrix (1-w)A + (1-conj w)A^T is Hermitian
// over Q(zeta_n); its signature (zero eigenvalues counting 0) is computed by
// symmetric elimination over the field, with pivot signs decided exactly by
// cyclotomic.hpp.  The full step function's breakpoints are the unit roots
// of det(tA - A^T): cyclotomic factors give rational-angle roots, and any
// non-cyclotomic factor with a unit root is rejected rather than
// approximated.  Block-diagonal inputs (connected sums) are split into
// support components first, so invariants of large sums stay cheap.

#include <loctor/cyclotomic.hpp>
#include <loctor/linalg.hpp>
#include <loctor/numeric.hpp>
#include <loctor/polynomial.hpp>
#include <loctor/seifert.hpp>
#include <loctor/step_function.hpp>

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctor {

/// Raised when a Seifert matrix has unit-circle Alexander roots away from
/// rational angles; carries the offending factor for the report.
class irrational_root_error : public std::domain_error {
 public:
  explicit irrational_root_error(const std::string& factor)
      : std::domain_error(
            "Alexander polynomial has unit-circle roots at irrational "
            "angles; offending factor: " +
            factor),
        factor_(factor) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

namespace detail {

inline const CyclotomicField& field_of_order(long n) {
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<CyclotomicField>(n)).first;
  return *it->second;
}

/// Signature of a dense Hermitian matrix over a cyclotomic field by
/// symmetric (congruence) elimination.  Consumes its input.
inline int hermitian_signature(const CyclotomicField& F,
                               std::vector<std::vector<CycElem>>& H) {
  size_t n = H.size();
  std::vector<size_t> active(n);
  for (size_t i = 0; i < n; ++i) active[i] = i;
  int sig = 0;
  while (!active.empty()) {
    // diagonal pivot if one exists
    size_t pivot_pos = active.size();
    for (size_t s = 0; s < active.size(); ++s) {
      if (!H[active[s]][active[s]].is_zero()) {
        pivot_pos = s;
        break;
      }
    }
    if (pivot_pos == active.size()) {
      // all-zero diagonal: fold an off-diagonal entry onto it, or stop if
      // the remaining block vanishes
      size_t oi = n, oj = n;
      for (size_t s = 0; s < active.size() && oi == n; ++s)
        for (size_t r = s + 1; r < active.size(); ++r)
          if (!H[active[s]][active[r]].is_zero()) {
            oi = active[s];
            oj = active[r];
            break;
          }
      if (oi == n) break;
      // congruence by v_i <- v_i + conj(h) v_j turns H_ii into 2|h|^2 > 0
      CycElem h = H[oi][oj];
      CycElem hbar = F.conj(h);
      for (size_t r = 0; r < n; ++r)
        H[r][oi] = F.add(H[r][oi], F.mul(hbar, H[r][oj]));
      for (size_t c = 0; c < n; ++c)
        H[oi][c] = F.add(H[oi][c], F.mul(h, H[oj][c]));
      continue;
    }
    size_t pi = active[pivot_pos];
    const CycElem pivot = H[pi][pi];
    sig += F.sign_real(pivot);
    CycElem inv_pivot = F.inverse(pivot);
    active.erase(active.begin() + static_cast<long>(pivot_pos));
    for (size_t r : active) {
      if (H[r][pi].is_zero()) continue;
      CycElem factor = F.mul(H[r][pi], inv_pivot);
      for (size_t c : active) {
        if (H[pi][c].is_zero()) continue;
        H[r][c] = F.sub(H[r][c], F.mul(factor, H[pi][c]));
      }
    }
  }
  return sig;
}

inline std::vector<std::vector<size_t>> seifert_components(
    const SeifertMatrix& A) {
  return support_components(A.size(), [&](size_t i, size_t j) {
    return A.at(i, j) != 0 || A.at(j, i) != 0;
  });
}

}  // namespace detail

/// Signature of (1-w)A + (1-conj w)A^T at w = exp(2*pi*i*u/n), exactly.
inline int signature_at(const SeifertMatrix& A, const Angle& w) {
  if (A.size() == 0) return 0;
  if (w.turns == 0) return 0;  // the matrix vanishes identically at w = 1
  long n = den(w.turns).convert_to<long>();
  long u = num(w.turns).convert_to<long>();
  const CyclotomicField& F = detail::field_of_order(n);
  CycElem s = F.sub(F.from_rat(1), F.root_power(u));     // 1 - w
  CycElem sbar = F.conj(s);                              // 1 - conj(w)
  int sig = 0;
  for (const auto& comp : detail::seifert_components(A)) {
    size_t m = comp.size();
    std::vector<std::vector<CycElem>> H(m, std::vector<CycElem>(m, F.zero()));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        const Int& aij = A.at(comp[i], comp[j]);
        const Int& aji = A.at(comp[j], comp[i]);
        CycElem e = F.zero();
        if (aij != 0) e = F.add(e, F.mul_rat(s, Rat(aij)));
        if (aji != 0) e = F.add(e, F.mul_rat(sbar, Rat(aji)));
        H[i][j] = std::move(e);
      }
    }
    sig += detail::hermitian_signature(F, H);
  }
  return sig;
}

/// det(tA - A^T) as a polynomial over Q (integer coefficients), computed per
/// support component by exact interpolation.
inline RatPoly alexander_polynomial(const SeifertMatrix& A) {
  RatPoly result{Rat(1)};
  for (const auto& comp : detail::seifert_components(A)) {
    size_t m = comp.size();
    // interpolate the degree-<=m determinant at t = 0..m
    std::vector<Rat> xs, ys;
    for (size_t t = 0; t <= m; ++t) {
      IntMatrix M(m, std::vector<Int>(m));
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          M[i][j] = Int(t) * A.at(comp[i], comp[j]) - A.at(comp[j], comp[i]);
      xs.emplace_back(Int(t));
      ys.emplace_back(bareiss_det(std::move(M)));
    }
    RatPoly comp_poly;
    for (size_t i = 0; i <= m; ++i) {
      RatPoly term{ys[i]};
      for (size_t j = 0; j <= m; ++j) {
        if (j == i) continue;
        term = poly_mul(term, poly_scale(RatPoly{-xs[j], Rat(1)},
                                         Rat(1) / (xs[i] - xs[j])));
      }
      comp_poly = poly_add(comp_poly, term);
    }
    result = poly_mul(result, comp_poly);
  }
  return result;
}

/// The exact signature step function.  Breakpoints are the rational-angle
/// unit roots of the Alexander polynomial; arc values are taken at exact
/// rational midpoints, point values at the breakpoints themselves.
inline StepFunction signature_function(const SeifertMatrix& A) {
  StepFunction f;
  if (A.size() == 0) {
    f.arc_values = {0};
    return f;
  }
  RatPoly delta = alexander_polynomial(A);
  if (delta.empty())
    throw std::logic_error("signature_function: zero Alexander polynomial");
  // strip powers of t (no unit root there)
  size_t val = 0;
  while (delta[val] == 0) ++val;
  if (val) delta.erase(delta.begin(), delta.begin() + static_cast<long>(val));

  std::vector<Angle> bps;
  long dmax = poly_deg(delta);
  for (long n = 1; n <= 2 * dmax * dmax + 1 && poly_deg(delta) > 0; ++n) {
    if (euler_phi(n) > poly_deg(delta)) continue;
    const RatPoly& phi = cyclotomic(n);
    bool divided = false;
    while (poly_divides(phi, delta)) {
      delta = poly_divmod(delta, phi).quotient;
      divided = true;
    }
    if (divided) {
      for (long u2 = n == 1 ? 0 : 1; u2 < std::max(n, 1L); ++u2)
        if (std::gcd(u2, n) == 1 || n == 1)
          bps.push_back(Angle(Rat(u2, n)));
    }
  }

  if (poly_deg(delta) > 0) {
    // any unit-circle root left is at an irrational angle
    RatPoly g = poly_gcd(delta, poly_reverse(delta));
    RatPoly gsf = poly_square_free_part(g);
    if (poly_deg(gsf) > 0) {
      if (gsf != poly_reverse(gsf) || poly_deg(gsf) % 2 != 0)
        throw std::logic_error(
            "signature_function: inversion-stable factor is not an "
            "even palindromic polynomial");
      RatPoly q = palindromic_in_trace_variable(gsf);
      if (poly_eval(q, Rat(2)) == 0 || poly_eval(q, Rat(-2)) == 0)
        throw std::logic_error(
            "signature_function: unexpected root at t = 1 or t = -1");
      if (sturm_count(q, Rat(-2), Rat(2)) > 0)
        throw irrational_root_error(poly_to_string(gsf, "t"));
    }
  }

  std::sort(bps.begin(), bps.end());
  f.breakpoints = bps;
  size_t m = bps.size();
  if (m == 0) {
    f.arc_values = {signature_at(A, Angle(Rat(1, 2)))};
    return f;
  }
  f.arc_values.resize(m);
  f.point_values.resize(m);
  for (size_t i = 0; i < m; ++i) {
    Rat lo = i == 0 ? bps[m - 1].turns - 1 : bps[i - 1].turns;
    Angle mid((lo + bps[i].turns) / 2);
    f.arc_values[i] = signature_at(A, mid);
    f.point_values[i] = signature_at(A, bps[i]);
  }
  return f;
}

/// Sum of signatures over all p-th roots of unity (the k = 0 term is always
/// zero but belongs to the sum).
inline Int root_sum(const SeifertMatrix& A, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("root_sum: p must be prime");
  Int total = 0;
  long pl = p.convert_to<long>();
  for (long k = 0; k < pl; ++k)
    total += signature_at(A, Angle(Rat(k, pl)));
  return total;
}

/// Integral of the signature function over the circle of total measure 1.
inline Rat circle_integral(const SeifertMatrix& A) {
  return signature_function(A).integral();
}

}  // namespace loctor
