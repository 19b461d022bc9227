#pragma once

// Dense univariate polynomials over Q (ascending powers, no trailing zeros;
// the zero polynomial is the empty vector), plus the specific machinery the
// signature module needs: cyclotomic polynomials, Sturm root counting, and
// the t + 1/t substitution for palindromic factors.

#include <loctor/numeric.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctor {

using RatPoly = std::vector<Rat>;
using IntPoly = std::vector<Int>;

inline void poly_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

inline RatPoly poly_scale(const RatPoly& a, const Rat& c) {
  if (c == 0) return {};
  RatPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

struct PolyDivResult {
  RatPoly quotient, remainder;
};

inline PolyDivResult poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("poly_divmod: division by zero");
  RatPoly rem = a, quo(a.size() > b.size() ? a.size() - b.size() + 1 : 1,
                       Rat(0));
  while (poly_deg(rem) >= poly_deg(b)) {
    int shift = poly_deg(rem) - poly_deg(b);
    Rat c = rem.back() / b.back();
    quo[static_cast<size_t>(shift)] += c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[i + static_cast<size_t>(shift)] -= c * b[i];
    poly_trim(rem);
  }
  poly_trim(quo);
  return {quo, rem};
}

/// True iff b divides a exactly.
inline bool poly_divides(const RatPoly& b, const RatPoly& a) {
  if (a.empty()) return true;
  return poly_divmod(a, b).remainder.empty();
}

inline RatPoly poly_monic(RatPoly p) {
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

inline RatPoly poly_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
  return r;
}

inline Rat poly_eval(const RatPoly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

/// x^deg(p) * p(1/x).
inline RatPoly poly_reverse(const RatPoly& p) {
  RatPoly r(p.rbegin(), p.rend());
  poly_trim(r);
  return r;
}

inline RatPoly poly_square_free_part(const RatPoly& p) {
  if (poly_deg(p) <= 1) return poly_monic(p);
  return poly_monic(poly_divmod(p, poly_gcd(p, poly_derivative(p))).quotient);
}

inline std::string poly_to_string(const RatPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c > 0 ? " + " : " - ";
      c = abs(c);
    }
    std::string cs = format_rat_short(c);
    if (i == 0) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace detail {
inline RatPoly x_pow_minus_1(long n) {
  RatPoly p(static_cast<size_t>(n) + 1, Rat(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  return p;
}
}  // namespace detail

/// The n-th cyclotomic polynomial (integer coefficients, returned over Q),
/// computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
/// divisors.  Results are memoized.
inline const RatPoly& cyclotomic(long n) {
  static std::map<long, RatPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::domain_error("cyclotomic: n must be positive");
  RatPoly p = detail::x_pow_minus_1(n);
  for (long d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    auto dv = poly_divmod(p, cyclotomic(d));
    if (!dv.remainder.empty())
      throw std::logic_error("cyclotomic: inexact division");
    p = std::move(dv.quotient);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// Sturm root counting

/// Number of distinct real roots of p in the half-open interval (a, b].
inline int sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
  if (poly_deg(p) < 1) return 0;
  std::vector<RatPoly> chain{p, poly_derivative(p)};
  while (!chain.back().empty() && poly_deg(chain.back()) > 0) {
    RatPoly rem = poly_divmod(chain[chain.size() - 2], chain.back()).remainder;
    for (auto& c : rem) c = -c;
    if (rem.empty()) break;
    chain.push_back(std::move(rem));
  }
  auto variations = [&](const Rat& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
      int s = sign_of(poly_eval(q, x));
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  };
  return variations(a) - variations(b);
}

/// For an even-degree palindromic g (g == reverse(g), g(0) != 0), the
/// polynomial q with q(t + 1/t) = g(t) / t^{deg/2}.  Roots of g on the unit
/// circle correspond to real roots of q in [-2, 2].
inline RatPoly palindromic_in_trace_variable(const RatPoly& g) {
  int d = poly_deg(g);
  if (d < 0 || d % 2 != 0 || g != poly_reverse(g))
    throw std::invalid_argument(
        "palindromic_in_trace_variable: need even-degree palindromic input");
  int m = d / 2;
  // p_j(u) = t^j + t^-j as a polynomial in u = t + 1/t
  RatPoly pj_minus{Rat(2)}, pj{Rat(0), Rat(1)};  // p_0 = 2, p_1 = u
  RatPoly q{g[static_cast<size_t>(m)]};
  const RatPoly u{Rat(0), Rat(1)};
  for (int j = 1; j <= m; ++j) {
    q = poly_add(q, poly_scale(pj, g[static_cast<size_t>(m + j)]));
    if (j < m) {
      RatPoly next = poly_sub(poly_mul(u, pj), pj_minus);
      pj_minus = std::move(pj);
      pj = std::move(next);
    }
  }
  return q;
}

}  // namespace loctor
