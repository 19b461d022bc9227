#pragma once

// Arbitrary-precision integer and rational types used throughout, plus a few
// helpers that the rest of the library keeps reaching for.  Everything is
// exact; no floating point leaves this layer (floats appear only inside the
// sign-refinement of cyclotomic.hpp, never in results).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace loctor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_odd(const Int& n) { return n % 2 != 0; }
inline bool is_even(const Int& n) { return n % 2 == 0; }

inline int sign_of(const Int& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }
inline int sign_of(const Rat& q) { return sign_of(num(q)); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }

/// q reduced into [0,1) modulo 1.
inline Rat mod1(const Rat& q) { return q - Rat(floor_rat(q)); }

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Deterministic primality by trial division; inputs here are user-scale.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Inverse of a modulo m (m > 1, gcd(a, m) = 1), via extended Euclid.
inline Int mod_inverse(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  Int r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

/// Renders "num/den" with positive denominator, e.g. "-16/3", "0/1".
inline std::string format_rat(const Rat& q) {
  return num(q).str() + "/" + den(q).str();
}

/// Renders an integer when the denominator is 1, "num/den" otherwise.
inline std::string format_rat_short(const Rat& q) {
  return den(q) == 1 ? num(q).str() : num(q).str() + "/" + den(q).str();
}

/// Fixed-point decimal rendering for human-facing tables (exact value is
/// always reported alongside; this is a convenience only).
inline std::string format_decimal(const Rat& q, unsigned digits = 6) {
  Int scale = int_pow(10, digits);
  Int scaled = num(q) * scale;
  Int d = den(q);
  Int t = scaled / d;
  // round half away from zero
  Int rem2 = 2 * (scaled % d);
  if (rem2 >= d) ++t;
  if (-rem2 >= d) --t;
  bool neg = t < 0;
  Int at = abs(t);
  std::string frac = Int(at % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  return (neg ? "-" : "") + Int(at / scale).str() + "." + frac;
}

/// Parses "num", "num/den" or "-num/den"; throws std::invalid_argument.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

}  // namespace loctor
