#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n), elements represented
// as polynomials in zeta modulo the n-th cyclotomic polynomial.  Working
// modulo the cyclotomic polynomial (rather than x^n - 1) keeps this a field,
// so "is zero" is an exact test on the reduced representative.
//
// Sign determination for real elements runs interval refinement: evaluate
// the representative at zeta = exp(2*pi*i/n) in progressively higher
// binary-float precision until the value is separated from zero.  The exact
// zero test runs first, so refinement always terminates on nonzero input.

#include <loctor/numeric.hpp>
#include <loctor/polynomial.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <memory>
#include <stdexcept>
#include <vector>

namespace loctor {

class CyclotomicField;

/// Element of Q(zeta_n); coefficients of 1, zeta, ..., zeta^{m-1} where m is
/// the degree of the field.
struct CycElem {
  const CyclotomicField* field = nullptr;
  std::vector<Rat> coeffs;  // size = degree, trailing zeros kept

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) return false;
    return true;
  }
  friend bool operator==(const CycElem& a, const CycElem& b) {
    return a.coeffs == b.coeffs;
  }
};

class CyclotomicField {
 public:
  explicit CyclotomicField(long n) : n_(n) {
    if (n < 1) throw std::domain_error("CyclotomicField: n must be positive");
    phi_ = cyclotomic(n);
    deg_ = static_cast<size_t>(poly_deg(phi_));
    // reductions of zeta^k for k < 2n cover products of basis monomials
    // and conjugation exponents
    zeta_pow_.resize(static_cast<size_t>(2 * n));
    RatPoly x{Rat(0), Rat(1)};
    RatPoly cur{Rat(1)};
    for (long k = 0; k < 2 * n; ++k) {
      zeta_pow_[static_cast<size_t>(k)] = pad(cur);
      cur = poly_divmod(poly_mul(cur, x), phi_).remainder;
    }
  }

  long order() const { return n_; }
  size_t degree() const { return deg_; }

  CycElem zero() const { return {this, std::vector<Rat>(deg_ ? deg_ : 1, Rat(0))}; }

  CycElem from_rat(const Rat& q) const {
    CycElem e = zero();
    e.coeffs[0] = q;
    return e;
  }

  /// zeta^k (k may be any integer; reduced mod n).
  CycElem root_power(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    CycElem e{this, zeta_pow_[static_cast<size_t>(k)]};
    return e;
  }

  CycElem add(const CycElem& a, const CycElem& b) const {
    CycElem r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
  }
  CycElem sub(const CycElem& a, const CycElem& b) const {
    CycElem r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
  }
  CycElem neg(const CycElem& a) const {
    CycElem r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }

  CycElem mul(const CycElem& a, const CycElem& b) const {
    std::vector<Rat> prod(2 * deg_ - 1, Rat(0));
    for (size_t i = 0; i < deg_; ++i) {
      if (a.coeffs[i] == 0) continue;
      for (size_t j = 0; j < deg_; ++j) {
        if (b.coeffs[j] == 0) continue;
        prod[i + j] += a.coeffs[i] * b.coeffs[j];
      }
    }
    CycElem r = zero();
    for (size_t k = 0; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const auto& zp = zeta_pow_[k];
      for (size_t i = 0; i < deg_; ++i) r.coeffs[i] += prod[k] * zp[i];
    }
    return r;
  }

  CycElem mul_rat(const CycElem& a, const Rat& q) const {
    CycElem r = a;
    for (auto& c : r.coeffs) c *= q;
    return r;
  }

  /// Complex conjugate: zeta |-> zeta^{n-1}.
  CycElem conj(const CycElem& a) const {
    CycElem r = zero();
    for (size_t j = 0; j < deg_; ++j) {
      if (a.coeffs[j] == 0) continue;
      const auto& zp = zeta_pow_[static_cast<size_t>(
          (n_ - static_cast<long>(j)) % n_)];
      for (size_t i = 0; i < deg_; ++i) r.coeffs[i] += a.coeffs[j] * zp[i];
    }
    return r;
  }

  bool is_real(const CycElem& a) const { return conj(a) == a; }

  /// Multiplicative inverse via extended Euclid against the cyclotomic
  /// polynomial; throws on zero.
  CycElem inverse(const CycElem& a) const {
    if (a.is_zero()) throw std::domain_error("CyclotomicField: inverse of 0");
    RatPoly r0 = phi_, r1 = unpad(a);
    RatPoly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty() && poly_deg(r1) > 0) {
      auto dv = poly_divmod(r0, r1);
      RatPoly r2 = dv.remainder;
      RatPoly s2 = poly_sub(s0, poly_mul(dv.quotient, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.empty())
      throw std::logic_error("CyclotomicField: unit gcd expected in a field");
    // r1 is a nonzero constant: a * s1 = r1 mod phi
    RatPoly inv = poly_scale(s1, Rat(1) / r1[0]);
    inv = poly_divmod(inv, phi_).remainder;
    CycElem e{this, pad(inv)};
    return e;
  }

  CycElem div(const CycElem& a, const CycElem& b) const {
    return mul(a, inverse(b));
  }

  /// Exact sign of a real element.  Zero is decided exactly; otherwise the
  /// numeric estimate is refined until it clears its own error bound.
  int sign_real(const CycElem& a) const {
    if (!is_real(a))
      throw std::domain_error("sign_real: element is not real");
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sign_of(a.coeffs[0]);
    for (int digits : {40, 80, 160, 320, 640, 1280, 2560}) {
      int s = try_sign(a, digits);
      if (s != 0) return s;
    }
    throw std::logic_error(
        "sign_real: interval refinement failed to separate a nonzero value");
  }

 private:
  std::vector<Rat> pad(const RatPoly& p) const {
    std::vector<Rat> c(deg_ ? deg_ : 1, Rat(0));
    for (size_t i = 0; i < p.size() && i < c.size(); ++i) c[i] = p[i];
    return c;
  }
  RatPoly unpad(const CycElem& a) const {
    RatPoly p = a.coeffs;
    poly_trim(p);
    return p;
  }

  template <unsigned D>
  int try_sign_impl(const CycElem& a) const {
    using F = boost::multiprecision::number<
        boost::multiprecision::cpp_bin_float<D>>;
    const F pi = acos(F(-1));
    F val = 0, magnitude = 0;
    for (size_t j = 0; j < deg_; ++j) {
      if (a.coeffs[j] == 0) continue;
      F c = static_cast<F>(a.coeffs[j]);
      val += c * cos(2 * pi * F(j) / F(n_));
      magnitude += abs(c);
    }
    F bound = (magnitude + 1) * pow(F(10), -static_cast<int>(D) + 6);
    if (val > bound) return 1;
    if (val < -bound) return -1;
    return 0;
  }

  int try_sign(const CycElem& a, int digits) const {
    switch (digits) {
      case 40: return try_sign_impl<40>(a);
      case 80: return try_sign_impl<80>(a);
      case 160: return try_sign_impl<160>(a);
      case 320: return try_sign_impl<320>(a);
      case 640: return try_sign_impl<640>(a);
      case 1280: return try_sign_impl<1280>(a);
      default: return try_sign_impl<2560>(a);
    }
  }

  long n_;
  size_t deg_;
  RatPoly phi_;
  std::vector<std::vector<Rat>> zeta_pow_;
};

}  // namespace loctor
