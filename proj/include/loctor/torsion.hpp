#pragma once

// The torsion group Z_(2)/Z: cosets of rationals with odd denominator.
// Canonical representative is the unique reduced fraction u/m in [0,1); all
// equality is structural equality of canonical forms, and the order of a
// coset is the denominator of its representative.

#include <loctor/numeric.hpp>

#include <stdexcept>

namespace loctor {

class TorsionCoset {
 public:
  TorsionCoset() : rep_(0) {}

  explicit TorsionCoset(const Rat& q) : rep_(mod1(q)) {
    if (is_even(den(rep_)))
      throw std::invalid_argument(
          "TorsionCoset: representative must have odd denominator, got " +
          format_rat(rep_));
  }

  static TorsionCoset zero() { return TorsionCoset(); }

  const Rat& representative() const { return rep_; }
  Int order() const { return den(rep_); }
  bool is_zero() const { return rep_ == 0; }

  friend TorsionCoset operator+(const TorsionCoset& x, const TorsionCoset& y) {
    return TorsionCoset(x.rep_ + y.rep_);
  }
  friend TorsionCoset operator-(const TorsionCoset& x) {
    return TorsionCoset(-x.rep_);
  }
  friend TorsionCoset operator-(const TorsionCoset& x, const TorsionCoset& y) {
    return TorsionCoset(x.rep_ - y.rep_);
  }
  friend bool operator==(const TorsionCoset& x, const TorsionCoset& y) {
    return x.rep_ == y.rep_;
  }
  friend bool operator!=(const TorsionCoset& x, const TorsionCoset& y) {
    return !(x == y);
  }

  /// The unique coset with p-power order whose difference from *this has
  /// order coprime to p (Chinese remainder splitting of the denominator).
  TorsionCoset p_primary_part(const Int& p) const {
    if (p == 2 || !is_prime(p))
      throw std::domain_error("p_primary_part: p must be an odd prime");
    Int m = den(rep_);
    Int pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (pk == 1) return TorsionCoset();
    // 1/(pk*m) = alpha/pk + beta/m with alpha = m^{-1} mod pk
    Int alpha = mod_inverse(m, pk);
    return TorsionCoset(Rat(num(rep_) * alpha, pk));
  }

 private:
  Rat rep_;  // canonical: in [0,1), odd denominator
};

}  // namespace loctor
