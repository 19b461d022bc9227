#pragma once

// Subrings of Q described by their set of inverted primes.  The set is stored
// either explicitly ({p} for Z[1/p]) or as the complement of a finite set
// (all primes except p for Z_(p)); both membership and unit tests then need
// no factorization beyond trial division by the listed primes.

#include <loctor/numeric.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace loctor {

struct SubringSpec {
  // When complement == false the inverted primes are exactly `primes`;
  // when true they are all primes not in `primes`.
  bool complement = false;
  std::vector<Int> primes;  // sorted, distinct, each prime
  std::string tag;

  static SubringSpec integers() { return SubringSpec{false, {}, "Z"}; }

  /// Z_(p): every prime except p inverted.
  static SubringSpec localized_at(const Int& p) {
    check_prime(p);
    return SubringSpec{true, {p}, "Z_(" + p.str() + ")"};
  }

  /// Z[1/p]: only p inverted.
  static SubringSpec inverting(const Int& p) {
    check_prime(p);
    return SubringSpec{false, {p}, "Z[1/" + p.str() + "]"};
  }

  static SubringSpec make(bool complement_, std::vector<Int> primes_,
                          std::string tag_ = "") {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (const Int& p : primes_) check_prime(p);
    if (tag_.empty()) tag_ = derive_tag(complement_, primes_);
    return SubringSpec{complement_, std::move(primes_), std::move(tag_)};
  }

  bool operator==(const SubringSpec& o) const {
    return complement == o.complement && primes == o.primes;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    auto key = complement ? "inverted_complement" : "inverted";
    std::vector<std::string> ps;
    for (const Int& p : primes) ps.push_back(p.str());
    j[key] = ps;
    return j;
  }

  static SubringSpec from_json(const nlohmann::json& j) {
    bool comp = j.contains("inverted_complement");
    if (!comp && !j.contains("inverted"))
      throw std::invalid_argument(
          "SubringSpec: expected 'inverted' or 'inverted_complement'");
    std::vector<Int> ps;
    for (const auto& e : j[comp ? "inverted_complement" : "inverted"]) {
      if (e.is_string())
        ps.emplace_back(e.get<std::string>());
      else
        ps.emplace_back(e.get<long long>());
    }
    return make(comp, std::move(ps));
  }

 private:
  static void check_prime(const Int& p) {
    if (!is_prime(p))
      throw std::invalid_argument("SubringSpec: " + p.str() + " is not prime");
  }
  static std::string derive_tag(bool comp, const std::vector<Int>& ps) {
    std::string s = comp ? "Z_(" : "Z[1/";
    for (size_t i = 0; i < ps.size(); ++i)
      s += (i ? "," : "") + ps[i].str();
    s += comp ? ")" : "]";
    return ps.empty() ? (comp ? "Q" : "Z") : s;
  }
};

/// True iff every prime factor of q's denominator is inverted in R.
inline bool ring_contains(const Rat& q, const SubringSpec& R) {
  Int d = den(q);
  if (R.complement) {
    // denominator must avoid the non-inverted primes
    for (const Int& p : R.primes)
      if (d % p == 0) return false;
    return true;
  }
  for (const Int& p : R.primes)
    while (d % p == 0) d /= p;
  return d == 1;
}

/// True iff q and 1/q both lie in R.  Rejects q = 0.
inline bool is_unit(const Rat& q, const SubringSpec& R) {
  if (q == 0) throw std::domain_error("is_unit: zero is never a unit");
  return ring_contains(q, R) && ring_contains(Rat(den(q), abs(num(q))), R);
}

inline bool is_unit(const Int& n, const SubringSpec& R) {
  return is_unit(Rat(n), R);
}

}  // namespace loctor
