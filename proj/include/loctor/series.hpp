#pragma once

// Transfinite lower central series and mixed-coefficient commutator series
// membership for the tower groups, in closed form:
//
//   lcs q=1          : everything
//   lcs q>=2         : c = 0,  a, b in 2^{q-1} Z_(2)   (d unconstrained)
//   lcs omega        : c = 0,  a = b = 0               (the torsion subgroup)
//   lcs omega+1      : identity only
//
//   mixed n=1        : c = 0,  a, b in 2 Z_(2)         (commutator subgroup)
//   mixed n=2        : torsion
//   mixed n=3        : torsion of order coprime to p   (all torsion if p = 2)
//
// The finite lcs terms are generated by x^{2^{q-1}}, y^{2^{q-1}} at each
// stage; the commutator-closure property suite certifies the closed forms
// against brute-force commutators.  The mixed series uses the coefficient
// sequence (Z, Z, Z_(p)): its third stage separates p-torsion from torsion
// of order coprime to p, which is what the quotient map project_P3 realizes.

#include <loctor/numeric.hpp>
#include <loctor/torsion.hpp>
#include <loctor/tower.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>

namespace loctor {

struct SeriesIndex {
  enum class Kind { lcs_finite, lcs_omega, lcs_omega_plus_1, mixed };

  Kind kind;
  Int q;  // lcs_finite only, q >= 1
  int n;  // mixed only, 1..3
  Int p;  // mixed only, prime

  static SeriesIndex lcs(const Int& q_) {
    if (q_ < 1) throw std::invalid_argument("SeriesIndex: lcs index q >= 1");
    return {Kind::lcs_finite, q_, 0, 0};
  }
  static SeriesIndex omega() { return {Kind::lcs_omega, 0, 0, 0}; }
  static SeriesIndex omega_plus_1() { return {Kind::lcs_omega_plus_1, 0, 0, 0}; }
  static SeriesIndex mixed_term(int n_, const Int& p_) {
    if (n_ < 1 || n_ > 3)
      throw std::invalid_argument("SeriesIndex: mixed index n must be 1..3");
    if (!is_prime(p_))
      throw std::invalid_argument("SeriesIndex: mixed index needs a prime p");
    return {Kind::mixed, 0, n_, p_};
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    switch (kind) {
      case Kind::lcs_finite: j["kind"] = "lcs"; j["q"] = q.str(); break;
      case Kind::lcs_omega: j["kind"] = "omega"; break;
      case Kind::lcs_omega_plus_1: j["kind"] = "omega1"; break;
      case Kind::mixed:
        j["kind"] = "mixed";
        j["n"] = n;
        j["p"] = p.str();
        break;
    }
    return j;
  }

  static SeriesIndex from_json(const nlohmann::json& j) {
    auto to_int = [](const nlohmann::json& v) {
      return v.is_string() ? Int(v.get<std::string>())
                           : Int(v.get<long long>());
    };
    std::string k = j.at("kind").get<std::string>();
    if (k == "lcs") return lcs(to_int(j.at("q")));
    if (k == "omega") return omega();
    if (k == "omega1") return omega_plus_1();
    if (k == "mixed") return mixed_term(j.at("n").get<int>(), to_int(j.at("p")));
    throw std::invalid_argument("SeriesIndex: unknown kind '" + k + "'");
  }
};

namespace detail {
// a in 2^k Z_(2)  <=>  2^k divides the (odd-denominator) numerator.
inline bool in_two_power_multiple(const Rat& a, const Int& k) {
  if (a == 0) return true;
  Int n = num(a);
  for (Int i = 0; i < k; ++i) {
    if (is_odd(n)) return false;
    n /= 2;
  }
  return true;
}
}  // namespace detail

inline bool series_member(const TowerElement& g, const SeriesIndex& idx) {
  switch (idx.kind) {
    case SeriesIndex::Kind::lcs_finite:
      if (idx.q == 1) return true;
      return g.c == 0 && detail::in_two_power_multiple(g.a, idx.q - 1) &&
             detail::in_two_power_multiple(g.b, idx.q - 1);
    case SeriesIndex::Kind::lcs_omega:
      return g.c == 0 && g.a == 0 && g.b == 0;
    case SeriesIndex::Kind::lcs_omega_plus_1:
      return g.is_identity();
    case SeriesIndex::Kind::mixed:
      switch (idx.n) {
        case 1:
          return g.c == 0 && detail::in_two_power_multiple(g.a, 1) &&
                 detail::in_two_power_multiple(g.b, 1);
        case 2:
          return g.c == 0 && g.a == 0 && g.b == 0;
        default:  // n == 3
          if (!(g.c == 0 && g.a == 0 && g.b == 0)) return false;
          if (idx.p == 2) return true;  // third term equals the second
          return g.d.order() % idx.p != 0;
      }
  }
  return false;  // unreachable
}

// Image of a tower element in the quotient by the third mixed term.  For odd
// p this is a central extension of (Z_(2)^t)^2 x| Z by Z[1/p]/Z and the
// z-coordinate survives as its p-primary part; for p = 2 the quotient is
// (Z_(2)^t)^2 x| Z and the z-coordinate is dropped entirely.
struct P3QuotientElement {
  Int p;
  std::optional<TorsionCoset> dp;  // engaged iff p odd; denominator a p-power
  Int c;
  Rat a, b;

  bool is_identity() const {
    return (!dp || dp->is_zero()) && c == 0 && a == 0 && b == 0;
  }

  friend bool operator==(const P3QuotientElement& g,
                         const P3QuotientElement& h) {
    return g.p == h.p && g.dp == h.dp && g.c == h.c && g.a == h.a && g.b == h.b;
  }
  friend bool operator!=(const P3QuotientElement& g,
                         const P3QuotientElement& h) {
    return !(g == h);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p.str();
    if (dp) j["dp"] = format_rat(dp->representative());
    j["c"] = c.str();
    j["a"] = format_rat(a);
    j["b"] = format_rat(b);
    return j;
  }
};

inline P3QuotientElement project_P3(const TowerElement& g, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("project_P3: p must be prime");
  if (p == 2) return P3QuotientElement{p, std::nullopt, g.c, g.a, g.b};
  return P3QuotientElement{p, g.d.p_primary_part(p), g.c, g.a, g.b};
}

/// The quotient group law: same cocycle with the central part projected.
inline P3QuotientElement mul(const P3QuotientElement& g,
                             const P3QuotientElement& h) {
  if (g.p != h.p)
    throw std::invalid_argument("P3 quotient: mixing different primes");
  bool flip = is_odd(h.c);
  Rat a1 = flip ? Rat(-g.a) : g.a;
  Rat b1 = flip ? Rat(-g.b) : g.b;
  std::optional<TorsionCoset> dp;
  if (g.p != 2) {
    TorsionCoset inc = TorsionCoset(mod1(h.a * b1)).p_primary_part(g.p);
    dp = *g.dp + *h.dp - inc;
  }
  return P3QuotientElement{g.p, dp, g.c + h.c, a1 + h.a, b1 + h.b};
}

/// Order in the quotient: infinite unless the non-central coordinates
/// vanish; then a p-power (or 1 when p = 2).
inline std::optional<Int> quotient_order(const P3QuotientElement& g) {
  if (g.c != 0 || g.a != 0 || g.b != 0) return std::nullopt;
  return g.dp ? g.dp->order() : Int(1);
}

/// True iff g lies in every finite lower central term up to q_max; for
/// torsion elements this coincides with omega-term membership.
inline bool nilpotent_invisible(const TowerElement& g, const Int& q_max) {
  if (q_max < 2)
    throw std::invalid_argument("nilpotent_invisible: q_max >= 2 required");
  for (Int q = 2; q <= q_max; ++q)
    if (!series_member(g, SeriesIndex::lcs(q))) return false;
  return true;
}

/// True iff g dies in the q-th nilpotent quotient Ghat / Ghat_q.
inline bool nilpotent_quotient_kills(const TowerElement& g, const Int& q) {
  return series_member(g, SeriesIndex::lcs(q));
}

struct LcsLengthReport {
  std::string length_tag;  // "omega" or "omega+1"
  std::optional<TowerElement> witness;
};

/// Length of the transfinite lower central series at a stage.  Stage 1 has
/// trivial omega-term (length omega); every later stage and the colimit has
/// a nontrivial central omega-term witnessed by z, so length omega+1.
inline LcsLengthReport lcs_length_report(const Stage& stage) {
  if (stage.is_finite() && *stage.level == 1)
    return {"omega", std::nullopt};
  if (stage.is_finite())
    return {"omega+1", TowerElement::gen_z(stage)};
  // any nontrivial torsion element witnesses the colimit's omega-term
  return {"omega+1", TowerElement(TorsionCoset(Rat(1, 3)), 0, 0, 0)};
}

}  // namespace loctor
