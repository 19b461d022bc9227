#pragma once

// Homology-cobordism obstruction values.  For a knot K with Seifert matrix A
// and an odd prime p, the obstruction attached to the corresponding
// 3-manifold is the exact rational
//
//     delta_rho(A, p) = root_sum(A, p) / p,
//
// the difference of two signature-defect invariants whose common base value
// is not computable from matrix data; only differences ever appear here, so
// distinct values obstruct homology cobordism while equal values decide
// nothing ("inconclusive", never "cobordant").

#include <loctor/numeric.hpp>
#include <loctor/seifert.hpp>
#include <loctor/signature.hpp>

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <vector>

namespace loctor {

inline void require_odd_prime(const Int& p, const char* who) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

/// root_sum(A, p) / p, exactly.
inline Rat delta_rho(const SeifertMatrix& A, const Int& p) {
  require_odd_prime(p, "delta_rho");
  return Rat(root_sum(A, p), p);
}

struct ObstructionValue {
  int copies;      // how many connected-sum copies of the base knot
  Rat value;       // delta_rho of the i-fold sum
  std::string knot;
};

struct FamilyTable {
  std::vector<ObstructionValue> rows;
  bool pairwise_distinct;
  Int p;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p.str();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["copies"] = r.copies;
      row["delta_rho"] = format_rat(r.value);
      row["decimal"] = format_decimal(r.value);
      row["knot"] = r.knot;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    j["pairwise_distinct"] = pairwise_distinct;
    return j;
  }
};

/// Values for the 0..n_max fold connected sums of A; the i-fold sum has
/// delta_rho exactly i times the base value (additivity of root_sum).
inline FamilyTable family_table(const SeifertMatrix& A, const Int& p,
                                int n_max) {
  require_odd_prime(p, "family_table");
  if (n_max < 1) throw std::invalid_argument("family_table: n_max >= 1");
  Rat base = delta_rho(A, p);
  FamilyTable t;
  t.p = p;
  std::set<Rat> seen;
  for (int i = 0; i <= n_max; ++i) {
    Rat v = Rat(i) * base;
    std::string name = i == 0 ? "unknot" : std::to_string(i) + "*(" + A.label() + ")";
    t.rows.push_back({i, v, name});
    seen.insert(v);
  }
  t.pairwise_distinct = seen.size() == t.rows.size();
  return t;
}

struct ObstructionReport {
  std::string verdict;  // "obstructed" or "inconclusive"
  Rat value_i, value_j;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["verdict"] = verdict;
    j["values"] = {format_rat(value_i), format_rat(value_j)};
    return j;
  }
};

/// Compares the obstruction values of two knots' associated 3-manifolds.
/// Distinct values rule out homology cobordism; equal values decide nothing.
inline ObstructionReport obstruction_report(const SeifertMatrix& A_i,
                                            const SeifertMatrix& A_j,
                                            const Int& p) {
  require_odd_prime(p, "obstruction_report");
  Rat vi = delta_rho(A_i, p), vj = delta_rho(A_j, p);
  return {vi != vj ? "obstructed" : "inconclusive", vi, vj};
}

struct StarReport {
  bool sum_nonzero;
  bool integral_zero;
  bool star;
  Int sum;
  Rat integral;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["sum_nonzero"] = sum_nonzero;
    j["integral_zero"] = integral_zero;
    j["star"] = star;
    j["root_sum"] = sum.str();
    j["integral"] = format_rat(integral);
    return j;
  }
};

/// Evaluates both halves of the two-part condition exactly.
inline StarReport star_certificate(const SeifertMatrix& A, const Int& p) {
  require_odd_prime(p, "star_certificate");
  Int s = root_sum(A, p);
  Rat integral = circle_integral(A);
  bool nz = s != 0, iz = integral == 0;
  return {nz, iz, nz && iz, s, integral};
}

}  // namespace loctor
