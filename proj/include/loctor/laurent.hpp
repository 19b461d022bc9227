#pragma once

// Laurent polynomial matrices over a subring of Q and the evaluation
// criteria that certify Z_(2)^t as a local module over R[Z]: a square matrix
// whose determinant at t = 1 is an R-unit has determinant at t = -1 a unit
// in Z_(2) (the two determinants differ by twice a ring element), and the
// evaluated system at t = -1 then solves uniquely with odd-denominator
// entries.  The trivial-action counterpart solves over R directly.

#include <loctor/linalg.hpp>
#include <loctor/numeric.hpp>
#include <loctor/subring.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctor {

struct LaurentPoly {
  std::map<long, Rat> coeffs;  // exponent -> coefficient, zeros absent

  LaurentPoly() = default;
  explicit LaurentPoly(std::map<long, Rat> c) : coeffs(std::move(c)) {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  }

  static LaurentPoly constant(const Rat& c) {
    return LaurentPoly(std::map<long, Rat>{{0, c}});
  }
  static LaurentPoly monomial(long e, const Rat& c) {
    return LaurentPoly(std::map<long, Rat>{{e, c}});
  }

  /// Value at t0 = +1 or -1.
  Rat eval_at_sign(int t0) const {
    Rat v = 0;
    for (const auto& [e, c] : coeffs)
      v += (t0 == 1 || e % 2 == 0) ? c : Rat(-c);
    return v;
  }

  bool coefficients_in(const SubringSpec& R) const {
    for (const auto& [e, c] : coeffs)
      if (!ring_contains(c, R)) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, c] : coeffs) j[std::to_string(e)] = format_rat(c);
    return j;
  }

  static LaurentPoly from_json(const nlohmann::json& j) {
    std::map<long, Rat> c;
    for (auto it = j.begin(); it != j.end(); ++it)
      c[std::stol(it.key())] = parse_rat(it.value().get<std::string>());
    return LaurentPoly(std::move(c));
  }
};

struct LaurentMatrix {
  std::vector<std::vector<LaurentPoly>> entries;  // square
  SubringSpec ring;

  LaurentMatrix(std::vector<std::vector<LaurentPoly>> e, SubringSpec r)
      : entries(std::move(e)), ring(std::move(r)) {
    for (const auto& row : entries) {
      if (row.size() != entries.size())
        throw std::invalid_argument("LaurentMatrix: must be square");
      for (const auto& p : row)
        if (!p.coefficients_in(ring))
          throw std::invalid_argument(
              "LaurentMatrix: coefficient outside the ring " + ring.tag);
    }
  }

  size_t size() const { return entries.size(); }

  RatMatrix eval(int t0) const {
    RatMatrix m(size(), std::vector<Rat>(size()));
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j)
        m[i][j] = entries[i][j].eval_at_sign(t0);
    return m;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["ring"] = ring.to_json();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : entries) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& p : row) r.push_back(p.to_json());
      rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
  }

  static LaurentMatrix from_json(const nlohmann::json& j) {
    SubringSpec ring = SubringSpec::from_json(j.at("ring"));
    std::vector<std::vector<LaurentPoly>> e;
    for (const auto& row : j.at("entries")) {
      e.emplace_back();
      for (const auto& p : row) e.back().push_back(LaurentPoly::from_json(p));
    }
    return LaurentMatrix(std::move(e), std::move(ring));
  }
};

/// Exact evaluation at t0 in {+1, -1}.
inline RatMatrix eval_matrix(const LaurentMatrix& A, int t0) {
  if (t0 != 1 && t0 != -1)
    throw std::invalid_argument("eval_matrix: only t = +1 / -1 are exposed");
  return A.eval(t0);
}

struct LocalityCriterion {
  bool unit_at_1;             // det A(1) a unit in R
  bool unit_at_minus1_in_Z2;  // det A(-1) a unit in Z_(2)
  bool parity_ok;             // (det A(1) - det A(-1))/2 lies in R
  Rat det_at_1, det_at_minus1;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["unit_at_1"] = unit_at_1;
    j["unit_at_minus1_in_Z2"] = unit_at_minus1_in_Z2;
    j["parity_ok"] = parity_ok;
    j["det_at_1"] = format_rat(det_at_1);
    j["det_at_minus1"] = format_rat(det_at_minus1);
    return j;
  }
};

/// The determinant/parity tests.  R must be a subring of Z_(2) (2 not
/// inverted); unit_at_1 implies unit_at_minus1_in_Z2, which the property
/// suite checks empirically.
inline LocalityCriterion locality_criterion(const LaurentMatrix& A,
                                            const SubringSpec& R) {
  if (ring_contains(Rat(1, 2), R))
    throw std::domain_error(
        "locality_criterion: R must be a subring of Z_(2) (2 not inverted)");
  Rat d1 = rational_det(eval_matrix(A, 1));
  Rat dm = rational_det(eval_matrix(A, -1));
  bool u1 = d1 != 0 && is_unit(d1, R);
  bool um = dm != 0 && is_unit(dm, SubringSpec::localized_at(2));
  bool parity = ring_contains((d1 - dm) / 2, R);
  return {u1, um, parity, d1, dm};
}

/// Solves A(-1) g = f exactly over Q and certifies every entry lies in
/// Z_(2).  Requires the criterion's unit_at_1 for the matrix's own ring;
/// entries leaving Z_(2) would contradict it, so that raises logic_error.
inline std::vector<Rat> solve_local(const LaurentMatrix& A,
                                    const std::vector<Rat>& f) {
  if (f.size() != A.size())
    throw std::invalid_argument("solve_local: dimension mismatch");
  auto crit = locality_criterion(A, A.ring);
  if (!crit.unit_at_1)
    throw std::domain_error(
        "solve_local: det A(1) is not a unit in " + A.ring.tag);
  auto sol = solve_linear(eval_matrix(A, -1), f);
  if (!sol)
    throw std::logic_error("solve_local: A(-1) singular despite unit det A(1)");
  for (const Rat& g : *sol)
    if (!ring_contains(g, SubringSpec::localized_at(2)))
      throw std::logic_error(
          "solve_local: solution entry " + format_rat(g) + " left Z_(2)");
  return *sol;
}

struct TrivialActionCertificate {
  Rat det;
  std::vector<Rat> solution;  // entrywise certified in R
};

/// Trivial-action counterpart: for a matrix over R with unit determinant,
/// B g = f solves uniquely over R itself.
inline TrivialActionCertificate trivial_action_locality(
    const RatMatrix& B, const std::vector<Rat>& f, const SubringSpec& R) {
  if (B.size() != f.size())
    throw std::invalid_argument("trivial_action_locality: dimension mismatch");
  for (const auto& row : B)
    for (const Rat& entry : row)
      if (!ring_contains(entry, R))
        throw std::invalid_argument(
            "trivial_action_locality: matrix entry outside " + R.tag);
  Rat d = rational_det(B);
  if (d == 0 || !is_unit(d, R))
    throw std::domain_error("trivial_action_locality: det = " +
                            format_rat(d) + " is not a unit in " + R.tag);
  auto sol = solve_linear(B, f);
  if (!sol)
    throw std::logic_error("trivial_action_locality: unit det yet singular");
  for (const Rat& g : *sol)
    if (!ring_contains(g, R))
      throw std::logic_error("trivial_action_locality: solution entry " +
                             format_rat(g) + " left " + R.tag);
  return {d, *sol};
}

}  // namespace loctor
