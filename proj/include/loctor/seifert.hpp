#pragma once

// Integer Seifert matrices with the built-in T(2,n) torus knot library.
// A valid matrix A satisfies det(A - A^T) = 1; the empty matrix is the
// unknot.  T(2,n) for odd n is realized by the (n-1) x (n-1) bidiagonal
// matrix with -1 on the diagonal and +1 on the superdiagonal (so the
// trefoil T(2,3) is [[-1,1],[0,-1]]); its Alexander roots all lie at
// rational angles, which keeps every downstream computation exact.

#include <loctor/linalg.hpp>
#include <loctor/numeric.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loctor {

class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // unknot

  SeifertMatrix(IntMatrix rows, std::string label = "")
      : rows_(std::move(rows)), label_(std::move(label)) {
    for (const auto& r : rows_)
      if (r.size() != rows_.size())
        throw std::invalid_argument("SeifertMatrix: matrix must be square");
    IntMatrix skew(rows_.size(), std::vector<Int>(rows_.size()));
    for (size_t i = 0; i < rows_.size(); ++i)
      for (size_t j = 0; j < rows_.size(); ++j)
        skew[i][j] = rows_[i][j] - rows_[j][i];
    if (bareiss_det(std::move(skew)) != 1)
      throw std::invalid_argument(
          "SeifertMatrix: det(A - A^T) must be 1 (not a Seifert pairing)");
  }

  static SeifertMatrix unknot() { return SeifertMatrix({}, "unknot"); }

  /// T(2,n) for odd n >= 1 (n = 1 gives the unknot).
  static SeifertMatrix torus_2(long n) {
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("torus_2: need odd n >= 1");
    size_t size = static_cast<size_t>(n - 1);
    IntMatrix m(size, std::vector<Int>(size, Int(0)));
    for (size_t i = 0; i < size; ++i) {
      m[i][i] = -1;
      if (i + 1 < size) m[i][i + 1] = 1;
    }
    return SeifertMatrix(std::move(m), "T(2," + std::to_string(n) + ")");
  }

  size_t size() const { return rows_.size(); }
  const IntMatrix& rows() const { return rows_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const Int& at(size_t i, size_t j) const { return rows_[i][j]; }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.rows_ == b.rows_;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label_;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : rows_) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& e : r) row.push_back(e.convert_to<long long>());
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
  }

  static SeifertMatrix from_json(const nlohmann::json& j) {
    IntMatrix m;
    for (const auto& row : j.at("rows")) {
      m.emplace_back();
      for (const auto& e : row) m.back().emplace_back(e.get<long long>());
    }
    std::string label = j.value("label", "");
    return SeifertMatrix(std::move(m), std::move(label));
  }

 private:
  IntMatrix rows_;
  std::string label_;
};

/// Block sum; every signature invariant is additive across it.
inline SeifertMatrix connected_sum(const SeifertMatrix& a,
                                   const SeifertMatrix& b) {
  size_t n = a.size(), m = b.size();
  IntMatrix s(n + m, std::vector<Int>(n + m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s[i][j] = a.at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) s[n + i][n + j] = b.at(i, j);
  std::string label;
  if (a.size() == 0) label = b.label();
  else if (b.size() == 0) label = a.label();
  else label = a.label() + "+" + b.label();
  return SeifertMatrix(std::move(s), std::move(label));
}

/// Mirror image: -A^T; negates the signature function pointwise.
inline SeifertMatrix mirror(const SeifertMatrix& a) {
  size_t n = a.size();
  IntMatrix m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = -a.at(j, i);
  return SeifertMatrix(std::move(m), n ? "mirror(" + a.label() + ")" : "unknot");
}

}  // namespace loctor
