#pragma once

// Systems of equations x_i^e = w_i over a finitely presented group, with e
// invertible in the coefficient ring and every w_i of zero exponent sum in
// the variables.  Adjoining a solution appends generators z_i and relators
// z_i^-e w_i(z); the relative chain complex of that move is governed by the
// variable-exponent boundary matrix, which is -e * I exactly when the
// system is valid, so its determinant (-e)^n being a unit certifies an
// R-homology cobordism at the chain level.

#include <loctor/linalg.hpp>
#include <loctor/numeric.hpp>
#include <loctor/presentation.hpp>
#include <loctor/smith.hpp>
#include <loctor/subring.hpp>
#include <loctor/words.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace loctor {

struct EquationSystem {
  GroupPresentation base;
  int n = 0;          // number of variables x1..xn
  Int e = 1;          // exponent, positive
  std::vector<Word> words;  // w_i over base generators and x1..xn

  EquationSystem() = default;
  EquationSystem(GroupPresentation base_, int n_, Int e_,
                 std::vector<Word> words_)
      : base(std::move(base_)), n(n_), e(std::move(e_)), words(std::move(words_)) {
    if (n < 0 || e < 1)
      throw std::invalid_argument("EquationSystem: need n >= 0 and e >= 1");
    if (static_cast<int>(words.size()) != n)
      throw std::invalid_argument("EquationSystem: need one word per variable");
    std::set<std::string> known(base.generators.begin(),
                                base.generators.end());
    for (int i = 1; i <= n; ++i) known.insert(variable_name(i));
    for (const auto& w : words)
      for (const auto& s : w.syllables())
        if (!known.count(s.gen))
          throw std::invalid_argument(
              "EquationSystem: undeclared symbol '" + s.gen + "' in a word");
  }

  static std::string variable_name(int i) { return "x" + std::to_string(i); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["base"] = base.to_json();
    j["n"] = n;
    j["e"] = e.str();
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : words) ws.push_back(w.str());
    j["words"] = std::move(ws);
    return j;
  }

  static EquationSystem from_json(const nlohmann::json& j) {
    auto base = GroupPresentation::from_json(j.at("base"));
    int n = j.at("n").get<int>();
    Int e = j.at("e").is_string() ? Int(j.at("e").get<std::string>())
                                  : Int(j.at("e").get<long long>());
    std::vector<Word> words;
    for (const auto& w : j.at("words"))
      words.push_back(Word::parse(w.get<std::string>()));
    return EquationSystem(std::move(base), n, std::move(e), std::move(words));
  }
};

struct ValidationReport {
  bool ok;
  std::string diagnostic;  // names the first violation when !ok
};

/// Both system invariants: 1/e lies in R, and every variable has zero
/// exponent sum in every word.
inline ValidationReport validate_system(const EquationSystem& s,
                                        const SubringSpec& R) {
  if (!ring_contains(Rat(1, s.e), R))
    return {false, "exponent e = " + s.e.str() + " is not invertible in " +
                       R.tag};
  for (int i = 0; i < s.n; ++i) {
    for (int j = 1; j <= s.n; ++j) {
      Int sum = s.words[static_cast<size_t>(i)].exponent_sum(
          EquationSystem::variable_name(j));
      if (sum != 0)
        return {false, "word " + std::to_string(i + 1) +
                           ": exponent sum of x" + std::to_string(j) +
                           " is " + sum.str()};
    }
  }
  return {true, ""};
}

/// The presentation obtained by adjoining a solution: fresh generators
/// z<k> (smallest indices avoiding the base's names, so adjunctions
/// compose), plus relators z_i^-e w_i(z).
inline GroupPresentation adjoin(const EquationSystem& s) {
  std::vector<std::string> gens = s.base.generators;
  std::map<std::string, std::string> rename;
  std::vector<std::string> fresh;
  int next = 1;
  for (int i = 1; i <= s.n; ++i) {
    std::string name;
    do {
      name = "z" + std::to_string(next++);
    } while (s.base.has_generator(name));
    fresh.push_back(name);
    rename[EquationSystem::variable_name(i)] = name;
    gens.push_back(name);
  }
  std::vector<Word> rels = s.base.relators;
  for (int i = 0; i < s.n; ++i) {
    Word zi;
    zi.append({fresh[static_cast<size_t>(i)], -s.e});
    rels.push_back(zi * s.words[static_cast<size_t>(i)].renamed(rename));
  }
  return GroupPresentation(std::move(gens), std::move(rels));
}

/// Entry (i,j) = exponent sum of variable j in the relator x_i^-e w_i.
/// Equals -e * I for every valid system; computable on invalid input too,
/// where the off-pattern rows expose the violation.
inline std::vector<std::vector<Int>> boundary_matrix(const EquationSystem& s) {
  std::vector<std::vector<Int>> m(static_cast<size_t>(s.n),
                                  std::vector<Int>(static_cast<size_t>(s.n)));
  for (int i = 0; i < s.n; ++i) {
    for (int j = 1; j <= s.n; ++j) {
      Int sum = s.words[static_cast<size_t>(i)].exponent_sum(
          EquationSystem::variable_name(j));
      if (j - 1 == i) sum -= s.e;
      m[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = sum;
    }
  }
  return m;
}

struct HomologyCertificate {
  bool h_relative_trivial;
  Int det;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["h_relative_trivial"] = h_relative_trivial;
    j["det"] = det.str();
    return j;
  }
};

/// det(boundary matrix) = (-e)^n; the relative handle chain complex is
/// acyclic over R exactly when that determinant is an R-unit.
inline HomologyCertificate homology_certificate(const EquationSystem& s,
                                                const SubringSpec& R) {
  Int d = bareiss_det(boundary_matrix(s));
  return {d != 0 && is_unit(Rat(d), R), d};
}

}  // namespace loctor
