#pragma once

// Finitely presented groups as generator lists plus relator words, with the
// relator exponent matrix that abelianization needs.

#include <loctor/numeric.hpp>
#include <loctor/words.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace loctor {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> gens, std::vector<Word> rels)
      : generators(std::move(gens)), relators(std::move(rels)) {
    std::set<std::string> known(generators.begin(), generators.end());
    if (known.size() != generators.size())
      throw std::invalid_argument("GroupPresentation: duplicate generator");
    for (const auto& r : relators)
      for (const auto& s : r.syllables())
        if (!known.count(s.gen))
          throw std::invalid_argument(
              "GroupPresentation: relator uses undeclared generator '" +
              s.gen + "'");
  }

  bool has_generator(const std::string& g) const {
    return std::find(generators.begin(), generators.end(), g) !=
           generators.end();
  }

  /// Rows = relators, columns = generators, entries = exponent sums.
  std::vector<std::vector<Int>> relator_exponent_matrix() const {
    std::vector<std::vector<Int>> m;
    for (const auto& r : relators) {
      m.emplace_back();
      for (const auto& g : generators) m.back().push_back(r.exponent_sum(g));
    }
    return m;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["generators"] = generators;
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : relators) rels.push_back(r.str());
    j["relators"] = std::move(rels);
    return j;
  }

  static GroupPresentation from_json(const nlohmann::json& j) {
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
    std::vector<Word> rels;
    if (j.contains("relators"))
      for (const auto& r : j.at("relators"))
        rels.push_back(Word::parse(r.get<std::string>()));
    return GroupPresentation(std::move(gens), std::move(rels));
  }
};

/// The tower presentation at odd stage s = 2k-1, on generators x, y, t.
inline GroupPresentation tower_stage_presentation(const Int& s) {
  if (s < 1 || is_even(s))
    throw std::invalid_argument("tower_stage_presentation: stage must be odd");
  Word z = Word::parse("[x,y]");
  std::vector<Word> rels;
  Word zs;  // [x,y]^{s^2}
  for (Int i = 0; i < s * s; ++i) zs = zs * z;
  rels.push_back(zs);
  for (const char* g : {"t", "x", "y"})
    rels.push_back(z * Word::parse(g) * z.inverse() *
                   Word::parse(g).inverse());
  rels.push_back(Word::parse("t x T x"));
  rels.push_back(Word::parse("t y T y"));
  return GroupPresentation({"x", "y", "t"}, std::move(rels));
}

}  // namespace loctor
