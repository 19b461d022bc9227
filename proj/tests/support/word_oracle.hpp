#pragma once

// Independent word-rewriting oracle for the tower presentation at a finite
// odd stage s.  A word over xXyYtT is collected into the shape
// z^ez t^c x^a y^b by repeatedly applying the defining relations as rewrite
// rules on the raw letter sequence:
//
//   x t -> t x^-1      y t -> t y^-1      (and case variants)
//   y x -> z^-1 x y    y x^-1 -> z x^-1 y (etc.; z is central, order s^2)
//
// This never uses the closed-form cocycle of tower.hpp: it exists to certify
// that formula.  Exponents stay tiny, so plain machine integers suffice.

#include <loctor/tower.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

namespace loctor_test {

struct CollectedWord {
  std::int64_t ez = 0;  // z-exponent, reduced mod s^2
  std::int64_t c = 0;   // t-exponent
  std::int64_t a = 0;   // x-exponent (in stage-s generator units)
  std::int64_t b = 0;   // y-exponent
};

inline CollectedWord collect_word(const std::string& word, std::int64_t s) {
  auto cls = [](char ch) {  // target order: t < x < y
    char l = static_cast<char>(std::tolower(ch));
    return l == 't' ? 0 : (l == 'x' ? 1 : 2);
  };
  auto sgn = [](char ch) { return std::islower(ch) ? +1 : -1; };
  auto flip = [](char ch) -> char {
    return std::islower(ch) ? static_cast<char>(std::toupper(ch))
                            : static_cast<char>(std::tolower(ch));
  };

  std::vector<char> w(word.begin(), word.end());
  std::int64_t ez = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      char u = w[i], v = w[i + 1];
      if (cls(u) <= cls(v)) continue;
      if (cls(v) == 0) {
        // moving a t-letter left inverts what it passes over
        w[i] = v;
        w[i + 1] = flip(u);
      } else {
        // y-letter passing left over an x-letter emits a central z
        ez -= sgn(u) * sgn(v);
        w[i] = v;
        w[i + 1] = u;
      }
      changed = true;
      break;
    }
  }

  CollectedWord out;
  for (char ch : w) {
    int e = sgn(ch);
    switch (std::tolower(ch)) {
      case 't': out.c += e; break;
      case 'x': out.a += e; break;
      case 'y': out.b += e; break;
    }
  }
  std::int64_t s2 = s * s;
  out.ez = ((ez % s2) + s2) % s2;
  return out;
}

/// The collected word as a colimit-coordinate element (stage-s generator has
/// coordinate 1/s, z has coordinate 1/s^2).
inline loctor::TowerElement oracle_normalize(const std::string& word,
                                             std::int64_t s) {
  CollectedWord cw = collect_word(word, s);
  using loctor::Int;
  using loctor::Rat;
  return loctor::TowerElement(
      loctor::TorsionCoset(loctor::mod1(Rat(cw.ez, s * s))), Int(cw.c),
      Rat(cw.a, s), Rat(cw.b, s));
}

}  // namespace loctor_test
