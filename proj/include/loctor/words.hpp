#pragma once

// Words over named generators, stored as freely reduced syllable lists.
// Text form: syllables separated by optional whitespace; a syllable is a
// generator name with an optional ^exponent ("a^-2"), a capitalized first
// letter meaning the inverse ("X1" = x1^-1), or a commutator [u,v] which
// expands to u v u^-1 v^-1.  Generator names are lowercase: [a-z][a-z0-9_]*.

#include <loctor/numeric.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctor {

struct Syllable {
  std::string gen;
  Int exp;

  bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> sylls) { for (auto& s : sylls) append(s); }

  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool empty() const { return sylls_.empty(); }

  void append(const Syllable& s) {
    if (s.exp == 0) return;
    if (!sylls_.empty() && sylls_.back().gen == s.gen) {
      sylls_.back().exp += s.exp;
      if (sylls_.back().exp == 0) sylls_.pop_back();
      // a cancellation can expose a new mergeable pair
      if (sylls_.size() >= 2) {
        Syllable last = sylls_.back();
        if (sylls_[sylls_.size() - 2].gen == last.gen) {
          sylls_.pop_back();
          append(last);
        }
      }
      return;
    }
    sylls_.push_back(s);
  }

  Word operator*(const Word& o) const {
    Word r = *this;
    for (const auto& s : o.sylls_) r.append(s);
    return r;
  }

  Word inverse() const {
    Word r;
    for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
      r.append({it->gen, -it->exp});
    return r;
  }

  /// Total exponent of a generator.
  Int exponent_sum(const std::string& gen) const {
    Int t = 0;
    for (const auto& s : sylls_)
      if (s.gen == gen) t += s.exp;
    return t;
  }

  /// Word with each occurrence of a generator renamed.
  Word renamed(const std::map<std::string, std::string>& names) const {
    Word r;
    for (const auto& s : sylls_) {
      auto it = names.find(s.gen);
      r.append({it == names.end() ? s.gen : it->second, s.exp});
    }
    return r;
  }

  std::string str() const {
    if (sylls_.empty()) return "1";
    std::string out;
    for (const auto& s : sylls_) {
      if (!out.empty()) out += " ";
      out += s.gen;
      if (s.exp != 1) out += "^" + s.exp.str();
    }
    return out;
  }

  bool operator==(const Word& o) const { return sylls_ == o.sylls_; }

  static Word parse(const std::string& text) {
    Word w;
    size_t i = 0;
    parse_into(w, text, i, false);
    if (i != text.size())
      throw std::invalid_argument("Word::parse: unexpected '" +
                                  std::string(1, text[i]) + "'");
    return w;
  }

 private:
  static void skip_ws(const std::string& t, size_t& i) {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) ||
                            t[i] == '*' || t[i] == '.'))
      ++i;
  }

  static void parse_into(Word& w, const std::string& t, size_t& i,
                         bool in_bracket) {
    skip_ws(t, i);
    while (i < t.size()) {
      char ch = t[i];
      if (ch == ']' || ch == ',') {
        if (!in_bracket)
          throw std::invalid_argument("Word::parse: stray '" +
                                      std::string(1, ch) + "'");
        return;
      }
      if (ch == '[') {
        ++i;
        Word u, v;
        parse_into(u, t, i, true);
        if (i >= t.size() || t[i] != ',')
          throw std::invalid_argument("Word::parse: expected ',' in commutator");
        ++i;
        parse_into(v, t, i, true);
        if (i >= t.size() || t[i] != ']')
          throw std::invalid_argument("Word::parse: expected ']'");
        ++i;
        w = w * u * v * u.inverse() * v.inverse();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        bool inverse = std::isupper(static_cast<unsigned char>(ch));
        std::string name(1, static_cast<char>(
                                std::tolower(static_cast<unsigned char>(ch))));
        ++i;
        while (i < t.size() &&
               (std::islower(static_cast<unsigned char>(t[i])) ||
                std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '_'))
          name += t[i++];
        Int e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          size_t start = i;
          if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
          while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            ++i;
          if (start == i)
            throw std::invalid_argument("Word::parse: malformed exponent");
          e = Int(t.substr(start, i - start));
        }
        w.append({name, inverse ? Int(-e) : e});
      } else {
        throw std::invalid_argument("Word::parse: unexpected '" +
                                    std::string(1, ch) + "'");
      }
      skip_ws(t, i);
    }
  }

  std::vector<Syllable> sylls_;
};

}  // namespace loctor
