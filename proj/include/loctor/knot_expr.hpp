#pragma once

// Tiny expression grammar for building Seifert matrices:
//
//   expr := ['-'] term (('+'|'-') term)*
//   term := [integer '*'] atom
//   atom := 'T(2,<odd>)' | 'mirror(' expr ')' | 'unknot' | '@<file>'
//           | '(' expr ')'
//
// '+' is connected sum, an integer multiple is an iterated connected sum,
// and '-' (or a negative multiple) takes mirror copies.  '@path' loads a
// matrix from a JSON file {"label":..., "rows": [[...]]}.

#include <loctor/seifert.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace loctor {

namespace detail {

class KnotExprParser {
 public:
  explicit KnotExprParser(const std::string& text) : t_(text) {}

  SeifertMatrix parse() {
    SeifertMatrix m = expr();
    skip_ws();
    if (pos_ != t_.size())
      throw std::invalid_argument("knot expression: trailing input at '" +
                                  t_.substr(pos_) + "'");
    return m;
  }

 private:
  SeifertMatrix expr() {
    skip_ws();
    bool neg = consume('-');
    SeifertMatrix acc = term();
    if (neg) acc = mirror(acc);
    while (true) {
      skip_ws();
      if (consume('+')) {
        acc = connected_sum(acc, term());
      } else if (consume('-')) {
        acc = connected_sum(acc, mirror(term()));
      } else {
        break;
      }
    }
    return acc;
  }

  SeifertMatrix term() {
    skip_ws();
    if (std::isdigit(peek())) {
      long count = integer();
      skip_ws();
      if (!consume('*'))
        throw std::invalid_argument("knot expression: expected '*' after count");
      SeifertMatrix base = atom();
      SeifertMatrix acc = SeifertMatrix::unknot();
      for (long i = 0; i < count; ++i) acc = connected_sum(acc, base);
      return acc;
    }
    return atom();
  }

  SeifertMatrix atom() {
    skip_ws();
    if (consume('(')) {
      SeifertMatrix m = expr();
      expect(')');
      return m;
    }
    if (peek() == '@') {
      ++pos_;
      std::string path;
      while (pos_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[pos_])) &&
             t_[pos_] != '+' && t_[pos_] != ')')
        path += t_[pos_++];
      std::ifstream in(path);
      if (!in)
        throw std::invalid_argument("knot expression: cannot open '" + path + "'");
      nlohmann::json j;
      in >> j;
      return SeifertMatrix::from_json(j);
    }
    if (match_word("unknot")) return SeifertMatrix::unknot();
    if (match_word("mirror")) {
      expect('(');
      SeifertMatrix m = expr();
      expect(')');
      return mirror(m);
    }
    if (match_word("T")) {
      expect('(');
      long two = integer();
      if (two != 2)
        throw std::invalid_argument("knot expression: only T(2,n) is built in");
      expect(',');
      long n = integer();
      expect(')');
      return SeifertMatrix::torus_2(n);
    }
    throw std::invalid_argument("knot expression: expected a knot at '" +
                                t_.substr(pos_) + "'");
  }

  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  bool consume(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    skip_ws();
    if (!consume(ch))
      throw std::invalid_argument(std::string("knot expression: expected '") +
                                  ch + "'");
  }
  void skip_ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_])))
      ++pos_;
  }
  bool match_word(const std::string& w) {
    skip_ws();
    if (t_.compare(pos_, w.size(), w) == 0) {
      // a word must not continue as an identifier
      size_t end = pos_ + w.size();
      if (end >= t_.size() || !std::isalnum(static_cast<unsigned char>(t_[end]))) {
        pos_ = end;
        return true;
      }
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])))
      ++pos_;
    if (start == pos_)
      throw std::invalid_argument("knot expression: expected an integer");
    return std::stol(t_.substr(start, pos_ - start));
  }

  std::string t_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Parse a knot expression into its Seifert matrix; the expression itself
/// becomes the label.
inline SeifertMatrix parse_knot_expr(const std::string& text) {
  SeifertMatrix m = detail::KnotExprParser(text).parse();
  m.set_label(text);
  return m;
}

}  // namespace loctor
