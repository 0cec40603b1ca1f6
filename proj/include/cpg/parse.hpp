#pragma once

// Plain-text word syntax:  word := term+ ;  term := generator ('^' int)? ;
// generator := ('x' | 'y') 1-based-index | 'a' | 'c'.  Terms are
// whitespace separated and exponents expand letter by letter, so
// parse(print(w)) == w and printing a parsed canonical form is the
// identity.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "two_gen.hpp"
#include "word.hpp"

namespace cpg {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at character " + std::to_string(pos + 1) + ")"),
        position(pos) {}
};

namespace detail {

struct Token {
  char kind;       // 'x', 'y', 'a', 'c'
  long long index; // for x/y
  long long exponent;
  std::size_t pos;
};

inline std::vector<Token> tokenize_word(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t N = text.size();
  while (i < N) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Token t{};
    t.pos = i;
    char c = text[i];
    if (c != 'x' && c != 'y' && c != 'a' && c != 'c')
      throw ParseError("expected generator x<i>, y<i>, a or c", i);
    t.kind = c;
    ++i;
    if (c == 'x' || c == 'y') {
      std::size_t start = i;
      while (i < N && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected subscript after generator", start);
      t.index = std::stoll(text.substr(start, i - start));
    }
    t.exponent = 1;
    if (i < N && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < N && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < N && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw ParseError("expected integer exponent after ^", start);
      t.exponent = std::stoll(text.substr(start, i - start));
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace detail

// Indexed alphabet (x or y), subscripts restricted to 1..n.
inline Word parse_word(const std::string& text, int n) {
  Word w(n);
  for (const auto& t : detail::tokenize_word(text)) {
    if (t.kind == 'a' || t.kind == 'c')
      throw ParseError("a/c letters are not valid in an indexed word", t.pos);
    if (t.index < 1 || t.index > n)
      throw ParseError("subscript out of range 1.." + std::to_string(n), t.pos);
    w.push_power(t.index, t.exponent);
  }
  return w;
}

inline TwoGenWord parse_two_gen(const std::string& text, int n) {
  TwoGenWord w(n);
  for (const auto& t : detail::tokenize_word(text)) {
    if (t.kind != 'a' && t.kind != 'c')
      throw ParseError("only a and c letters are valid here", t.pos);
    w.push_power(t.kind == 'a' ? Gen2::a : Gen2::c, t.exponent);
  }
  return w;
}

inline std::string print_word(const Word& w, char symbol = 'x') {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(symbol);
    out += std::to_string(l.index + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline std::string print_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out.push_back(' ');
    out += names.at(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline std::string print_two_gen(const TwoGenWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(l.gen == Gen2::a ? 'a' : 'c');
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace cpg
