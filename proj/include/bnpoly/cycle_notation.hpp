#pragma once

// Text form of permutations:
//   permutation := "()" | cycle+
//   cycle       := "(" int ("," int)+ ")"
// Whitespace between tokens is ignored. Output is canonical: each cycle
// starts at its least point, cycles sorted by that point, fixed points
// omitted, identity printed as "()".

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bnpoly/permutation.hpp"

namespace bnpoly {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("cycle notation: " + what + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

/// Canonical cycle decomposition (min point first, sorted, no fixed points).
inline std::vector<std::vector<Point>> cycles(const Permutation& p) {
  // Permutation::cycles already walks points in ascending order, so each
  // cycle starts at its minimum and the list is sorted by first point.
  return p.cycles();
}

inline std::string format_cycles(const Permutation& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

namespace detail {

class CycleLexer {
 public:
  explicit CycleLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  Point integer(std::size_t degree) {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > degree + 1ull) v = degree + 1ull;
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected integer", start);
    if (v < 1 || v > degree) throw ParseError("point " + std::string(text_.substr(start, pos_ - start)) + " out of range", start);
    return static_cast<Point>(v);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses disjoint-cycle notation. Points may not repeat across cycles.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error("permutation degree must be positive");
  detail::CycleLexer lex(text);
  if (lex.at_end()) throw ParseError("empty input", 0);

  std::vector<std::vector<Point>> cs;
  std::vector<bool> used(degree, false);
  bool saw_identity = false;
  while (!lex.at_end()) {
    std::size_t open = lex.pos();
    lex.expect('(');
    if (lex.peek() == ')') {
      lex.expect(')');
      if (!cs.empty() || saw_identity) throw ParseError("\"()\" must stand alone", open);
      saw_identity = true;
      continue;
    }
    if (saw_identity) throw ParseError("\"()\" must stand alone", open);
    std::vector<Point> c;
    for (;;) {
      std::size_t at = lex.pos();
      Point x = lex.integer(degree);
      if (used[x - 1]) throw ParseError("repeated point " + std::to_string(x), at);
      used[x - 1] = true;
      c.push_back(x);
      if (lex.peek() == ',') {
        lex.expect(',');
        continue;
      }
      lex.expect(')');
      break;
    }
    if (c.size() < 2) throw ParseError("cycle needs at least two points", open);
    cs.push_back(std::move(c));
  }
  return Permutation::from_cycles(degree, cs);
}

}  // namespace bnpoly
