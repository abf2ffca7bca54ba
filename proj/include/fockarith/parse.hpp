#pragma once

// Small text parsers shared by the CLI: complex numbers ("a+bi", "r@theta"),
// integer ranges ("lo..hi") and comma lists.

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fockarith/arith.hpp"

namespace fockarith {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline double parse_double(std::string_view s) {
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) throw ParseError("not a number: '" + tmp + "'");
  return v;
}

inline i64 parse_int(std::string_view s) {
  i64 v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" and the polar form "r@theta".
inline cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw ParseError("empty complex number");
  if (auto at = s.find('@'); at != std::string::npos)
    return std::polar(parse_double(std::string_view(s).substr(0, at)), parse_double(std::string_view(s).substr(at + 1)));
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(std::string_view(s).substr(0, split)), imag_part(std::string_view(s).substr(split))};
}

struct IntRange {
  i64 lo;
  i64 hi;
};

inline IntRange parse_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const i64 v = parse_int(s);
    return {v, v};
  }
  IntRange r{parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
  if (r.hi < r.lo) throw ParseError("empty range '" + std::string(s) + "'");
  return r;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

}  // namespace fockarith
