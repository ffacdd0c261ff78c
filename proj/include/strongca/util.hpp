#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strongca {

// Thrown on malformed input files; what() carries a location diagnostic.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Iterate content line by line, skipping blank and `--` comment lines.
// fn(line_number, trimmed_line)
template <typename Fn>
void for_data_lines(std::string_view text, Fn&& fn) {
  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? text.size() - pos
                                                 : nl - pos);
    ++lineno;
    std::string_view t = trim(line);
    if (!t.empty() && t.substr(0, 2) != "--") fn(lineno, t);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

inline long parse_long(std::string_view s, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw parse_error(std::string("expected integer for ") + what + ", got '" +
                      std::string(s) + "'");
  return v;
}

}  // namespace detail
}  // namespace strongca
