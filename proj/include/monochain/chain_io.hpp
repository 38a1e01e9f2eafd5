#pragma once

// Chain CSV files: one point per line, comma-separated decimals, an
// optional leading '#' header line, blank lines ignored. Numbers are
// written in shortest round-trip form so files reload bit-exactly.

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include "monochain/core.hpp"
#include "monochain/monotonicity.hpp"

namespace monochain {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(format(line, column, what)), line_(line), column_(column), reason_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// 1-based field index; 0 when the error concerns the whole row.
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  static std::string format(std::size_t line, std::size_t column, const std::string& what) {
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// Raised for files that cannot be opened, read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace detail

inline Chain parse_chain(std::istream& in) {
  Chain chain;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::size_t dimension = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = detail::trim(line);
    if (row.empty()) continue;
    if (!seen_content && row.front() == '#') {
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<double> coords;
    std::size_t start = 0;
    std::size_t column = 0;
    while (true) {
      const std::size_t comma = row.find(',', start);
      const std::string_view field =
          detail::trim(row.substr(start, comma == std::string_view::npos ? row.npos : comma - start));
      ++column;
      double value = 0.0;
      if (!detail::parse_double(field, value)) {
        throw ParseError(line_no, column, "not a finite number: '" + std::string(field) + "'");
      }
      coords.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (chain.empty()) {
      dimension = coords.size();
    } else if (coords.size() != dimension) {
      throw ParseError(line_no, 0,
                       "expected " + std::to_string(dimension) + " fields, found " +
                           std::to_string(coords.size()));
    }
    chain.push_back(Point(std::move(coords)));
  }
  if (in.bad()) throw IoError("read failure");
  return chain;
}

inline Chain read_chain(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return parse_chain(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + e.reason());
  }
}

/// Shortest decimal that parses back to exactly x; "inf" for +infinity.
inline std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline std::string format_degree(Degree d) { return format_number(d.value()); }

inline void write_chain(std::ostream& out, const Chain& chain) {
  for (const auto& p : chain) {
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      if (i != 0) out << ',';
      out << format_number(p[i]);
    }
    out << '\n';
  }
}

inline void write_chain(const Chain& chain, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_chain(out, chain);
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace monochain
