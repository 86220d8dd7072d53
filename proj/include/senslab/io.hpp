#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "senslab/ball_advice.hpp"
#include "senslab/errors.hpp"
#include "senslab/point.hpp"
#include "senslab/truth_table.hpp"

// .tt   : "n=<k>\n" then 2^k characters from {0,1}; position i is f(index i).
// .ball : "n=<k> center=<bits> radius=<r>\n" then "<bits> <0|1>" per point, increasing index.
// .int  : "n=<k>\n" then "<index> <value>" per point, increasing index.
// Bitstrings list x_1 first.

namespace senslab::io {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

template <class T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

/// Parses "key=value" and checks the key.
inline std::string_view field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    throw FormatError("expected '" + std::string(key) + "=...', got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

inline unsigned parse_n(std::string_view token) {
  const auto n = parse_number<unsigned>(field(token, "n"), "n");
  if (n < 1 || n > kMaxVars) throw FormatError("n must be in [1, 24]");
  return n;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace detail

inline void write_tt(std::ostream& out, const TruthTable& f) { out << "n=" << f.n() << '\n' << f.to_string() << '\n'; }

inline TruthTable read_tt(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw FormatError(".tt: missing header");
  const unsigned n = detail::parse_n(line);
  if (!detail::next_content_line(in, line)) throw FormatError(".tt: missing table line");
  TruthTable f(n);
  if (line.size() != f.size()) {
    throw FormatError(".tt: expected " + std::to_string(f.size()) + " characters, got " + std::to_string(line.size()));
  }
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '1') {
      f.set(static_cast<std::uint32_t>(i), true);
    } else if (line[i] != '0') {
      throw FormatError(".tt: table may contain only '0' and '1'");
    }
  }
  if (detail::next_content_line(in, line)) throw FormatError(".tt: trailing content");
  return f;
}

inline void write_ball(std::ostream& out, const BallAdvice& a) {
  out << "n=" << a.n() << " center=" << a.center().to_bits() << " radius=" << a.radius() << '\n';
  for (const auto& [index, bit] : a.entries()) out << Point(a.n(), index).to_bits() << ' ' << (bit ? '1' : '0') << '\n';
}

inline BallAdvice read_ball(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw FormatError(".ball: missing header");
  const auto header = detail::split_ws(line);
  if (header.size() != 3) throw FormatError(".ball: header must be 'n=<k> center=<bits> radius=<r>'");
  const unsigned n = detail::parse_n(header[0]);
  const Point center = Point::from_bits(detail::field(header[1], "center"));
  if (center.n() != n) throw FormatError(".ball: center length differs from n");
  const auto radius = detail::parse_number<unsigned>(detail::field(header[2], "radius"), "radius");
  if (radius > n) throw FormatError(".ball: radius exceeds n");

  std::vector<std::pair<std::uint32_t, bool>> entries;
  while (detail::next_content_line(in, line)) {
    const auto tok = detail::split_ws(line);
    if (tok.size() != 2 || (tok[1] != "0" && tok[1] != "1")) throw FormatError(".ball: bad entry line '" + line + "'");
    const Point p = Point::from_bits(tok[0]);
    if (p.n() != n) throw FormatError(".ball: entry length differs from n");
    if (!entries.empty() && entries.back().first >= p.index()) throw FormatError(".ball: entries must be in increasing index order");
    entries.emplace_back(p.index(), tok[1] == "1");
  }
  try {
    return BallAdvice(center, radius, entries);
  } catch (const ParameterError& e) {
    throw FormatError(std::string(".ball: ") + e.what());
  }
}

inline void write_integer_function(std::ostream& out, const IntegerFunction& g) {
  out << "n=" << g.n << '\n';
  for (std::uint64_t i = 0; i < g.size(); ++i) out << i << ' ' << g.values[i] << '\n';
}

inline IntegerFunction read_integer_function(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw FormatError("integer function: missing header");
  IntegerFunction g(detail::parse_n(line));
  std::uint64_t expected = 0;
  while (detail::next_content_line(in, line)) {
    const auto tok = detail::split_ws(line);
    if (tok.size() != 2) throw FormatError("integer function: bad line '" + line + "'");
    if (detail::parse_number<std::uint64_t>(tok[0], "index") != expected || expected >= g.size()) {
      throw FormatError("integer function: indices must run 0..2^n-1 in order");
    }
    g.values[expected++] = detail::parse_number<std::int64_t>(tok[1], "value");
  }
  if (expected != g.size()) throw FormatError("integer function: missing entries");
  return g;
}

template <class Reader>
auto load(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return reader(in);
}

inline TruthTable load_tt(const std::string& path) { return load(path, [](std::istream& in) { return read_tt(in); }); }
inline BallAdvice load_ball(const std::string& path) { return load(path, [](std::istream& in) { return read_ball(in); }); }

template <class Writer>
void save(const std::string& path, Writer writer) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  writer(out);
}

}  // namespace senslab::io
