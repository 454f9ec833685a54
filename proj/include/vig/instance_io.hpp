#pragma once

// Text instance format: one "lo hi" pair per line, '#' starts a comment,
// blank lines are ignored. Vertex i is the i-th data line.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vig/interval.hpp"

namespace vig {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline IntervalFamily parse_instance(std::istream& in) {
  std::vector<Interval> intervals;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string a, b, extra;
    if (!(line >> a)) continue;
    if (!(line >> b)) throw ParseError(line_no, "expected two integers");
    if (line >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    auto to_int = [&](const std::string& tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, "'" + tok + "' is not an integer");
      }
      if (used != tok.size()) throw ParseError(line_no, "'" + tok + "' is not an integer");
      return static_cast<coord_t>(value);
    };
    const Interval x{to_int(a), to_int(b)};
    if (x.lo == x.hi) throw ParseError(line_no, "zero-length interval");
    if (x.lo > x.hi) throw ParseError(line_no, "left endpoint exceeds right endpoint");
    intervals.push_back(x);
  }
  return IntervalFamily(std::move(intervals));
}

inline IntervalFamily parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline void write_instance(std::ostream& out, std::span<const Interval> family, const std::string& comment = {}) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  for (const auto& x : family) out << x.lo << ' ' << x.hi << '\n';
}

}  // namespace vig
