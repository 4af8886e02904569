#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cpair/geometry.hpp"

namespace cpair {

/// Malformed point file; line() is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Shortest decimal text that parses back to the same binary64 value.
/// Locale-independent, '.' separator.
std::string format_double(double v);

/// False unless the entire token is a decimal number.
bool parse_double(std::string_view token, double& out);

/// One point per data line as "x y"; '#' comment lines and blank lines are
/// skipped.
PointSet parse_points(std::istream& in);
PointSet parse_points(std::string_view text);

/// Writes "x y\n" per point using format_double.
void write_points(std::ostream& out, const PointSet& set);

}  // namespace cpair
