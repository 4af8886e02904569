#include "cpair/point_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cpair {

namespace {

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

bool parse_double(std::string_view token, double& out)
{
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = first + token.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

PointSet parse_points(std::istream& in)
{
    std::vector<Point> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected 2 numbers, found " +
                                          std::to_string(tokens.size()) + " fields");
        }
        Point p;
        for (std::size_t k = 0; k < 2; ++k) {
            double v = 0.0;
            if (!parse_double(tokens[k], v)) {
                throw ParseError(line_no, "not a number: '" + std::string(tokens[k]) + "'");
            }
            if (!std::isfinite(v)) {
                throw ParseError(line_no, "non-finite coordinate: '" + std::string(tokens[k]) + "'");
            }
            (k == 0 ? p.x : p.y) = v;
        }
        pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

PointSet parse_points(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_points(in);
}

void write_points(std::ostream& out, const PointSet& set)
{
    for (const auto& p : set) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

}  // namespace cpair
