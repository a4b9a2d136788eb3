#include "gammaq/grade.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "gammaq/errors.hpp"

namespace gammaq {

  namespace {

    std::int64_t parse_integer(std::string_view text, std::string_view whole) {
      if (text.empty()) {
        throw ParseError("malformed grade '" + std::string(whole) + "'");
      }
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("grade component too large in '" + std::string(whole)
                         + "'");
      }
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed grade '" + std::string(whole) + "'");
      }
      return value;
    }

    bool all_digits(std::string_view s) {
      return std::all_of(
          s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    }

  }  // namespace

  Grade::Grade(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw OutOfRange("grade with zero denominator");
    }
    rational_type v(num, den);
    if (v < rational_type(0) || v > rational_type(1)) {
      throw OutOfRange("grade " + std::to_string(v.numerator()) + "/"
                       + std::to_string(v.denominator())
                       + " lies outside [0,1]");
    }
    _value = v;
  }

  Grade Grade::parse(std::string_view text) {
    if (text.empty()) {
      throw ParseError("empty grade");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_integer(text.substr(0, slash), text);
      auto den = parse_integer(text.substr(slash + 1), text);
      if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      return Grade(num, den);
    }
    bool             negative = false;
    std::string_view body     = text;
    if (body.front() == '-' || body.front() == '+') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    auto             dot      = body.find('.');
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part
        = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part)
        || !all_digits(frac_part)) {
      throw ParseError("malformed grade '" + std::string(text) + "'");
    }
    if (frac_part.size() > 17) {
      throw ParseError("too many decimal places in '" + std::string(text) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      den *= 10;
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
    std::int64_t frac  = frac_part.empty() ? 0 : parse_integer(frac_part, text);
    if (whole > 1) {
      throw OutOfRange("grade '" + std::string(text) + "' lies outside [0,1]");
    }
    std::int64_t num = whole * den + frac;
    return Grade(negative ? -num : num, den);
  }

  std::string Grade::to_string() const {
    return std::to_string(_value.numerator()) + "/"
           + std::to_string(_value.denominator());
  }

  std::vector<Grade> uniform_grid(std::size_t points) {
    if (points < 2) {
      throw std::invalid_argument("a grid needs at least 2 points");
    }
    std::vector<Grade> grid;
    grid.reserve(points);
    auto const steps = static_cast<std::int64_t>(points - 1);
    for (std::int64_t i = 0; i <= steps; ++i) {
      grid.emplace_back(i, steps);
    }
    return grid;
  }

  std::vector<Grade> default_grid() {
    return uniform_grid(5);
  }

  std::vector<Grade> parse_grid(std::string_view text) {
    if (text.find_first_of(",/.") == std::string_view::npos) {
      auto n = parse_integer(text, text);
      if (n < 2) {
        throw ParseError("grid needs at least 2 points");
      }
      return uniform_grid(static_cast<std::size_t>(n));
    }
    std::vector<Grade> grid;
    while (!text.empty()) {
      auto comma = text.find(',');
      grid.push_back(Grade::parse(text.substr(0, comma)));
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
  }

}  // namespace gammaq
