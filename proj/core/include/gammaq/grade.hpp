#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace gammaq {

  // A membership value in [0,1], held as an exact reduced fraction.
  class Grade {
   public:
    using rational_type = boost::rational<std::int64_t>;

    Grade() = default;

    // Throws OutOfRange unless 0 <= num/den <= 1 (and den != 0).
    Grade(std::int64_t num, std::int64_t den);

    static Grade zero() {
      return Grade();
    }

    static Grade one() {
      return Grade(1, 1);
    }

    // Accepts "n/d" or a finite decimal ("0.8", "1", ".25"). Throws
    // ParseError for malformed text and OutOfRange outside [0,1].
    static Grade parse(std::string_view text);

    std::int64_t numerator() const noexcept {
      return _value.numerator();
    }

    std::int64_t denominator() const noexcept {
      return _value.denominator();
    }

    rational_type const& value() const noexcept {
      return _value;
    }

    bool is_zero() const noexcept {
      return _value.numerator() == 0;
    }

    // Always "n/d", including "0/1" and "1/1".
    std::string to_string() const;

    friend bool operator==(Grade const& a, Grade const& b) {
      return a._value == b._value;
    }

    friend std::strong_ordering operator<=>(Grade const& a, Grade const& b) {
      if (a._value == b._value) {
        return std::strong_ordering::equal;
      }
      return a._value < b._value ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }

   private:
    rational_type _value{0};
  };

  // {0, 1/(n-1), ..., 1}; throws std::invalid_argument for n < 2.
  std::vector<Grade> uniform_grid(std::size_t points);

  // {0, 1/4, 1/2, 3/4, 1}
  std::vector<Grade> default_grid();

  // Either a point count ("5") or a comma separated list of grades
  // ("0,1/3,1"); the result is sorted and deduplicated.
  std::vector<Grade> parse_grid(std::string_view text);

}  // namespace gammaq
