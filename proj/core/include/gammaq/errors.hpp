#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammaq {

  // Base of every error raised by the library. The CLI maps all of these to
  // exit code 2.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define GAMMAQ_DECLARE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

  GAMMAQ_DECLARE_ERROR(InvalidSymbol);
  GAMMAQ_DECLARE_ERROR(UnknownSymbol);
  GAMMAQ_DECLARE_ERROR(MissingEntry);
  GAMMAQ_DECLARE_ERROR(AssociativityViolation);
  GAMMAQ_DECLARE_ERROR(EmptySubset);
  GAMMAQ_DECLARE_ERROR(BoundExceeded);
  GAMMAQ_DECLARE_ERROR(OutOfRange);
  GAMMAQ_DECLARE_ERROR(EmptyFuzzySubset);
  GAMMAQ_DECLARE_ERROR(GradeOrderViolation);
  GAMMAQ_DECLARE_ERROR(DomainMismatch);
  GAMMAQ_DECLARE_ERROR(PreconditionViolated);
  GAMMAQ_DECLARE_ERROR(RequiresBothSided);
  GAMMAQ_DECLARE_ERROR(WellDefinednessViolation);
  GAMMAQ_DECLARE_ERROR(KindMismatch);
  GAMMAQ_DECLARE_ERROR(MissingUnity);
  GAMMAQ_DECLARE_ERROR(UnknownTheorem);

#undef GAMMAQ_DECLARE_ERROR

  // Syntax error in a text format; line is 1-based, 0 when not tied to a line.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace gammaq
