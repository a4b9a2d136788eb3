#pragma once

#include <string>
#include <string_view>

#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/qfuzzy.hpp"

namespace gammaq {

  // GSEM v1, line oriented, '#' starts a comment:
  //
  //   gsem v1
  //   S: a b c
  //   G: g d
  //   SGS g:        one block per γ: |S| rows of |S| entries,
  //   a a a         row = left operand, column = right operand
  //   ...
  //   GSG a:        optional, one block per s: |Γ| rows of |Γ| entries
  //   ...
  //
  // Throws ParseError (with line number) for malformed text; MissingEntry and
  // AssociativityViolation from validation pass through.
  GammaSemigroup parse_gsem(std::string_view text);

  std::string render_gsem(GammaSemigroup const& g);

  // QFZ v1:
  //
  //   qfz v1
  //   Q: p
  //   mu a p 0.8
  //
  // Pairs not listed get grade 0. Throws ParseError, UnknownSymbol and
  // OutOfRange.
  QFuzzySubset parse_qfz(std::string_view text, SymbolTablePtr const& domain);

  inline QFuzzySubset parse_qfz(std::string_view text, GammaSemigroup const& g) {
    return parse_qfz(text, g.carrier_ptr());
  }

  // Lists every pair, grades as "n/d".
  std::string render_qfz(QFuzzySubset const& mu);

  // Throws std::runtime_error when the file cannot be read.
  std::string read_file(std::string const& path);

}  // namespace gammaq
