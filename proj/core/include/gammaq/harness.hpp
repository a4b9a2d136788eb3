#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/qfuzzy.hpp"
#include "gammaq/verdict.hpp"

namespace gammaq {

  struct VerdictReport {
    std::string                   theorem_id;
    std::string                   structure_id;
    std::size_t                   cases_checked = 0;
    std::size_t                   agreements    = 0;
    std::size_t                   vacuous       = 0;
    std::vector<std::string>      discrepancies;
    std::vector<std::string>      notes;
    std::chrono::duration<double> elapsed{0};

    bool ok() const noexcept {
      return discrepancies.empty();
    }

    void absorb(Tally const& tally);

    // Sorted keys, two-space indent. Elapsed time is left out unless asked
    // for, so repeated runs are byte-identical.
    std::string to_json(bool with_elapsed = false) const;
  };

  // A JSON array of reports, same conventions as VerdictReport::to_json.
  std::string to_json(std::vector<VerdictReport> const& reports,
                      bool                              with_elapsed = false);

  struct VerifyOptions {
    std::vector<Grade> grid   = default_grid();
    std::size_t        q_size = 1;
    std::uint64_t      bound  = default_fuzzy_bound;
    // Threshold reading for the level-set criterion.
    LevelThresholds thresholds = LevelThresholds::image;
    // Worker threads; results do not depend on it.
    unsigned jobs = 1;
  };

  // Recognised theorem ids, in verification order (without "all").
  std::vector<std::string> const& theorem_ids();

  // Runs one check over its exhaustive enumeration. Throws UnknownTheorem,
  // BoundExceeded, RequiresBothSided, MissingUnity and PreconditionViolated.
  VerdictReport run_verify(GammaSemigroup const& g,
                           std::string_view      structure_id,
                           std::string_view      theorem_id,
                           VerifyOptions const&  options = {});

  // Every theorem id; ids whose hypotheses the structure does not meet
  // (one-sided, not regular, no unities) yield an empty report with a note.
  std::vector<VerdictReport> run_verify_all(GammaSemigroup const& g,
                                            std::string_view      structure_id,
                                            VerifyOptions const&  options = {});

  struct SearchOptions {
    std::size_t        max_s  = 3;
    std::size_t        max_g  = 2;
    std::vector<Grade> grid   = default_grid();
    std::size_t        q_size = 1;
    std::uint64_t      bound  = default_fuzzy_bound;
    unsigned           jobs   = 1;
    // Hard limits on max_s and max_g.
    std::size_t limit_s = 4;
    std::size_t limit_g = 3;
  };

  // level-criterion, level-criterion-all, characteristic, chi-inclusion,
  // regularity, crisp-regularity.
  std::vector<std::string> const& search_properties();

  // Every associative one-sided table with 1 ≤ |S| ≤ max_s, 1 ≤ |Γ| ≤ max_g,
  // in lexicographic order by (|S|, |Γ|, table).
  std::vector<GammaSemigroup> enumerate_gamma_semigroups(std::size_t max_s,
                                                         std::size_t max_g);

  // Associative one-sided tables of exactly these sizes.
  std::vector<GammaSemigroup> enumerate_gamma_semigroups_of_size(std::size_t n,
                                                                 std::size_t k);

  // Runs the property over every enumerated structure. Throws
  // BoundExceeded and UnknownTheorem (unknown property).
  VerdictReport run_search(std::string_view property, SearchOptions const& options = {});

}  // namespace gammaq
