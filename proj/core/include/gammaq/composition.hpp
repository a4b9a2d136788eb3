#pragma once

#include <cstddef>
#include <vector>

#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/qfuzzy.hpp"
#include "gammaq/verdict.hpp"

namespace gammaq {

  // Sup-min product: (μ1∘μ2)(x,q) is the largest min(μ1(u,q), μ2(v,q)) over
  // all factorizations x = uγv, and 0 when x has none. q is held fixed on
  // both sides.
  QFuzzySubset compose(GammaSemigroup const& g,
                       QFuzzySubset const&   mu1,
                       QFuzzySubset const&   mu2);

  // χ ≡ 1 on S×Q.
  QFuzzySubset full_characteristic(GammaSemigroup const& g, QSet const& q);

  // One-sided ideal test against the χ product: left compares with
  // χ∘μ ⊆ μ, right with μ∘χ ⊆ μ. Side::both is accepted and requires both
  // inclusions. Empty μ is vacuous.
  Verdict check_chi_inclusion(GammaSemigroup const& g,
                              QFuzzySubset const&   mu,
                              Side                  side);

  // Throws PreconditionViolated unless mu1 is a fuzzy right ideal and mu2 a
  // fuzzy left ideal. Asserts μ1∘μ2 ⊆ μ1∩μ2.
  Verdict check_product_below_meet(GammaSemigroup const& g,
                                   QFuzzySubset const&   mu1,
                                   QFuzzySubset const&   mu2);

  // For two-sided fuzzy ideals: μ1∘μ2 ⊆ μ1∩μ2 ⊆ μ1 and ⊆ μ2. Throws
  // PreconditionViolated when either input is not a two-sided fuzzy ideal.
  Verdict check_ideal_product_chain(GammaSemigroup const& g,
                                    QFuzzySubset const&   mu1,
                                    QFuzzySubset const&   mu2);

  // On a regular structure, μ1∩μ2 ⊆ μ1∘μ2 for arbitrary μ1, μ2. Throws
  // PreconditionViolated when g is not regular.
  Verdict check_meet_below_product(GammaSemigroup const& g,
                                   QFuzzySubset const&   mu1,
                                   QFuzzySubset const&   mu2);

  struct RegularityCriterion {
    Verdict     verdict;
    std::size_t right_ideals = 0;
    std::size_t left_ideals  = 0;
    std::size_t pairs        = 0;
  };

  // Compares is_regular(g) with "μ1∘μ2 = μ1∩μ2 for every fuzzy right ideal
  // μ1 and fuzzy left ideal μ2". The quantifier ranges over characteristic
  // functions of crisp one-sided ideals (checked first) and then over every
  // grid-valued fuzzy one-sided ideal. Throws BoundExceeded.
  RegularityCriterion
  check_regularity_criterion(GammaSemigroup const&     g,
                             QSet const&               q,
                             std::vector<Grade> const& grid,
                             std::uint64_t bound = default_fuzzy_bound);

  // Compares is_regular(g) with "RΓL = R∩L for every right ideal R and left
  // ideal L".
  Verdict check_crisp_regularity_criterion(GammaSemigroup const& g);

}  // namespace gammaq
