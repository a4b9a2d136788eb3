#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gammaq/crisp_subset.hpp"
#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/operator_semigroup.hpp"
#include "gammaq/qfuzzy.hpp"
#include "gammaq/verdict.hpp"

namespace gammaq {

  // A both-sided Γ-semigroup together with its two operator semigroups.
  class OperatorContext {
   public:
    // Throws RequiresBothSided.
    explicit OperatorContext(GammaSemigroup source);

    GammaSemigroup const& source() const noexcept {
      return _source;
    }

    OperatorSemigroup const& left() const noexcept {
      return _left;
    }

    OperatorSemigroup const& right() const noexcept {
      return _right;
    }

    OperatorSemigroup const& get(OperatorKind kind) const noexcept {
      return kind == OperatorKind::left ? _left : _right;
    }

    bool has_unities() const noexcept {
      return _left.unity().has_value() && _right.unity().has_value();
    }

    // Throws MissingUnity.
    void require_unities() const;

   private:
    GammaSemigroup    _source;
    OperatorSemigroup _left;
    OperatorSemigroup _right;
  };

  // --- fuzzy maps; the infima are minima over finite index sets ---

  // μ over R ↦ μ* over S, μ*(a,q) = min over γ of μ([γ,a],q).
  QFuzzySubset star_fuzzy(OperatorSemigroup const& r, QFuzzySubset const& mu);

  // σ over S ↦ σ*' over R, σ*'([α,a],q) = min over s of σ(sαa,q).
  QFuzzySubset star_prime_fuzzy(GammaSemigroup const&    g,
                                OperatorSemigroup const& r,
                                QFuzzySubset const&      sigma);

  // δ over L ↦ δ⁺ over S, δ⁺(a,q) = min over γ of δ([a,γ],q).
  QFuzzySubset plus_fuzzy(OperatorSemigroup const& l, QFuzzySubset const& delta);

  // η over S ↦ η⁺' over L, η⁺'([a,α],q) = min over s of η(aαs,q).
  QFuzzySubset plus_prime_fuzzy(GammaSemigroup const&    g,
                                OperatorSemigroup const& l,
                                QFuzzySubset const&      eta);

  // --- crisp maps ---

  // {s ∈ S : [α,s] ∈ I for all α}
  CrispSubset star_crisp(OperatorSemigroup const& r, CrispSubset const& i);

  // {[α,x] ∈ R : sαx ∈ P for all s}
  CrispSubset star_prime_crisp(GammaSemigroup const&    g,
                               OperatorSemigroup const& r,
                               CrispSubset const&       p);

  // {s ∈ S : [s,α] ∈ J for all α}
  CrispSubset plus_crisp(OperatorSemigroup const& l, CrispSubset const& j);

  // {[x,α] ∈ L : xαs ∈ Q for all s}
  CrispSubset plus_prime_crisp(GammaSemigroup const&    g,
                               OperatorSemigroup const& l,
                               CrispSubset const&       q);

  // --- level sets commute with * and *' ---

  // (μ_t)* versus (μ*)_t; vacuous when both sets are empty.
  Verdict check_star_level_commutation(OperatorSemigroup const& r,
                                       QFuzzySubset const&      mu,
                                       Grade const&             t);

  // (σ_t)*' versus (σ*')_t; vacuous when both sets are empty.
  Verdict check_star_prime_level_commutation(GammaSemigroup const&    g,
                                             OperatorSemigroup const& r,
                                             QFuzzySubset const&      sigma,
                                             Grade const&             t);

  // --- ideal transfer ---

  enum class Transfer {
    plus_crisp,        // ideal of L ↦ ideal of S
    plus_prime_crisp,  // ideal of S ↦ ideal of L
    star_crisp,        // ideal of R ↦ ideal of S
    star_prime_crisp,  // ideal of S ↦ ideal of R
    star_fuzzy,        // fuzzy ideal of R ↦ fuzzy ideal of S
    star_prime_fuzzy,  // fuzzy ideal of S ↦ fuzzy ideal of R
    plus_fuzzy,        // fuzzy ideal of L ↦ fuzzy ideal of S
    plus_prime_fuzzy   // fuzzy ideal of S ↦ fuzzy ideal of L
  };

  std::string_view to_string(Transfer t);
  bool             is_fuzzy(Transfer t);
  // Universe the map reads from (S, L or R).
  SymbolTablePtr const& transfer_source(OperatorContext const& ctx, Transfer t);
  // Two-sided plus the one side that the map is stated for: right for the
  // left operator semigroup maps, left for the right ones.
  std::vector<Side> transfer_sides(Transfer t);

  // Hypothesis: input is a (side) ideal of the map's source. Conclusion: the
  // image is a (side) ideal of the target. Vacuous when the hypothesis
  // fails. Throws MissingUnity, KindMismatch (crisp input to a fuzzy map or
  // vice versa) and PreconditionViolated (side not stated for this map).
  Verdict check_transfer(OperatorContext const& ctx,
                         Transfer               t,
                         Side                   side,
                         CrispSubset const&     input);
  Verdict check_transfer(OperatorContext const& ctx,
                         Transfer               t,
                         Side                   side,
                         QFuzzySubset const&    input);

  // Over every grid-valued fuzzy ideal (two-sided, and one-sided on the side
  // stated for kind) of S and of the operator semigroup: both round trips
  // are identities, images are fuzzy ideals, and inclusion is preserved
  // over all ordered pairs. Throws MissingUnity and BoundExceeded.
  Tally check_bijection(OperatorContext const&    ctx,
                        OperatorKind              kind,
                        QSet const&               q,
                        std::vector<Grade> const& grid,
                        std::uint64_t             bound = default_fuzzy_bound);

}  // namespace gammaq
