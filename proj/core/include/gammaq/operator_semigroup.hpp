#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gammaq/gamma_semigroup.hpp"

namespace gammaq {

  enum class OperatorKind { left, right };

  std::string_view to_string(OperatorKind kind);
  // Throws std::invalid_argument.
  OperatorKind parse_operator_kind(std::string_view text);

  // A pair (x, α) ∈ S×Γ for the left operator semigroup, or (α, a) ∈ Γ×S for
  // the right one; first/second follow that written order.
  using OperatorPair = std::pair<std::size_t, std::size_t>;

  // One equivalence class. members is sorted, so representative ==
  // members.front() is the lexicographically least pair.
  struct OperatorElement {
    OperatorKind              kind;
    OperatorPair              representative;
    std::vector<OperatorPair> members;
  };

  // Left: (x,α) ~ (y,β) iff xαs = yβs for all s and γxα = γyβ for all γ.
  // Right: (α,x) ~ (β,y) iff sαx = sβy for all s and αxγ = βyγ for all γ.
  // Throws RequiresBothSided.
  bool operator_related(GammaSemigroup const& g,
                        OperatorKind          kind,
                        OperatorPair const&   p,
                        OperatorPair const&   r);

  // The quotient of S×Γ (left) or Γ×S (right) with the induced product
  // [x,α][y,β] = [xαy,β] (left) or [α,a][β,b] = [αaβ,b] (right).
  //
  // Classes are numbered in order of their least member. The product is
  // checked for well-definedness over every pair of representatives and for
  // associativity before the object is returned.
  class OperatorSemigroup {
   public:
    OperatorKind kind() const noexcept {
      return _kind;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    OperatorElement const& element(std::size_t i) const {
      return _elements.at(i);
    }

    std::vector<OperatorElement> const& elements() const noexcept {
      return _elements;
    }

    std::size_t product(std::size_t i, std::size_t j) const {
      return _mult[i * size() + j];
    }

    // Class of a pair, in written order (see OperatorPair).
    std::size_t class_of(std::size_t first, std::size_t second) const {
      return _class_of[first * _second_size + second];
    }

    // First class in canonical order acting as identity on S:
    // eδs = s (left) or sγf = s (right).
    std::optional<std::size_t> unity() const noexcept {
      return _unity;
    }

    // The same semigroup as a Γ-semigroup over the singleton Γ = {·}, with
    // carrier labels "[x,α]" / "[α,a]". Fuzzy subsets of the operator
    // semigroup are defined over semigroup().carrier_ptr().
    GammaSemigroup const& semigroup() const noexcept {
      return *_as_semigroup;
    }

    SymbolTablePtr const& domain() const noexcept {
      return _as_semigroup->carrier_ptr();
    }

    SymbolTablePtr const& source_carrier() const noexcept {
      return _source_carrier;
    }

    SymbolTablePtr const& source_gamma() const noexcept {
      return _source_gamma;
    }

   private:
    friend OperatorSemigroup build_operator_semigroup(GammaSemigroup const&,
                                                      OperatorKind);

    OperatorSemigroup() = default;

    OperatorKind                  _kind = OperatorKind::left;
    std::vector<OperatorElement>  _elements;
    std::vector<std::size_t>      _mult;
    std::vector<std::size_t>      _class_of;
    std::size_t                   _second_size = 0;
    std::optional<std::size_t>    _unity;
    std::optional<GammaSemigroup> _as_semigroup;
    SymbolTablePtr                _source_carrier;
    SymbolTablePtr                _source_gamma;
  };

  // Throws RequiresBothSided or WellDefinednessViolation.
  OperatorSemigroup build_operator_semigroup(GammaSemigroup const& g,
                                             OperatorKind          kind);

  inline OperatorSemigroup build_left_operator(GammaSemigroup const& g) {
    return build_operator_semigroup(g, OperatorKind::left);
  }

  inline OperatorSemigroup build_right_operator(GammaSemigroup const& g) {
    return build_operator_semigroup(g, OperatorKind::right);
  }

  struct WellDefinedness {
    std::size_t pairs_checked = 0;
    std::size_t violations    = 0;
  };

  // Recomputes every product over all representative choices.
  WellDefinedness check_well_defined(GammaSemigroup const&    g,
                                     OperatorSemigroup const& os);

}  // namespace gammaq
