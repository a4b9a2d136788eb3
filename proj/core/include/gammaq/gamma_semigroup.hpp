#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammaq/crisp_subset.hpp"
#include "gammaq/symbol_table.hpp"

namespace gammaq {

  enum class Side { left, right, both };

  std::string_view to_string(Side side);
  // Throws std::invalid_argument.
  Side parse_side(std::string_view text);

  // A table cell; nullopt marks an absent entry.
  using OperationTable = std::vector<std::optional<std::size_t>>;

  // x = left gamma right
  struct Factorization {
    std::size_t left;
    std::size_t gamma;
    std::size_t right;
  };

  // A finite Γ-semigroup given by Cayley tables.
  //
  // The S×Γ×S table is laid out as s_op[(x * |Γ| + γ) * |S| + y] = xγy.
  // The optional Γ×S×Γ table is laid out as g_op[(α * |S| + a) * |Γ| + β]
  // = αaβ; when present the structure is both-sided and the mixed
  // associativity laws are checked as well.
  //
  // Instances are immutable and always satisfy the axioms: construction goes
  // through build(), which verifies every associativity instance.
  class GammaSemigroup {
   public:
    // Throws MissingEntry or AssociativityViolation.
    static GammaSemigroup build(SymbolTablePtr                       carrier,
                                SymbolTablePtr                       gamma,
                                OperationTable const&                s_op,
                                std::optional<OperationTable> const& g_op
                                = std::nullopt);

    // Tables generated from index functions; same validation as build().
    static GammaSemigroup
    from_rules(SymbolTablePtr carrier,
               SymbolTablePtr gamma,
               std::function<std::size_t(std::size_t, std::size_t, std::size_t)>
                   s_rule,
               std::function<std::size_t(std::size_t, std::size_t, std::size_t)>
                   g_rule
               = nullptr);

    std::size_t size() const noexcept {
      return _carrier->size();
    }

    std::size_t gamma_size() const noexcept {
      return _gamma->size();
    }

    SymbolTable const& carrier() const noexcept {
      return *_carrier;
    }

    SymbolTable const& gamma() const noexcept {
      return *_gamma;
    }

    SymbolTablePtr const& carrier_ptr() const noexcept {
      return _carrier;
    }

    SymbolTablePtr const& gamma_ptr() const noexcept {
      return _gamma;
    }

    bool both_sided() const noexcept {
      return !_g_op.empty();
    }

    // xγy
    std::size_t product(std::size_t x, std::size_t g, std::size_t y) const {
      return _s_op[(x * gamma_size() + g) * size() + y];
    }

    // αaβ; throws RequiresBothSided on a one-sided structure.
    std::size_t gamma_product(std::size_t alpha,
                              std::size_t a,
                              std::size_t beta) const;

    // Every (u, γ, v) with uγv = x, in lexicographic order.
    std::span<Factorization const> factorizations(std::size_t x) const {
      return _factorizations[x];
    }

    std::vector<std::size_t> const& s_table() const noexcept {
      return _s_op;
    }

    std::vector<std::size_t> const& g_table() const noexcept {
      return _g_op;
    }

    bool operator==(GammaSemigroup const& other) const;

   private:
    GammaSemigroup() = default;

    void verify_axioms() const;
    void index_factorizations();

    SymbolTablePtr                          _carrier;
    SymbolTablePtr                          _gamma;
    std::vector<std::size_t>                _s_op;
    std::vector<std::size_t>                _g_op;
    std::vector<std::vector<Factorization>> _factorizations;
  };

  // --- crisp ideals and regularity ---

  // Throws EmptySubset if a is empty, DomainMismatch if a is not over S.
  bool is_ideal(GammaSemigroup const& g, CrispSubset const& a, Side side);

  struct RegularityResult {
    bool regular = false;
    // witness[x] = some β with xβx = x; filled only when regular.
    std::vector<std::size_t> witness;
    // First x (in carrier order) with no such β.
    std::optional<std::size_t> failing;
  };

  RegularityResult is_regular(GammaSemigroup const& g);

  // AΓB
  CrispSubset crisp_product(GammaSemigroup const& g,
                            CrispSubset const&    a,
                            CrispSubset const&    b);

}  // namespace gammaq
