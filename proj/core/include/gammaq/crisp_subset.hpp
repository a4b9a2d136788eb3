#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammaq/symbol_table.hpp"

namespace gammaq {

  // A subset of a finite indexed universe.
  class CrispSubset {
   public:
    explicit CrispSubset(SymbolTablePtr universe);

    static CrispSubset full(SymbolTablePtr universe);
    static CrispSubset from_mask(SymbolTablePtr universe, std::uint64_t mask);
    static CrispSubset from_indices(SymbolTablePtr              universe,
                                    std::span<std::size_t const> members);
    // Throws UnknownSymbol.
    static CrispSubset from_labels(SymbolTablePtr                universe,
                                   std::span<std::string const> labels);

    SymbolTablePtr const& universe() const noexcept {
      return _universe;
    }

    std::size_t universe_size() const noexcept {
      return _members.size();
    }

    bool contains(std::size_t i) const {
      return _members.at(i);
    }

    void insert(std::size_t i) {
      _members.at(i) = true;
    }

    void erase(std::size_t i) {
      _members.at(i) = false;
    }

    std::size_t size() const;
    bool        empty() const;
    bool        is_full() const;

    std::vector<std::size_t> indices() const;

    // Both operands must share a universe; throws DomainMismatch otherwise.
    bool        is_subset_of(CrispSubset const& other) const;
    CrispSubset intersection(CrispSubset const& other) const;
    CrispSubset union_with(CrispSubset const& other) const;

    // "{a,b}" with labels in universe order.
    std::string to_string() const;

    bool operator==(CrispSubset const& other) const {
      return _members == other._members
             && same_symbols(_universe, other._universe);
    }

   private:
    void require_same_universe(CrispSubset const& other) const;

    SymbolTablePtr    _universe;
    std::vector<bool> _members;
  };

  inline constexpr std::size_t default_subset_bound = 16;

  // All (nonempty) subsets of a universe in ascending bitmask order, where
  // bit i stands for element i.
  class SubsetRange {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = CrispSubset;
      using difference_type   = std::ptrdiff_t;

      iterator() = default;
      iterator(SubsetRange const* range, std::uint64_t mask)
          : _range(range), _mask(mask) {}

      CrispSubset operator*() const {
        return CrispSubset::from_mask(_range->_universe, _mask);
      }

      iterator& operator++() {
        ++_mask;
        return *this;
      }

      void operator++(int) {
        ++_mask;
      }

      bool operator==(iterator const& other) const {
        return _mask == other._mask;
      }

     private:
      SubsetRange const* _range = nullptr;
      std::uint64_t      _mask  = 0;
    };

    SubsetRange(SymbolTablePtr universe, bool nonempty_only)
        : _universe(std::move(universe)), _nonempty_only(nonempty_only) {}

    iterator begin() const {
      return iterator(this, _nonempty_only ? 1 : 0);
    }

    iterator end() const {
      return iterator(this, std::uint64_t{1} << _universe->size());
    }

    std::uint64_t count() const {
      return (std::uint64_t{1} << _universe->size()) - (_nonempty_only ? 1 : 0);
    }

   private:
    SymbolTablePtr _universe;
    bool           _nonempty_only;
  };

  // Throws BoundExceeded when the universe is larger than bound (at most 63).
  SubsetRange enumerate_subsets(SymbolTablePtr universe,
                                bool           nonempty_only,
                                std::size_t    bound = default_subset_bound);

}  // namespace gammaq
