#include "gammaq/crisp_subset.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

  CrispSubset::CrispSubset(SymbolTablePtr universe)
      : _universe(std::move(universe)), _members(_universe->size(), false) {}

  CrispSubset CrispSubset::full(SymbolTablePtr universe) {
    CrispSubset result(std::move(universe));
    std::fill(result._members.begin(), result._members.end(), true);
    return result;
  }

  CrispSubset CrispSubset::from_mask(SymbolTablePtr universe,
                                     std::uint64_t  mask) {
    CrispSubset result(std::move(universe));
    for (std::size_t i = 0; i < result._members.size() && i < 64; ++i) {
      result._members[i] = ((mask >> i) & 1U) != 0;
    }
    return result;
  }

  CrispSubset CrispSubset::from_indices(SymbolTablePtr               universe,
                                        std::span<std::size_t const> members) {
    CrispSubset result(std::move(universe));
    for (auto i : members) {
      result.insert(i);
    }
    return result;
  }

  CrispSubset CrispSubset::from_labels(SymbolTablePtr                universe,
                                       std::span<std::string const> labels) {
    CrispSubset result(std::move(universe));
    for (auto const& label : labels) {
      result.insert(result._universe->index(label));
    }
    return result;
  }

  std::size_t CrispSubset::size() const {
    return static_cast<std::size_t>(
        std::count(_members.begin(), _members.end(), true));
  }

  bool CrispSubset::empty() const {
    return std::none_of(
        _members.begin(), _members.end(), [](bool b) { return b; });
  }

  bool CrispSubset::is_full() const {
    return std::all_of(
        _members.begin(), _members.end(), [](bool b) { return b; });
  }

  std::vector<std::size_t> CrispSubset::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < _members.size(); ++i) {
      if (_members[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  void CrispSubset::require_same_universe(CrispSubset const& other) const {
    if (!same_symbols(_universe, other._universe)) {
      throw DomainMismatch("crisp subsets over different universes");
    }
  }

  bool CrispSubset::is_subset_of(CrispSubset const& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < _members.size(); ++i) {
      if (_members[i] && !other._members[i]) {
        return false;
      }
    }
    return true;
  }

  CrispSubset CrispSubset::intersection(CrispSubset const& other) const {
    require_same_universe(other);
    CrispSubset result(_universe);
    for (std::size_t i = 0; i < _members.size(); ++i) {
      result._members[i] = _members[i] && other._members[i];
    }
    return result;
  }

  CrispSubset CrispSubset::union_with(CrispSubset const& other) const {
    require_same_universe(other);
    CrispSubset result(_universe);
    for (std::size_t i = 0; i < _members.size(); ++i) {
      result._members[i] = _members[i] || other._members[i];
    }
    return result;
  }

  std::string CrispSubset::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t i = 0; i < _members.size(); ++i) {
      if (_members[i]) {
        if (!first) {
          out += ',';
        }
        out += _universe->name(i);
        first = false;
      }
    }
    out += '}';
    return out;
  }

  SubsetRange enumerate_subsets(SymbolTablePtr universe,
                                bool           nonempty_only,
                                std::size_t    bound) {
    bound = std::min<std::size_t>(bound, 63);
    if (universe->size() > bound) {
      throw BoundExceeded("subset enumeration over "
                          + std::to_string(universe->size())
                          + " elements exceeds the bound of "
                          + std::to_string(bound));
    }
    return SubsetRange(std::move(universe), nonempty_only);
  }

}  // namespace gammaq
