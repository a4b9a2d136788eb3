#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gammaq {

  // Ordered list of distinct element labels. Elements are referred to by
  // position everywhere inside the library; labels only matter at I/O.
  class SymbolTable {
   public:
    SymbolTable() = default;

    // Throws InvalidSymbol on empty, duplicate, or whitespace-containing
    // labels.
    explicit SymbolTable(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }

    bool empty() const noexcept {
      return _names.empty();
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<std::size_t> find(std::string_view label) const;

    // Throws UnknownSymbol.
    std::size_t index(std::string_view label) const;

    bool operator==(SymbolTable const& other) const {
      return _names == other._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  using SymbolTablePtr = std::shared_ptr<SymbolTable const>;

  SymbolTablePtr make_symbols(std::vector<std::string> names);

  // Same object, or equal label lists.
  bool same_symbols(SymbolTablePtr const& a, SymbolTablePtr const& b);

}  // namespace gammaq
