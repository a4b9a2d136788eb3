#include "gammaq/symbol_table.hpp"

#include <algorithm>
#include <cctype>

#include "gammaq/errors.hpp"

namespace gammaq {

  SymbolTable::SymbolTable(std::vector<std::string> names)
      : _names(std::move(names)) {
    _index.reserve(_names.size());
    for (std::size_t i = 0; i < _names.size(); ++i) {
      auto const& label = _names[i];
      if (label.empty()) {
        throw InvalidSymbol("empty label");
      }
      if (std::any_of(label.begin(), label.end(), [](unsigned char c) {
            return std::isspace(c) != 0;
          })) {
        throw InvalidSymbol("label contains whitespace: '" + label + "'");
      }
      if (!_index.emplace(label, i).second) {
        throw InvalidSymbol("duplicate label: '" + label + "'");
      }
    }
  }

  std::optional<std::size_t> SymbolTable::find(std::string_view label) const {
    auto it = _index.find(std::string(label));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t SymbolTable::index(std::string_view label) const {
    if (auto i = find(label)) {
      return *i;
    }
    throw UnknownSymbol("unknown symbol: '" + std::string(label) + "'");
  }

  SymbolTablePtr make_symbols(std::vector<std::string> names) {
    return std::make_shared<SymbolTable const>(std::move(names));
  }

  bool same_symbols(SymbolTablePtr const& a, SymbolTablePtr const& b) {
    if (a == b) {
      return true;
    }
    return a && b && *a == *b;
  }

}  // namespace gammaq
