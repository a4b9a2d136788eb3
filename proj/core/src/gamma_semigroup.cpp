#include "gammaq/gamma_semigroup.hpp"

#include <stdexcept>

#include "gammaq/errors.hpp"

namespace gammaq {

  std::string_view to_string(Side side) {
    switch (side) {
      case Side::left:
        return "left";
      case Side::right:
        return "right";
      case Side::both:
        return "both";
    }
    return "?";
  }

  Side parse_side(std::string_view text) {
    if (text == "left") {
      return Side::left;
    }
    if (text == "right") {
      return Side::right;
    }
    if (text == "both") {
      return Side::both;
    }
    throw std::invalid_argument("side must be left, right or both, found '"
                                + std::string(text) + "'");
  }

  namespace {

    std::vector<std::size_t> resolve_table(OperationTable const& table,
                                           std::size_t           expected_size,
                                           std::size_t           codomain,
                                           char const*           what) {
      if (table.size() != expected_size) {
        throw MissingEntry(std::string(what) + " table has "
                           + std::to_string(table.size()) + " cells, expected "
                           + std::to_string(expected_size));
      }
      std::vector<std::size_t> out(expected_size);
      for (std::size_t i = 0; i < expected_size; ++i) {
        if (!table[i].has_value()) {
          throw MissingEntry(std::string(what) + " table cell "
                             + std::to_string(i) + " is absent");
        }
        if (*table[i] >= codomain) {
          throw MissingEntry(std::string(what) + " table cell "
                             + std::to_string(i) + " names an unknown symbol");
        }
        out[i] = *table[i];
      }
      return out;
    }

  }  // namespace

  GammaSemigroup
  GammaSemigroup::build(SymbolTablePtr                       carrier,
                        SymbolTablePtr                       gamma,
                        OperationTable const&                s_op,
                        std::optional<OperationTable> const& g_op) {
    if (!carrier || carrier->empty()) {
      throw MissingEntry("carrier S must be non-empty");
    }
    if (!gamma || gamma->empty()) {
      throw MissingEntry("Γ must be non-empty");
    }
    GammaSemigroup result;
    std::size_t    n = carrier->size();
    std::size_t    k = gamma->size();
    result._s_op     = resolve_table(s_op, n * k * n, n, "S×Γ×S");
    if (g_op) {
      result._g_op = resolve_table(*g_op, k * n * k, k, "Γ×S×Γ");
    }
    result._carrier = std::move(carrier);
    result._gamma   = std::move(gamma);
    result.verify_axioms();
    result.index_factorizations();
    return result;
  }

  GammaSemigroup GammaSemigroup::from_rules(
      SymbolTablePtr carrier,
      SymbolTablePtr gamma,
      std::function<std::size_t(std::size_t, std::size_t, std::size_t)> s_rule,
      std::function<std::size_t(std::size_t, std::size_t, std::size_t)>
          g_rule) {
    std::size_t    n = carrier->size();
    std::size_t    k = gamma->size();
    OperationTable s(n * k * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t y = 0; y < n; ++y) {
          s[(x * k + g) * n + y] = s_rule(x, g, y);
        }
      }
    }
    std::optional<OperationTable> gt;
    if (g_rule) {
      gt.emplace(k * n * k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t b = 0; b < k; ++b) {
            (*gt)[(a * n + x) * k + b] = g_rule(a, x, b);
          }
        }
      }
    }
    return build(std::move(carrier), std::move(gamma), s, gt);
  }

  std::size_t GammaSemigroup::gamma_product(std::size_t alpha,
                                            std::size_t a,
                                            std::size_t beta) const {
    if (!both_sided()) {
      throw RequiresBothSided("structure has no Γ×S×Γ operation");
    }
    return _g_op[(alpha * size() + a) * gamma_size() + beta];
  }

  void GammaSemigroup::verify_axioms() const {
    std::size_t n = size();
    std::size_t k = gamma_size();
    auto const& S = *_carrier;
    auto const& G = *_gamma;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t z = 0; z < n; ++z) {
              auto lhs = product(product(x, b, y), c, z);
              auto rhs = product(x, b, product(y, c, z));
              if (lhs != rhs) {
                throw AssociativityViolation(
                    "(" + S.name(x) + " " + G.name(b) + " " + S.name(y) + ") "
                    + G.name(c) + " " + S.name(z) + " = " + S.name(lhs)
                    + " but " + S.name(x) + " " + G.name(b) + " ("
                    + S.name(y) + " " + G.name(c) + " " + S.name(z)
                    + ") = " + S.name(rhs));
              }
              if (both_sided()) {
                auto mid = product(x, gamma_product(b, y, c), z);
                if (mid != lhs) {
                  throw AssociativityViolation(
                      S.name(x) + " (" + G.name(b) + " " + S.name(y) + " "
                      + G.name(c) + ") " + S.name(z) + " = " + S.name(mid)
                      + " but (" + S.name(x) + " " + G.name(b) + " "
                      + S.name(y) + ") " + G.name(c) + " " + S.name(z) + " = "
                      + S.name(lhs));
                }
              }
            }
          }
        }
      }
    }
    if (!both_sided()) {
      return;
    }
    // α(aβb)γ = (αaβ)bγ = αa(βbγ)
    for (std::size_t al = 0; al < k; ++al) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t be = 0; be < k; ++be) {
          for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t ga = 0; ga < k; ++ga) {
              auto first  = gamma_product(al, product(a, be, b), ga);
              auto second = gamma_product(gamma_product(al, a, be), b, ga);
              auto third  = gamma_product(al, a, gamma_product(be, b, ga));
              if (first != second || second != third) {
                throw AssociativityViolation(
                    "mixed law fails at α=" + G.name(al) + ", a=" + S.name(a)
                    + ", β=" + G.name(be) + ", b=" + S.name(b)
                    + ", γ=" + G.name(ga) + ": " + G.name(first) + ", "
                    + G.name(second) + ", " + G.name(third));
              }
            }
          }
        }
      }
    }
  }

  void GammaSemigroup::index_factorizations() {
    std::size_t n = size();
    std::size_t k = gamma_size();
    _factorizations.assign(n, {});
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t v = 0; v < n; ++v) {
          _factorizations[product(u, g, v)].push_back({u, g, v});
        }
      }
    }
  }

  bool GammaSemigroup::operator==(GammaSemigroup const& other) const {
    return same_symbols(_carrier, other._carrier)
           && same_symbols(_gamma, other._gamma) && _s_op == other._s_op
           && _g_op == other._g_op;
  }

  bool is_ideal(GammaSemigroup const& g, CrispSubset const& a, Side side) {
    if (!same_symbols(a.universe(), g.carrier_ptr())) {
      throw DomainMismatch("subset is not over the carrier of the Γ-semigroup");
    }
    if (a.empty()) {
      throw EmptySubset("ideals are non-empty by definition");
    }
    bool const check_left  = side != Side::right;
    bool const check_right = side != Side::left;
    for (auto m : a.indices()) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          if (check_left && !a.contains(g.product(s, c, m))) {
            return false;
          }
          if (check_right && !a.contains(g.product(m, c, s))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  RegularityResult is_regular(GammaSemigroup const& g) {
    RegularityResult result;
    result.witness.reserve(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::optional<std::size_t> beta;
      for (std::size_t b = 0; b < g.gamma_size(); ++b) {
        if (g.product(x, b, x) == x) {
          beta = b;
          break;
        }
      }
      if (!beta) {
        result.failing = x;
        result.witness.clear();
        return result;
      }
      result.witness.push_back(*beta);
    }
    result.regular = true;
    return result;
  }

  CrispSubset crisp_product(GammaSemigroup const& g,
                            CrispSubset const&    a,
                            CrispSubset const&    b) {
    if (!same_symbols(a.universe(), g.carrier_ptr())
        || !same_symbols(b.universe(), g.carrier_ptr())) {
      throw DomainMismatch("subset is not over the carrier of the Γ-semigroup");
    }
    CrispSubset out(g.carrier_ptr());
    for (auto x : a.indices()) {
      for (std::size_t c = 0; c < g.gamma_size(); ++c) {
        for (auto y : b.indices()) {
          out.insert(g.product(x, c, y));
        }
      }
    }
    return out;
  }

}  // namespace gammaq
