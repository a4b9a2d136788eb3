#include "gammaq/operator_semigroup.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "gammaq/errors.hpp"

namespace gammaq {

  std::string_view to_string(OperatorKind kind) {
    return kind == OperatorKind::left ? "left" : "right";
  }

  OperatorKind parse_operator_kind(std::string_view text) {
    if (text == "left") {
      return OperatorKind::left;
    }
    if (text == "right") {
      return OperatorKind::right;
    }
    throw std::invalid_argument("operator kind must be left or right, found '"
                                + std::string(text) + "'");
  }

  namespace {

    // The values that determine a pair's class; two pairs are related iff
    // their signatures coincide.
    std::vector<std::size_t> signature(GammaSemigroup const& g,
                                       OperatorKind          kind,
                                       OperatorPair const&   p) {
      std::vector<std::size_t> sig;
      sig.reserve(g.size() + g.gamma_size());
      if (kind == OperatorKind::left) {
        auto [x, alpha] = p;
        for (std::size_t s = 0; s < g.size(); ++s) {
          sig.push_back(g.product(x, alpha, s));
        }
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          sig.push_back(g.gamma_product(c, x, alpha));
        }
      } else {
        auto [alpha, x] = p;
        for (std::size_t s = 0; s < g.size(); ++s) {
          sig.push_back(g.product(s, alpha, x));
        }
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          sig.push_back(g.gamma_product(alpha, x, c));
        }
      }
      return sig;
    }

    // Pair for the product of two pairs, before taking classes.
    OperatorPair raw_product(GammaSemigroup const& g,
                             OperatorKind          kind,
                             OperatorPair const&   p,
                             OperatorPair const&   r) {
      if (kind == OperatorKind::left) {
        // [x,α][y,β] = [xαy,β]
        return {g.product(p.first, p.second, r.first), r.second};
      }
      // [α,a][β,b] = [αaβ,b]
      return {g.gamma_product(p.first, p.second, r.first), r.second};
    }

    std::string label(GammaSemigroup const& g,
                      OperatorKind          kind,
                      OperatorPair const&   p) {
      if (kind == OperatorKind::left) {
        return "[" + g.carrier().name(p.first) + "," + g.gamma().name(p.second)
               + "]";
      }
      return "[" + g.gamma().name(p.first) + "," + g.carrier().name(p.second)
             + "]";
    }

  }  // namespace

  bool operator_related(GammaSemigroup const& g,
                        OperatorKind          kind,
                        OperatorPair const&   p,
                        OperatorPair const&   r) {
    if (!g.both_sided()) {
      throw RequiresBothSided("operator semigroups need the Γ×S×Γ operation");
    }
    return signature(g, kind, p) == signature(g, kind, r);
  }

  OperatorSemigroup build_operator_semigroup(GammaSemigroup const& g,
                                             OperatorKind          kind) {
    if (!g.both_sided()) {
      throw RequiresBothSided("operator semigroups need the Γ×S×Γ operation");
    }
    OperatorSemigroup os;
    os._kind           = kind;
    os._source_carrier = g.carrier_ptr();
    os._source_gamma   = g.gamma_ptr();

    std::size_t const first_size
        = kind == OperatorKind::left ? g.size() : g.gamma_size();
    std::size_t const second_size
        = kind == OperatorKind::left ? g.gamma_size() : g.size();
    os._second_size = second_size;
    os._class_of.assign(first_size * second_size, 0);

    std::map<std::vector<std::size_t>, std::size_t> classes;
    for (std::size_t a = 0; a < first_size; ++a) {
      for (std::size_t b = 0; b < second_size; ++b) {
        OperatorPair p{a, b};
        auto [it, inserted] = classes.emplace(signature(g, kind, p), os._elements.size());
        if (inserted) {
          os._elements.push_back(OperatorElement{kind, p, {}});
        }
        os._elements[it->second].members.push_back(p);
        os._class_of[a * second_size + b] = it->second;
      }
    }

    std::size_t const n = os._elements.size();
    os._mult.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto p = raw_product(g,
                             kind,
                             os._elements[i].representative,
                             os._elements[j].representative);
        os._mult[i * n + j] = os.class_of(p.first, p.second);
      }
    }

    if (auto wd = check_well_defined(g, os); wd.violations != 0) {
      throw WellDefinednessViolation(
          std::to_string(wd.violations) + " of "
          + std::to_string(wd.pairs_checked)
          + " representative pairs give a product outside the expected class");
    }

    for (std::size_t i = 0; i < n && !os._unity; ++i) {
      auto const [a, b] = os._elements[i].representative;
      bool acts_as_identity = true;
      for (std::size_t s = 0; s < g.size() && acts_as_identity; ++s) {
        acts_as_identity = kind == OperatorKind::left ? g.product(a, b, s) == s
                                                      : g.product(s, a, b) == s;
      }
      if (acts_as_identity) {
        os._unity = i;
      }
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& e : os._elements) {
      labels.push_back(label(g, kind, e.representative));
    }
    // Associativity of the induced product is verified here.
    os._as_semigroup = GammaSemigroup::from_rules(
        make_symbols(std::move(labels)),
        make_symbols({"·"}),
        [&os](std::size_t i, std::size_t, std::size_t j) {
          return os.product(i, j);
        });
    return os;
  }

  WellDefinedness check_well_defined(GammaSemigroup const&    g,
                                     OperatorSemigroup const& os) {
    WellDefinedness result;
    for (std::size_t i = 0; i < os.size(); ++i) {
      for (std::size_t j = 0; j < os.size(); ++j) {
        auto const expected = os.product(i, j);
        for (auto const& p : os.element(i).members) {
          for (auto const& r : os.element(j).members) {
            ++result.pairs_checked;
            auto prod = raw_product(g, os.kind(), p, r);
            if (os.class_of(prod.first, prod.second) != expected) {
              ++result.violations;
            }
          }
        }
      }
    }
    return result;
  }

}  // namespace gammaq
