#pragma once

// Test structures built from their defining formulas (not from the bundled
// files), plus brute-force oracles that share no code with the library.

#include <algorithm>
#include <string>
#include <vector>

#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/operator_semigroup.hpp"
#include "gammaq/qfuzzy.hpp"

namespace fixtures {

  using namespace gammaq;

  inline std::string data_path(std::string const& name) {
    return std::string(GAMMAQ_TEST_DATA_DIR) + "/" + name;
  }

  // x θ y = x
  inline GammaSemigroup lz3() {
    return GammaSemigroup::from_rules(make_symbols({"a", "b", "c"}),
                                      make_symbols({"gamma", "delta"}),
                                      [](std::size_t x, std::size_t, std::size_t) { return x; });
  }

  // x g y = a
  inline GammaSemigroup const2() {
    return GammaSemigroup::from_rules(make_symbols({"a", "b"}),
                                      make_symbols({"g"}),
                                      [](std::size_t, std::size_t, std::size_t) { return 0; });
  }

  inline std::vector<int> const mod16_s{1, 5, 9, 13};
  inline std::vector<int> const mod16_g{3, 7, 11, 15};

  inline std::size_t position(std::vector<int> const& v, int value) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), value) - v.begin());
  }

  inline GammaSemigroup mod16() {
    return GammaSemigroup::from_rules(
        make_symbols({"1", "5", "9", "13"}),
        make_symbols({"3", "7", "11", "15"}),
        [](std::size_t x, std::size_t g, std::size_t y) {
          return position(mod16_s, (mod16_s[x] + mod16_g[g] + mod16_s[y]) % 16);
        },
        [](std::size_t a, std::size_t s, std::size_t b) {
          return position(mod16_g, (mod16_g[a] + mod16_s[s] + mod16_g[b]) % 16);
        });
  }

  inline GammaSemigroup mod4mul() {
    auto rule = [](std::size_t x, std::size_t g, std::size_t y) { return x * g * y % 4; };
    return GammaSemigroup::from_rules(
        make_symbols({"0", "1", "2", "3"}), make_symbols({"0", "1", "2", "3"}), rule, rule);
  }

  inline QSet single_q() {
    return QSet(std::vector<std::string>{"p"});
  }

  // 4/5, 7/10, 3/5 on a, b, c
  inline QFuzzySubset example_mu(GammaSemigroup const& g) {
    std::vector<Grade> values{Grade(4, 5), Grade(7, 10), Grade(3, 5)};
    return QFuzzySubset::from_values(g.carrier_ptr(), single_q(), values);
  }

  namespace oracle {

    inline bool is_ideal(GammaSemigroup const& g, std::vector<bool> const& a, Side side) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          for (std::size_t x = 0; x < g.size(); ++x) {
            if (!a[x]) {
              continue;
            }
            if (side != Side::right && !a[g.product(s, c, x)]) {
              return false;
            }
            if (side != Side::left && !a[g.product(x, c, s)]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    inline bool is_fuzzy_ideal(GammaSemigroup const& g, QFuzzySubset const& mu, Side side) {
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          for (std::size_t y = 0; y < g.size(); ++y) {
            for (std::size_t q = 0; q < mu.q_size(); ++q) {
              auto const v = mu(g.product(x, c, y), q);
              if (side != Side::right && v < mu(y, q)) {
                return false;
              }
              if (side != Side::left && v < mu(x, q)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }

    // Sup-min over every (u, γ, v), no factorization index.
    inline QFuzzySubset compose(GammaSemigroup const& g,
                                QFuzzySubset const&   mu1,
                                QFuzzySubset const&   mu2) {
      QFuzzySubset out(mu1.domain(), mu1.qset());
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t q = 0; q < mu1.q_size(); ++q) {
          Grade best = Grade::zero();
          for (std::size_t u = 0; u < g.size(); ++u) {
            for (std::size_t c = 0; c < g.gamma_size(); ++c) {
              for (std::size_t v = 0; v < g.size(); ++v) {
                if (g.product(u, c, v) == x) {
                  best = std::max(best, std::min(mu1(u, q), mu2(v, q)));
                }
              }
            }
          }
          out.set(x, q, best);
        }
      }
      return out;
    }

    inline std::vector<bool> level(QFuzzySubset const& mu, Grade const& t) {
      std::vector<bool> out(mu.domain_size(), true);
      for (std::size_t x = 0; x < mu.domain_size(); ++x) {
        for (std::size_t q = 0; q < mu.q_size(); ++q) {
          out[x] = out[x] && !(mu(x, q) < t);
        }
      }
      return out;
    }

    inline bool regular(GammaSemigroup const& g) {
      for (std::size_t x = 0; x < g.size(); ++x) {
        bool found = false;
        for (std::size_t c = 0; c < g.gamma_size(); ++c) {
          found = found || g.product(x, c, x) == x;
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    // The relation of the left operator semigroup straight from its
    // definition: xαs = yβs for all s and γxα = γyβ for all γ.
    inline bool left_related(GammaSemigroup const& g,
                             std::size_t           x,
                             std::size_t           alpha,
                             std::size_t           y,
                             std::size_t           beta) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (g.product(x, alpha, s) != g.product(y, beta, s)) {
          return false;
        }
      }
      for (std::size_t c = 0; c < g.gamma_size(); ++c) {
        if (g.gamma_product(c, x, alpha) != g.gamma_product(c, y, beta)) {
          return false;
        }
      }
      return true;
    }

    inline bool right_related(GammaSemigroup const& g,
                              std::size_t           alpha,
                              std::size_t           x,
                              std::size_t           beta,
                              std::size_t           y) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (g.product(s, alpha, x) != g.product(s, beta, y)) {
          return false;
        }
      }
      for (std::size_t c = 0; c < g.gamma_size(); ++c) {
        if (g.gamma_product(alpha, x, c) != g.gamma_product(beta, y, c)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace oracle

}  // namespace fixtures
