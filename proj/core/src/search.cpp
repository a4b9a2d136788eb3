#include <algorithm>
#include <sstream>

#include "gammaq/errors.hpp"
#include "gammaq/harness.hpp"
#include "parallel.hpp"

namespace gammaq {

  namespace {

    std::vector<std::string> carrier_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(1, static_cast<char>('a' + i));
      }
      return out;
    }

    std::vector<std::string> gamma_labels(std::size_t k) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back("g" + std::to_string(i + 1));
      }
      return out;
    }

    // Depth-first fill of the S×Γ×S table in cell order, pruning as soon as
    // an associativity instance is fully determined and fails.
    class TableSearch {
     public:
      TableSearch(std::size_t n, std::size_t k)
          : _n(n), _k(k), _cells(n * k * n), _table(_cells, unset) {}

      template <typename Visit>
      void run(Visit&& visit) {
        descend(0, visit);
      }

     private:
      static constexpr std::size_t unset = static_cast<std::size_t>(-1);

      std::size_t cell(std::size_t x, std::size_t g, std::size_t y) const {
        return (x * _k + g) * _n + y;
      }

      // False when some determined instance of (xβy)γz = xβ(yγz) fails.
      bool consistent() const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t b = 0; b < _k; ++b) {
            for (std::size_t y = 0; y < _n; ++y) {
              auto const u = _table[cell(x, b, y)];
              if (u == unset) {
                continue;
              }
              for (std::size_t c = 0; c < _k; ++c) {
                for (std::size_t z = 0; z < _n; ++z) {
                  auto const v = _table[cell(y, c, z)];
                  if (v == unset) {
                    continue;
                  }
                  auto const lhs = _table[cell(u, c, z)];
                  auto const rhs = _table[cell(x, b, v)];
                  if (lhs != unset && rhs != unset && lhs != rhs) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      template <typename Visit>
      void descend(std::size_t i, Visit& visit) {
        if (i == _cells) {
          visit(_table);
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _table[i] = v;
          if (consistent()) {
            descend(i + 1, visit);
          }
        }
        _table[i] = unset;
      }

      std::size_t              _n;
      std::size_t              _k;
      std::size_t              _cells;
      std::vector<std::size_t> _table;
    };

    std::string describe_structure(GammaSemigroup const& g) {
      std::ostringstream out;
      out << "|S|=" << g.size() << " |Γ|=" << g.gamma_size();
      for (std::size_t c = 0; c < g.gamma_size(); ++c) {
        out << " SGS " << g.gamma().name(c) << ":";
        for (std::size_t x = 0; x < g.size(); ++x) {
          out << (x == 0 ? " " : " / ");
          for (std::size_t y = 0; y < g.size(); ++y) {
            out << g.carrier().name(g.product(x, c, y));
          }
        }
      }
      return out.str();
    }

    struct PropertyPlan {
      std::vector<std::string> theorems;
      LevelThresholds          thresholds = LevelThresholds::image;
    };

    PropertyPlan plan_for(std::string_view property) {
      if (property == "level-criterion") {
        return {{"3.7"}, LevelThresholds::image};
      }
      if (property == "level-criterion-all") {
        return {{"3.7"}, LevelThresholds::all_nonempty};
      }
      if (property == "characteristic") {
        return {{"3.5"}};
      }
      if (property == "chi-inclusion") {
        return {{"4.2", "4.3"}};
      }
      if (property == "regularity") {
        return {{"4.7"}};
      }
      if (property == "crisp-regularity") {
        return {{"crisp-4.7"}};
      }
      throw UnknownTheorem("unknown search property '" + std::string(property) + "'");
    }

  }  // namespace

  std::vector<std::string> const& search_properties() {
    static std::vector<std::string> const names{"level-criterion",
                                                "level-criterion-all",
                                                "characteristic",
                                                "chi-inclusion",
                                                "regularity",
                                                "crisp-regularity"};
    return names;
  }

  std::vector<GammaSemigroup> enumerate_gamma_semigroups_of_size(std::size_t n,
                                                                 std::size_t k) {
    if (n == 0 || k == 0) {
      throw OutOfRange("structures need |S| ≥ 1 and |Γ| ≥ 1");
    }
    auto const carrier = make_symbols(carrier_labels(n));
    auto const gamma   = make_symbols(gamma_labels(k));
    std::vector<GammaSemigroup> out;
    TableSearch(n, k).run([&](std::vector<std::size_t> const& table) {
      OperationTable op(table.begin(), table.end());
      out.push_back(GammaSemigroup::build(carrier, gamma, op));
    });
    return out;
  }

  std::vector<GammaSemigroup> enumerate_gamma_semigroups(std::size_t max_s,
                                                         std::size_t max_g) {
    std::vector<GammaSemigroup> out;
    for (std::size_t n = 1; n <= max_s; ++n) {
      for (std::size_t k = 1; k <= max_g; ++k) {
        auto part = enumerate_gamma_semigroups_of_size(n, k);
        std::move(part.begin(), part.end(), std::back_inserter(out));
      }
    }
    return out;
  }

  VerdictReport run_search(std::string_view property, SearchOptions const& options) {
    auto const plan = plan_for(property);
    if (options.max_s > options.limit_s || options.max_g > options.limit_g) {
      throw BoundExceeded("search is limited to |S| ≤ " + std::to_string(options.limit_s)
                          + " and |Γ| ≤ " + std::to_string(options.limit_g) + ", asked for |S| ≤ "
                          + std::to_string(options.max_s) + ", |Γ| ≤ "
                          + std::to_string(options.max_g));
    }
    if (options.max_s == 0 || options.max_g == 0) {
      throw OutOfRange("search needs |S| ≥ 1 and |Γ| ≥ 1");
    }
    if (options.q_size == 0) {
      throw OutOfRange("Q must have at least one element");
    }
    // Fail before enumerating anything if the largest carrier is too big.
    if (auto count = assignment_count(options.grid.size(), options.max_s * options.q_size);
        !count || *count > options.bound) {
      throw BoundExceeded("grid enumeration on |S|=" + std::to_string(options.max_s)
                          + " exceeds the bound of " + std::to_string(options.bound));
    }

    auto const start      = std::chrono::steady_clock::now();
    auto const structures = enumerate_gamma_semigroups(options.max_s, options.max_g);

    VerifyOptions inner;
    inner.grid       = options.grid;
    inner.q_size     = options.q_size;
    inner.bound      = options.bound;
    inner.thresholds = plan.thresholds;
    inner.jobs       = 1;

    auto const per_structure
        = detail::parallel_map(structures.size(), options.jobs, [&](std::size_t i) {
            Tally tally;
            auto  label = describe_structure(structures[i]);
            for (auto const& id : plan.theorems) {
              auto r = run_verify(structures[i], label, id, inner);
              tally.cases += r.cases_checked;
              tally.agreements += r.agreements;
              tally.vacuous += r.vacuous;
              for (auto& d : r.discrepancies) {
                tally.discrepancies.push_back(label + " [" + id + "] " + d);
              }
            }
            return tally;
          });

    VerdictReport report;
    report.theorem_id = std::string(property);
    std::ostringstream id;
    id << "search:|S|<=" << options.max_s << ",|Γ|<=" << options.max_g
       << ",|Q|=" << options.q_size << ",grid=" << options.grid.size();
    report.structure_id = id.str();
    for (auto const& t : per_structure) {
      report.absorb(t);
    }
    report.notes.push_back("structures enumerated: " + std::to_string(structures.size()));
    report.notes.push_back("discrepancies are findings about the property, not failures of "
                           "the search");
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

}  // namespace gammaq
