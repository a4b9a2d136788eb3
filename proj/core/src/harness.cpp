#include "gammaq/harness.hpp"

#include <array>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>

#include "gammaq/composition.hpp"
#include "gammaq/crisp_subset.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/transfer.hpp"
#include "parallel.hpp"

namespace gammaq {

  namespace {

    using Clock = std::chrono::steady_clock;

    nlohmann::json report_json(VerdictReport const& r, bool with_elapsed) {
      nlohmann::json j;
      j["theorem_id"]    = r.theorem_id;
      j["structure_id"]  = r.structure_id;
      j["cases_checked"] = r.cases_checked;
      j["agreements"]    = r.agreements;
      j["vacuous"]       = r.vacuous;
      j["discrepancies"] = r.discrepancies;
      j["notes"]         = r.notes;
      if (with_elapsed) {
        j["elapsed_seconds"] = r.elapsed.count();
      }
      return j;
    }

    std::string side_tag(Side side) {
      return "[" + std::string(to_string(side)) + "] ";
    }

    // One case covering several sides: agrees when every side agrees,
    // vacuous when every side is vacuous.
    Verdict across_sides(std::vector<std::pair<Side, Verdict>> const& parts) {
      Verdict out{true, true, true, {}};
      for (auto const& [side, v] : parts) {
        out.vacuous = out.vacuous && v.vacuous;
        if (!v.agrees() && out.agrees()) {
          out.lhs     = v.lhs;
          out.rhs     = v.rhs;
          out.vacuous = false;
          out.witness = side_tag(side) + v.witness;
        }
      }
      if (!out.vacuous && out.agrees()) {
        out.lhs = out.rhs = true;
      }
      return out;
    }

    // Runs fn over every index in parallel and folds the tallies in order.
    template <typename Fn>
    Tally fold(std::size_t n, unsigned jobs, Fn&& fn) {
      Tally total;
      for (auto const& t : detail::parallel_map(n, jobs, std::forward<Fn>(fn))) {
        total.merge(t);
      }
      return total;
    }

    std::vector<QFuzzySubset> grid_subsets(SymbolTablePtr const& domain,
                                           QSet const&           q,
                                           VerifyOptions const&  options) {
      return enumerate_q_fuzzy_subsets(domain, q, options.grid, options.bound)
          .collect();
    }

    std::vector<QFuzzySubset> nonempty_ideals(GammaSemigroup const&            g,
                                              std::vector<QFuzzySubset> const& all,
                                              Side                             side) {
      std::vector<QFuzzySubset> out;
      for (auto const& mu : all) {
        if (mu.is_nonempty() && is_q_fuzzy_ideal(g, mu, side).holds) {
          out.push_back(mu);
        }
      }
      return out;
    }

    constexpr std::array<Side, 3> all_sides{Side::left, Side::right, Side::both};

    struct Context {
      GammaSemigroup const& g;
      VerifyOptions const&  options;
      QSet                  q;
      VerdictReport&        report;
    };

    void characteristic_criterion(Context& c) {
      Tally tally;
      for (auto const& ideal : enumerate_subsets(c.g.carrier_ptr(), true)) {
        for (Side side : all_sides) {
          tally.record(check_characteristic_criterion(c.g, ideal, c.q, side),
                       side_tag(side) + "I=" + ideal.to_string());
        }
      }
      c.report.absorb(tally);
      c.report.notes.push_back("one case per nonempty subset and side");
    }

    void two_valued_ideals(Context& c) {
      auto const& grid = c.options.grid;
      Tally       tally;
      for (auto const& ideal : enumerate_subsets(c.g.carrier_ptr(), true)) {
        for (Side side : all_sides) {
          if (!is_ideal(c.g, ideal, side)) {
            continue;
          }
          for (auto const& alpha : grid) {
            for (auto const& beta : grid) {
              if (beta < alpha || beta == Grade::zero()) {
                continue;
              }
              auto const mu    = two_valued(c.g, ideal, alpha, beta, c.q);
              auto const check = is_q_fuzzy_ideal(c.g, mu, side);
              tally.record(Verdict::holds(
                  check.holds,
                  side_tag(side) + "I=" + ideal.to_string() + " α=" + alpha.to_string()
                      + " β=" + beta.to_string() + "; "
                      + (check.violation ? describe(c.g, mu, *check.violation) : "")));
            }
          }
        }
      }
      c.report.absorb(tally);
      c.report.notes.push_back(
          "one case per crisp ideal, side and grid pair α ≤ β with β ≠ 0");
    }

    void level_criterion(Context& c) {
      auto const subsets = grid_subsets(c.g.carrier_ptr(), c.q, c.options);
      c.report.absorb(fold(subsets.size(), c.options.jobs, [&](std::size_t i) {
        std::vector<std::pair<Side, Verdict>> parts;
        for (Side side : all_sides) {
          parts.emplace_back(side,
                             check_level_criterion(c.g, subsets[i], side, c.options.thresholds));
        }
        Tally t;
        t.record(across_sides(parts));
        return t;
      }));
      c.report.notes.push_back("one case per grid fuzzy subset, all three sides");
      c.report.notes.push_back(
          std::string("thresholds: ")
          + (c.options.thresholds == LevelThresholds::image ? "image" : "all-nonempty"));
    }

    void chi_inclusion(Context& c, std::vector<Side> const& sides, char const* note) {
      auto const subsets = grid_subsets(c.g.carrier_ptr(), c.q, c.options);
      c.report.absorb(fold(subsets.size(), c.options.jobs, [&](std::size_t i) {
        std::vector<std::pair<Side, Verdict>> parts;
        for (Side side : sides) {
          parts.emplace_back(side, check_chi_inclusion(c.g, subsets[i], side));
        }
        Tally t;
        t.record(across_sides(parts), "μ=" + subsets[i].to_string());
        return t;
      }));
      c.report.notes.push_back(note);
    }

    void pair_check(Context&                                            c,
                    Side                                                first,
                    Side                                                second,
                    std::function<Verdict(QFuzzySubset const&, QFuzzySubset const&)> check,
                    char const*                                         note) {
      auto const subsets = grid_subsets(c.g.carrier_ptr(), c.q, c.options);
      auto const firsts  = nonempty_ideals(c.g, subsets, first);
      auto const seconds = nonempty_ideals(c.g, subsets, second);
      c.report.absorb(fold(firsts.size(), c.options.jobs, [&](std::size_t i) {
        Tally t;
        for (auto const& mu2 : seconds) {
          t.record(check(firsts[i], mu2));
        }
        return t;
      }));
      c.report.notes.push_back(note);
      c.report.notes.push_back("first factors: " + std::to_string(firsts.size())
                               + ", second factors: " + std::to_string(seconds.size()));
    }

    void meet_below_product(Context& c) {
      auto const subsets = grid_subsets(c.g.carrier_ptr(), c.q, c.options);
      c.report.absorb(fold(subsets.size(), c.options.jobs, [&](std::size_t i) {
        Tally t;
        for (auto const& mu2 : subsets) {
          t.record(check_meet_below_product(c.g, subsets[i], mu2));
        }
        return t;
      }));
      c.report.notes.push_back("one case per ordered pair of grid fuzzy subsets");
    }

    void regularity_criterion(Context& c) {
      auto const r = check_regularity_criterion(c.g, c.q, c.options.grid, c.options.bound);
      Tally      tally;
      tally.record(r.verdict);
      c.report.absorb(tally);
      c.report.notes.push_back("right ideals: " + std::to_string(r.right_ideals)
                               + ", left ideals: " + std::to_string(r.left_ideals)
                               + ", pairs: " + std::to_string(r.pairs));
      c.report.notes.push_back("witness: " + r.verdict.witness);
    }

    void crisp_regularity_criterion(Context& c) {
      auto const v = check_crisp_regularity_criterion(c.g);
      Tally      tally;
      tally.record(v);
      c.report.absorb(tally);
      c.report.notes.push_back("witness: " + v.witness);
    }

    void crisp_transfer(Context& c, OperatorContext const& ctx, Transfer t) {
      Tally tally;
      auto  sides = transfer_sides(t);
      for (auto const& input : enumerate_subsets(transfer_source(ctx, t), true)) {
        for (Side side : sides) {
          tally.record(check_transfer(ctx, t, side, input), side_tag(side));
        }
      }
      c.report.absorb(tally);
      c.report.notes.push_back(std::string(to_string(t))
                               + ": one case per nonempty subset and side");
    }

    void fuzzy_transfer(Context& c, OperatorContext const& ctx, Transfer t) {
      auto const subsets = grid_subsets(transfer_source(ctx, t), c.q, c.options);
      auto const sides   = transfer_sides(t);
      c.report.absorb(fold(subsets.size(), c.options.jobs, [&](std::size_t i) {
        Tally tally;
        for (Side side : sides) {
          tally.record(check_transfer(ctx, t, side, subsets[i]), side_tag(side));
        }
        return tally;
      }));
      c.report.notes.push_back(std::string(to_string(t))
                               + ": one case per grid fuzzy subset and side");
    }

    void level_commutation(Context& c, OperatorContext const& ctx, bool prime) {
      auto const& domain
          = prime ? c.g.carrier_ptr() : ctx.right().domain();
      auto const subsets = grid_subsets(domain, c.q, c.options);
      c.report.absorb(fold(subsets.size(), c.options.jobs, [&](std::size_t i) {
        Tally t;
        for (auto const& level : image(subsets[i])) {
          auto v = prime ? check_star_prime_level_commutation(c.g, ctx.right(), subsets[i], level)
                         : check_star_level_commutation(ctx.right(), subsets[i], level);
          t.record(v, "μ=" + subsets[i].to_string() + " t=" + level.to_string());
        }
        return t;
      }));
      c.report.notes.push_back("one case per grid fuzzy subset and t in its image");
      c.report.notes.push_back(ctx.has_unities() ? "structure has both unities"
                                                 : "structure lacks a unity");
    }

    using Runner = std::function<void(Context&)>;

    Runner needs_operators(std::function<void(Context&, OperatorContext const&)> body) {
      return [body = std::move(body)](Context& c) {
        OperatorContext ctx(c.g);
        body(c, ctx);
      };
    }

    std::vector<std::pair<std::string, Runner>> const& runners() {
      static std::vector<std::pair<std::string, Runner>> const table = [] {
        std::vector<std::pair<std::string, Runner>> t;
        t.emplace_back("3.5", characteristic_criterion);
        t.emplace_back("3.6", two_valued_ideals);
        t.emplace_back("3.7", level_criterion);
        t.emplace_back("4.2", [](Context& c) {
          chi_inclusion(c, {Side::left, Side::right},
                        "one case per grid fuzzy subset, left and right");
        });
        t.emplace_back("4.3", [](Context& c) {
          chi_inclusion(c, {Side::both}, "one case per grid fuzzy subset");
        });
        t.emplace_back("4.4", [](Context& c) {
          pair_check(
              c, Side::right, Side::left,
              [&c](auto const& a, auto const& b) { return check_product_below_meet(c.g, a, b); },
              "one case per (grid fuzzy right ideal, grid fuzzy left ideal)");
        });
        t.emplace_back("4.5", [](Context& c) {
          pair_check(
              c, Side::both, Side::both,
              [&c](auto const& a, auto const& b) { return check_ideal_product_chain(c.g, a, b); },
              "one case per ordered pair of grid fuzzy ideals");
        });
        t.emplace_back("4.6", meet_below_product);
        t.emplace_back("4.7", regularity_criterion);
        t.emplace_back("crisp-4.7", crisp_regularity_criterion);
        auto crisp = [](Transfer tr) {
          return needs_operators([tr](Context& c, OperatorContext const& ctx) {
            crisp_transfer(c, ctx, tr);
          });
        };
        auto fuzzy = [](Transfer tr) {
          return needs_operators([tr](Context& c, OperatorContext const& ctx) {
            fuzzy_transfer(c, ctx, tr);
          });
        };
        t.emplace_back("5.3", crisp(Transfer::plus_crisp));
        t.emplace_back("5.4", crisp(Transfer::plus_prime_crisp));
        t.emplace_back("5.5", crisp(Transfer::star_crisp));
        t.emplace_back("5.6", crisp(Transfer::star_prime_crisp));
        t.emplace_back("5.7", needs_operators([](Context& c, OperatorContext const& ctx) {
                         level_commutation(c, ctx, false);
                       }));
        t.emplace_back("5.8", needs_operators([](Context& c, OperatorContext const& ctx) {
                         level_commutation(c, ctx, true);
                       }));
        t.emplace_back("5.9", fuzzy(Transfer::star_fuzzy));
        t.emplace_back("5.10", fuzzy(Transfer::star_prime_fuzzy));
        t.emplace_back("5.11", fuzzy(Transfer::plus_fuzzy));
        t.emplace_back("5.12", fuzzy(Transfer::plus_prime_fuzzy));
        auto bijection = [](OperatorKind kind) {
          return needs_operators([kind](Context& c, OperatorContext const& ctx) {
            c.report.absorb(
                check_bijection(ctx, kind, c.q, c.options.grid, c.options.bound));
            c.report.notes.push_back(
                std::string("round trips, ideal images and inclusion over ")
                + (kind == OperatorKind::left ? "+ and +'" : "* and *'"));
          });
        };
        t.emplace_back("5.13", bijection(OperatorKind::left));
        t.emplace_back("5.14", bijection(OperatorKind::right));
        return t;
      }();
      return table;
    }

    // Why the structure does not meet the theorem's hypotheses, if it does not.
    std::optional<std::string> inapplicable(GammaSemigroup const& g,
                                            std::string const&    id,
                                            bool                  regular,
                                            bool                  unities) {
      if (id == "4.6" && !regular) {
        return "skipped: the structure is not regular";
      }
      if (id.rfind("5.", 0) != 0) {
        return std::nullopt;
      }
      if (!g.both_sided()) {
        return "skipped: the structure is one-sided";
      }
      if (id != "5.7" && id != "5.8" && !unities) {
        return "skipped: the structure lacks a left or right unity";
      }
      return std::nullopt;
    }

  }  // namespace

  void VerdictReport::absorb(Tally const& tally) {
    cases_checked += tally.cases;
    agreements += tally.agreements;
    vacuous += tally.vacuous;
    discrepancies.insert(
        discrepancies.end(), tally.discrepancies.begin(), tally.discrepancies.end());
  }

  std::string VerdictReport::to_json(bool with_elapsed) const {
    return report_json(*this, with_elapsed).dump(2);
  }

  std::string to_json(std::vector<VerdictReport> const& reports, bool with_elapsed) {
    auto arr = nlohmann::json::array();
    for (auto const& r : reports) {
      arr.push_back(report_json(r, with_elapsed));
    }
    return arr.dump(2);
  }

  std::vector<std::string> const& theorem_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& [id, runner] : runners()) {
        out.push_back(id);
      }
      return out;
    }();
    return ids;
  }

  VerdictReport run_verify(GammaSemigroup const& g,
                           std::string_view      structure_id,
                           std::string_view      theorem_id,
                           VerifyOptions const&  options) {
    auto const& table = runners();
    auto const  it    = std::find_if(table.begin(), table.end(), [&](auto const& entry) {
      return entry.first == theorem_id;
    });
    if (it == table.end()) {
      throw UnknownTheorem("unknown theorem id '" + std::string(theorem_id) + "'");
    }
    if (options.q_size == 0) {
      throw OutOfRange("Q must have at least one element");
    }
    VerdictReport report;
    report.theorem_id   = theorem_id;
    report.structure_id = structure_id;
    auto const start    = Clock::now();
    Context    c{g, options, QSet::generated(options.q_size), report};
    it->second(c);
    report.elapsed = Clock::now() - start;
    return report;
  }

  std::vector<VerdictReport> run_verify_all(GammaSemigroup const& g,
                                            std::string_view      structure_id,
                                            VerifyOptions const&  options) {
    bool const regular = is_regular(g).regular;
    bool       unities = false;
    if (g.both_sided()) {
      unities = OperatorContext(g).has_unities();
    }
    std::vector<VerdictReport> reports;
    for (auto const& id : theorem_ids()) {
      if (auto why = inapplicable(g, id, regular, unities)) {
        VerdictReport skipped;
        skipped.theorem_id   = id;
        skipped.structure_id = structure_id;
        skipped.notes.push_back(*why);
        reports.push_back(std::move(skipped));
        continue;
      }
      reports.push_back(run_verify(g, structure_id, id, options));
    }
    return reports;
  }

}  // namespace gammaq
