#include "gammaq/transfer.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

  OperatorContext::OperatorContext(GammaSemigroup source)
      : _source(std::move(source)),
        _left(build_left_operator(_source)),
        _right(build_right_operator(_source)) {}

  void OperatorContext::require_unities() const {
    if (!_left.unity()) {
      throw MissingUnity("the Γ-semigroup has no left unity");
    }
    if (!_right.unity()) {
      throw MissingUnity("the Γ-semigroup has no right unity");
    }
  }

  namespace {

    void require_kind(OperatorSemigroup const& os, OperatorKind kind) {
      if (os.kind() != kind) {
        throw KindMismatch("expected the " + std::string(to_string(kind))
                           + " operator semigroup");
      }
    }

    void require_domain(SymbolTablePtr const& actual,
                        SymbolTablePtr const& expected,
                        char const*           what) {
      if (!same_symbols(actual, expected)) {
        throw DomainMismatch(std::string("argument is not over ") + what);
      }
    }

    // Shared shape of * and +: min over γ of the class grade.
    QFuzzySubset pull_to_carrier(OperatorSemigroup const& os,
                                 QFuzzySubset const&      mu) {
      require_domain(mu.domain(), os.domain(), "the operator semigroup");
      std::size_t const n = os.source_carrier()->size();
      std::size_t const k = os.source_gamma()->size();
      QFuzzySubset      out(os.source_carrier(), mu.qset());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t q = 0; q < mu.q_size(); ++q) {
          Grade m = Grade::one();
          for (std::size_t c = 0; c < k; ++c) {
            auto cls = os.kind() == OperatorKind::left ? os.class_of(a, c)
                                                       : os.class_of(c, a);
            m = std::min(m, mu(cls, q));
          }
          out.set(a, q, m);
        }
      }
      return out;
    }

    // Shared shape of *' and +': min over s of the grade of the product of
    // the class representative with s.
    QFuzzySubset push_to_operator(GammaSemigroup const&    g,
                                  OperatorSemigroup const& os,
                                  QFuzzySubset const&      sigma) {
      require_domain(sigma.domain(), g.carrier_ptr(), "S");
      require_domain(os.source_carrier(), g.carrier_ptr(), "S");
      QFuzzySubset out(os.domain(), sigma.qset());
      for (std::size_t i = 0; i < os.size(); ++i) {
        auto const [a, b] = os.element(i).representative;
        for (std::size_t q = 0; q < sigma.q_size(); ++q) {
          Grade m = Grade::one();
          for (std::size_t s = 0; s < g.size(); ++s) {
            auto z = os.kind() == OperatorKind::left ? g.product(a, b, s)
                                                     : g.product(s, a, b);
            m = std::min(m, sigma(z, q));
          }
          out.set(i, q, m);
        }
      }
      return out;
    }

    CrispSubset pull_crisp(OperatorSemigroup const& os, CrispSubset const& i) {
      require_domain(i.universe(), os.domain(), "the operator semigroup");
      std::size_t const n = os.source_carrier()->size();
      std::size_t const k = os.source_gamma()->size();
      CrispSubset       out(os.source_carrier());
      for (std::size_t s = 0; s < n; ++s) {
        bool all = true;
        for (std::size_t c = 0; c < k && all; ++c) {
          all = i.contains(os.kind() == OperatorKind::left ? os.class_of(s, c)
                                                           : os.class_of(c, s));
        }
        if (all) {
          out.insert(s);
        }
      }
      return out;
    }

    CrispSubset push_crisp(GammaSemigroup const&    g,
                           OperatorSemigroup const& os,
                           CrispSubset const&       p) {
      require_domain(p.universe(), g.carrier_ptr(), "S");
      require_domain(os.source_carrier(), g.carrier_ptr(), "S");
      CrispSubset out(os.domain());
      for (std::size_t i = 0; i < os.size(); ++i) {
        auto const [a, b] = os.element(i).representative;
        bool all          = true;
        for (std::size_t s = 0; s < g.size() && all; ++s) {
          all = p.contains(os.kind() == OperatorKind::left ? g.product(a, b, s)
                                                           : g.product(s, a, b));
        }
        if (all) {
          out.insert(i);
        }
      }
      return out;
    }

    bool is_crisp_ideal(GammaSemigroup const& g, CrispSubset const& a, Side side) {
      return !a.empty() && is_ideal(g, a, side);
    }

    bool is_fuzzy_ideal(GammaSemigroup const& g, QFuzzySubset const& mu, Side side) {
      return mu.is_nonempty() && is_q_fuzzy_ideal(g, mu, side).holds;
    }

    void require_side(Transfer t, Side side) {
      auto sides = transfer_sides(t);
      if (std::find(sides.begin(), sides.end(), side) == sides.end()) {
        throw PreconditionViolated("side '" + std::string(to_string(side))
                                   + "' is not stated for the "
                                   + std::string(to_string(t)) + " map");
      }
    }

  }  // namespace

  QFuzzySubset star_fuzzy(OperatorSemigroup const& r, QFuzzySubset const& mu) {
    require_kind(r, OperatorKind::right);
    return pull_to_carrier(r, mu);
  }

  QFuzzySubset star_prime_fuzzy(GammaSemigroup const&    g,
                                OperatorSemigroup const& r,
                                QFuzzySubset const&      sigma) {
    require_kind(r, OperatorKind::right);
    return push_to_operator(g, r, sigma);
  }

  QFuzzySubset plus_fuzzy(OperatorSemigroup const& l, QFuzzySubset const& delta) {
    require_kind(l, OperatorKind::left);
    return pull_to_carrier(l, delta);
  }

  QFuzzySubset plus_prime_fuzzy(GammaSemigroup const&    g,
                                OperatorSemigroup const& l,
                                QFuzzySubset const&      eta) {
    require_kind(l, OperatorKind::left);
    return push_to_operator(g, l, eta);
  }

  CrispSubset star_crisp(OperatorSemigroup const& r, CrispSubset const& i) {
    require_kind(r, OperatorKind::right);
    return pull_crisp(r, i);
  }

  CrispSubset star_prime_crisp(GammaSemigroup const&    g,
                               OperatorSemigroup const& r,
                               CrispSubset const&       p) {
    require_kind(r, OperatorKind::right);
    return push_crisp(g, r, p);
  }

  CrispSubset plus_crisp(OperatorSemigroup const& l, CrispSubset const& j) {
    require_kind(l, OperatorKind::left);
    return pull_crisp(l, j);
  }

  CrispSubset plus_prime_crisp(GammaSemigroup const&    g,
                               OperatorSemigroup const& l,
                               CrispSubset const&       q) {
    require_kind(l, OperatorKind::left);
    return push_crisp(g, l, q);
  }

  Verdict check_star_level_commutation(OperatorSemigroup const& r,
                                       QFuzzySubset const&      mu,
                                       Grade const&             t) {
    auto lhs = star_crisp(r, level_set(mu, t));
    auto rhs = level_set(star_fuzzy(r, mu), t);
    if (lhs.empty() && rhs.empty()) {
      return Verdict::vacuous_case();
    }
    if (lhs == rhs) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          "μ=" + mu.to_string() + " t=" + t.to_string()
                              + ": (μ_t)*=" + lhs.to_string()
                              + " but (μ*)_t=" + rhs.to_string());
  }

  Verdict check_star_prime_level_commutation(GammaSemigroup const&    g,
                                             OperatorSemigroup const& r,
                                             QFuzzySubset const&      sigma,
                                             Grade const&             t) {
    auto lhs = star_prime_crisp(g, r, level_set(sigma, t));
    auto rhs = level_set(star_prime_fuzzy(g, r, sigma), t);
    if (lhs.empty() && rhs.empty()) {
      return Verdict::vacuous_case();
    }
    if (lhs == rhs) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          "σ=" + sigma.to_string() + " t=" + t.to_string()
                              + ": (σ_t)*'=" + lhs.to_string()
                              + " but (σ*')_t=" + rhs.to_string());
  }

  std::string_view to_string(Transfer t) {
    switch (t) {
      case Transfer::plus_crisp:
        return "plus-crisp";
      case Transfer::plus_prime_crisp:
        return "plus-prime-crisp";
      case Transfer::star_crisp:
        return "star-crisp";
      case Transfer::star_prime_crisp:
        return "star-prime-crisp";
      case Transfer::star_fuzzy:
        return "star";
      case Transfer::star_prime_fuzzy:
        return "star-prime";
      case Transfer::plus_fuzzy:
        return "plus";
      case Transfer::plus_prime_fuzzy:
        return "plus-prime";
    }
    return "?";
  }

  bool is_fuzzy(Transfer t) {
    switch (t) {
      case Transfer::star_fuzzy:
      case Transfer::star_prime_fuzzy:
      case Transfer::plus_fuzzy:
      case Transfer::plus_prime_fuzzy:
        return true;
      default:
        return false;
    }
  }

  namespace {

    bool uses_left_operator(Transfer t) {
      switch (t) {
        case Transfer::plus_crisp:
        case Transfer::plus_prime_crisp:
        case Transfer::plus_fuzzy:
        case Transfer::plus_prime_fuzzy:
          return true;
        default:
          return false;
      }
    }

    bool reads_from_carrier(Transfer t) {
      switch (t) {
        case Transfer::plus_prime_crisp:
        case Transfer::star_prime_crisp:
        case Transfer::star_prime_fuzzy:
        case Transfer::plus_prime_fuzzy:
          return true;
        default:
          return false;
      }
    }

    GammaSemigroup const& operator_structure(OperatorContext const& ctx,
                                             Transfer               t) {
      return uses_left_operator(t) ? ctx.left().semigroup()
                                   : ctx.right().semigroup();
    }

    GammaSemigroup const& from_structure(OperatorContext const& ctx, Transfer t) {
      return reads_from_carrier(t) ? ctx.source() : operator_structure(ctx, t);
    }

    GammaSemigroup const& to_structure(OperatorContext const& ctx, Transfer t) {
      return reads_from_carrier(t) ? operator_structure(ctx, t) : ctx.source();
    }

  }  // namespace

  SymbolTablePtr const& transfer_source(OperatorContext const& ctx, Transfer t) {
    if (reads_from_carrier(t)) {
      return ctx.source().carrier_ptr();
    }
    return uses_left_operator(t) ? ctx.left().domain() : ctx.right().domain();
  }

  std::vector<Side> transfer_sides(Transfer t) {
    return {Side::both, uses_left_operator(t) ? Side::right : Side::left};
  }

  Verdict check_transfer(OperatorContext const& ctx,
                         Transfer               t,
                         Side                   side,
                         CrispSubset const&     input) {
    if (is_fuzzy(t)) {
      throw KindMismatch("crisp input given to a fuzzy map");
    }
    require_side(t, side);
    ctx.require_unities();
    require_domain(input.universe(), transfer_source(ctx, t), "the map's source");
    auto const& from = from_structure(ctx, t);
    if (!is_crisp_ideal(from, input, side)) {
      return Verdict::vacuous_case();
    }
    auto const& g      = ctx.source();
    auto const  output = [&] {
      switch (t) {
        case Transfer::plus_crisp:
          return plus_crisp(ctx.left(), input);
        case Transfer::plus_prime_crisp:
          return plus_prime_crisp(g, ctx.left(), input);
        case Transfer::star_crisp:
          return star_crisp(ctx.right(), input);
        default:
          return star_prime_crisp(g, ctx.right(), input);
      }
    }();
    auto const& to = to_structure(ctx, t);
    if (is_crisp_ideal(to, output, side)) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          std::string(to_string(t)) + " of " + std::string(to_string(side))
                              + " ideal " + input.to_string() + " is "
                              + output.to_string() + ", not a "
                              + std::string(to_string(side)) + " ideal");
  }

  Verdict check_transfer(OperatorContext const& ctx,
                         Transfer               t,
                         Side                   side,
                         QFuzzySubset const&    input) {
    if (!is_fuzzy(t)) {
      throw KindMismatch("fuzzy input given to a crisp map");
    }
    require_side(t, side);
    ctx.require_unities();
    require_domain(input.domain(), transfer_source(ctx, t), "the map's source");
    auto const& from = from_structure(ctx, t);
    if (!is_fuzzy_ideal(from, input, side)) {
      return Verdict::vacuous_case();
    }
    auto const& g      = ctx.source();
    auto const  output = [&] {
      switch (t) {
        case Transfer::star_fuzzy:
          return star_fuzzy(ctx.right(), input);
        case Transfer::star_prime_fuzzy:
          return star_prime_fuzzy(g, ctx.right(), input);
        case Transfer::plus_fuzzy:
          return plus_fuzzy(ctx.left(), input);
        default:
          return plus_prime_fuzzy(g, ctx.left(), input);
      }
    }();
    auto const& to = to_structure(ctx, t);
    if (!output.is_nonempty()) {
      return Verdict::holds(false,
                            std::string(to_string(t)) + " of " + input.to_string()
                                + " is empty");
    }
    auto check = is_q_fuzzy_ideal(to, output, side);
    if (check.holds) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          std::string(to_string(t)) + " of " + input.to_string()
                              + " is " + output.to_string() + "; "
                              + describe(to, output, *check.violation));
  }

  Tally check_bijection(OperatorContext const&    ctx,
                        OperatorKind              kind,
                        QSet const&               q,
                        std::vector<Grade> const& grid,
                        std::uint64_t             bound) {
    ctx.require_unities();
    auto const& g  = ctx.source();
    auto const& os = ctx.get(kind);
    auto const  to_operator = [&](QFuzzySubset const& sigma) {
      return kind == OperatorKind::left ? plus_prime_fuzzy(g, os, sigma)
                                        : star_prime_fuzzy(g, os, sigma);
    };
    auto const to_carrier = [&](QFuzzySubset const& mu) {
      return kind == OperatorKind::left ? plus_fuzzy(os, mu) : star_fuzzy(os, mu);
    };
    char const* const fwd = kind == OperatorKind::left ? "⁺'" : "*'";
    char const* const bwd = kind == OperatorKind::left ? "⁺" : "*";

    auto const carrier_subsets
        = enumerate_q_fuzzy_subsets(g.carrier_ptr(), q, grid, bound).collect();
    auto const operator_subsets
        = enumerate_q_fuzzy_subsets(os.domain(), q, grid, bound).collect();

    Tally tally;
    for (Side side : {Side::both, kind == OperatorKind::left ? Side::right : Side::left}) {
      auto const tag = std::string("[") + std::string(to_string(side)) + "] ";

      std::vector<QFuzzySubset const*> s_ideals;
      for (auto const& sigma : carrier_subsets) {
        if (is_fuzzy_ideal(g, sigma, side)) {
          s_ideals.push_back(&sigma);
        }
      }
      std::vector<QFuzzySubset const*> o_ideals;
      for (auto const& mu : operator_subsets) {
        if (is_fuzzy_ideal(os.semigroup(), mu, side)) {
          o_ideals.push_back(&mu);
        }
      }

      std::vector<QFuzzySubset> s_images;
      s_images.reserve(s_ideals.size());
      for (auto const* sigma : s_ideals) {
        auto img  = to_operator(*sigma);
        auto back = to_carrier(img);
        if (!is_fuzzy_ideal(os.semigroup(), img, side)) {
          tally.record_failure(tag + "σ=" + sigma->to_string() + ": σ" + fwd + "="
                               + img.to_string() + " is not a fuzzy ideal");
        } else if (!(back == *sigma)) {
          tally.record_failure(tag + "σ=" + sigma->to_string() + ": (σ" + fwd + ")"
                               + bwd + "=" + back.to_string());
        } else {
          tally.record_success();
        }
        s_images.push_back(std::move(img));
      }

      std::vector<QFuzzySubset> o_images;
      o_images.reserve(o_ideals.size());
      for (auto const* mu : o_ideals) {
        auto img  = to_carrier(*mu);
        auto back = to_operator(img);
        if (!is_fuzzy_ideal(g, img, side)) {
          tally.record_failure(tag + "μ=" + mu->to_string() + ": μ" + bwd + "="
                               + img.to_string() + " is not a fuzzy ideal");
        } else if (!(back == *mu)) {
          tally.record_failure(tag + "μ=" + mu->to_string() + ": (μ" + bwd + ")"
                               + fwd + "=" + back.to_string());
        } else {
          tally.record_success();
        }
        o_images.push_back(std::move(img));
      }

      for (std::size_t i = 0; i < s_ideals.size(); ++i) {
        for (std::size_t j = 0; j < s_ideals.size(); ++j) {
          if (!includes(*s_ideals[i], *s_ideals[j])) {
            continue;
          }
          if (includes(s_images[i], s_images[j])) {
            tally.record_success();
          } else {
            tally.record_failure(tag + "σ1=" + s_ideals[i]->to_string() + " ⊆ σ2="
                                 + s_ideals[j]->to_string() + " but images are not nested");
          }
        }
      }
      for (std::size_t i = 0; i < o_ideals.size(); ++i) {
        for (std::size_t j = 0; j < o_ideals.size(); ++j) {
          if (!includes(*o_ideals[i], *o_ideals[j])) {
            continue;
          }
          if (includes(o_images[i], o_images[j])) {
            tally.record_success();
          } else {
            tally.record_failure(tag + "μ1=" + o_ideals[i]->to_string() + " ⊆ μ2="
                                 + o_ideals[j]->to_string() + " but images are not nested");
          }
        }
      }
    }
    return tally;
  }

}  // namespace gammaq
