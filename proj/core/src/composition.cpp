#include "gammaq/composition.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

  namespace {

    void require_over_carrier(GammaSemigroup const& g, QFuzzySubset const& mu) {
      if (!same_symbols(mu.domain(), g.carrier_ptr())) {
        throw DomainMismatch(
            "Q-fuzzy subset is not over the carrier of the Γ-semigroup");
      }
    }

    // First (x, q) where mu1 > mu2, rendered.
    std::string first_excess(QFuzzySubset const& mu1,
                             QFuzzySubset const& mu2,
                             char const*         lhs_name,
                             char const*         rhs_name) {
      for (std::size_t x = 0; x < mu1.domain_size(); ++x) {
        for (std::size_t q = 0; q < mu1.q_size(); ++q) {
          if (mu1(x, q) > mu2(x, q)) {
            auto const& xn = mu1.domain()->name(x);
            auto const& qn = mu1.qset().names().name(q);
            return std::string(lhs_name) + "(" + xn + "," + qn
                   + ")=" + mu1(x, q).to_string() + " > " + rhs_name + "("
                   + xn + "," + qn + ")=" + mu2(x, q).to_string();
          }
        }
      }
      return {};
    }

    bool is_fuzzy_ideal(GammaSemigroup const& g,
                        QFuzzySubset const&   mu,
                        Side                  side) {
      return mu.is_nonempty() && is_q_fuzzy_ideal(g, mu, side).holds;
    }

  }  // namespace

  QFuzzySubset compose(GammaSemigroup const& g,
                       QFuzzySubset const&   mu1,
                       QFuzzySubset const&   mu2) {
    mu1.require_compatible(mu2);
    require_over_carrier(g, mu1);
    QFuzzySubset out(mu1.domain(), mu1.qset());
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto fs = g.factorizations(x);
      for (std::size_t q = 0; q < mu1.q_size(); ++q) {
        Grade best = Grade::zero();
        for (auto const& f : fs) {
          best = std::max(best, std::min(mu1(f.left, q), mu2(f.right, q)));
        }
        out.set(x, q, best);
      }
    }
    return out;
  }

  QFuzzySubset full_characteristic(GammaSemigroup const& g, QSet const& q) {
    return QFuzzySubset::constant(g.carrier_ptr(), q, Grade::one());
  }

  Verdict check_chi_inclusion(GammaSemigroup const& g,
                              QFuzzySubset const&   mu,
                              Side                  side) {
    require_over_carrier(g, mu);
    if (!mu.is_nonempty()) {
      return Verdict::vacuous_case("empty Q-fuzzy subset");
    }
    auto const chi   = full_characteristic(g, mu.qset());
    auto       ideal = is_q_fuzzy_ideal(g, mu, side);

    Verdict     v;
    std::string rhs_witness;
    v.lhs = ideal.holds;
    v.rhs = true;
    if (side != Side::right) {
      auto left = compose(g, chi, mu);
      if (!includes(left, mu)) {
        v.rhs       = false;
        rhs_witness = first_excess(left, mu, "(χ∘μ)", "μ");
      }
    }
    if (v.rhs && side != Side::left) {
      auto right = compose(g, mu, chi);
      if (!includes(right, mu)) {
        v.rhs       = false;
        rhs_witness = first_excess(right, mu, "(μ∘χ)", "μ");
      }
    }
    if (!v.agrees()) {
      v.witness = "μ=" + mu.to_string() + " side=" + std::string(to_string(side))
                  + " fuzzy-ideal=" + (v.lhs ? "true" : "false")
                  + " χ-inclusion=" + (v.rhs ? "true" : "false");
      if (ideal.violation) {
        v.witness += "; " + describe(g, mu, *ideal.violation);
      }
      if (!rhs_witness.empty()) {
        v.witness += "; " + rhs_witness;
      }
    }
    return v;
  }

  Verdict check_product_below_meet(GammaSemigroup const& g,
                                   QFuzzySubset const&   mu1,
                                   QFuzzySubset const&   mu2) {
    mu1.require_compatible(mu2);
    if (!is_fuzzy_ideal(g, mu1, Side::right)) {
      throw PreconditionViolated("first argument is not a Q-fuzzy right ideal");
    }
    if (!is_fuzzy_ideal(g, mu2, Side::left)) {
      throw PreconditionViolated("second argument is not a Q-fuzzy left ideal");
    }
    auto product = compose(g, mu1, mu2);
    auto meet    = intersection(mu1, mu2);
    if (includes(product, meet)) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          "μ1=" + mu1.to_string() + " μ2=" + mu2.to_string()
                              + "; " + first_excess(product, meet, "(μ1∘μ2)", "(μ1∩μ2)"));
  }

  Verdict check_ideal_product_chain(GammaSemigroup const& g,
                                    QFuzzySubset const&   mu1,
                                    QFuzzySubset const&   mu2) {
    mu1.require_compatible(mu2);
    if (!is_fuzzy_ideal(g, mu1, Side::both) || !is_fuzzy_ideal(g, mu2, Side::both)) {
      throw PreconditionViolated("arguments must be Q-fuzzy ideals");
    }
    auto product = compose(g, mu1, mu2);
    auto meet    = intersection(mu1, mu2);
    auto context = "μ1=" + mu1.to_string() + " μ2=" + mu2.to_string() + "; ";
    if (!includes(product, meet)) {
      return Verdict::holds(
          false, context + first_excess(product, meet, "(μ1∘μ2)", "(μ1∩μ2)"));
    }
    if (!includes(meet, mu1)) {
      return Verdict::holds(false, context + first_excess(meet, mu1, "(μ1∩μ2)", "μ1"));
    }
    if (!includes(meet, mu2)) {
      return Verdict::holds(false, context + first_excess(meet, mu2, "(μ1∩μ2)", "μ2"));
    }
    return Verdict::holds(true);
  }

  Verdict check_meet_below_product(GammaSemigroup const& g,
                                   QFuzzySubset const&   mu1,
                                   QFuzzySubset const&   mu2) {
    mu1.require_compatible(mu2);
    require_over_carrier(g, mu1);
    if (!is_regular(g).regular) {
      throw PreconditionViolated("the Γ-semigroup is not regular");
    }
    auto product = compose(g, mu1, mu2);
    auto meet    = intersection(mu1, mu2);
    if (includes(meet, product)) {
      return Verdict::holds(true);
    }
    return Verdict::holds(false,
                          "μ1=" + mu1.to_string() + " μ2=" + mu2.to_string()
                              + "; " + first_excess(meet, product, "(μ1∩μ2)", "(μ1∘μ2)"));
  }

  RegularityCriterion
  check_regularity_criterion(GammaSemigroup const&     g,
                             QSet const&               q,
                             std::vector<Grade> const& grid,
                             std::uint64_t             bound) {
    RegularityCriterion result;
    auto const          regularity = is_regular(g);
    result.verdict.lhs             = regularity.regular;

    std::vector<QFuzzySubset> rights;
    std::vector<QFuzzySubset> lefts;
    for (auto const& ideal : enumerate_subsets(g.carrier_ptr(), true)) {
      if (is_ideal(g, ideal, Side::right)) {
        rights.push_back(characteristic(g, ideal, q));
      }
      if (is_ideal(g, ideal, Side::left)) {
        lefts.push_back(characteristic(g, ideal, q));
      }
    }
    for (auto const& mu : enumerate_q_fuzzy_subsets(g, q, grid, bound)) {
      if (!mu.is_nonempty()) {
        continue;
      }
      if (is_q_fuzzy_ideal(g, mu, Side::right).holds) {
        rights.push_back(mu);
      }
      if (is_q_fuzzy_ideal(g, mu, Side::left).holds) {
        lefts.push_back(mu);
      }
    }
    result.right_ideals = rights.size();
    result.left_ideals  = lefts.size();

    result.verdict.rhs = true;
    std::string rhs_witness;
    for (auto const& mu1 : rights) {
      for (auto const& mu2 : lefts) {
        ++result.pairs;
        auto product = compose(g, mu1, mu2);
        auto meet    = intersection(mu1, mu2);
        if (!(product == meet)) {
          result.verdict.rhs = false;
          auto diff          = first_excess(meet, product, "(μ1∩μ2)", "(μ1∘μ2)");
          if (diff.empty()) {
            diff = first_excess(product, meet, "(μ1∘μ2)", "(μ1∩μ2)");
          }
          rhs_witness = "μ1=" + mu1.to_string() + " μ2=" + mu2.to_string()
                        + "; " + diff;
          break;
        }
      }
      if (!result.verdict.rhs) {
        break;
      }
    }

    std::string summary = std::string("regular=")
                          + (result.verdict.lhs ? "true" : "false")
                          + " product-equals-meet="
                          + (result.verdict.rhs ? "true" : "false");
    if (regularity.failing) {
      summary += "; " + g.carrier().name(*regularity.failing)
                 + " has no β with xβx = x";
    }
    if (!rhs_witness.empty()) {
      summary += "; " + rhs_witness;
    }
    result.verdict.witness = summary;
    return result;
  }

  Verdict check_crisp_regularity_criterion(GammaSemigroup const& g) {
    Verdict v;
    auto    regularity = is_regular(g);
    v.lhs              = regularity.regular;
    v.rhs              = true;

    std::vector<CrispSubset> rights;
    std::vector<CrispSubset> lefts;
    for (auto const& a : enumerate_subsets(g.carrier_ptr(), true)) {
      if (is_ideal(g, a, Side::right)) {
        rights.push_back(a);
      }
      if (is_ideal(g, a, Side::left)) {
        lefts.push_back(a);
      }
    }
    std::string rhs_witness;
    for (auto const& r : rights) {
      for (auto const& l : lefts) {
        auto product = crisp_product(g, r, l);
        auto meet    = r.intersection(l);
        if (!(product == meet)) {
          v.rhs       = false;
          rhs_witness = "R=" + r.to_string() + " L=" + l.to_string()
                        + ": RΓL=" + product.to_string()
                        + " but R∩L=" + meet.to_string();
          break;
        }
      }
      if (!v.rhs) {
        break;
      }
    }
    v.witness = std::string("regular=") + (v.lhs ? "true" : "false")
                + " product-equals-meet=" + (v.rhs ? "true" : "false");
    if (!rhs_witness.empty()) {
      v.witness += "; " + rhs_witness;
    }
    return v;
  }

}  // namespace gammaq
