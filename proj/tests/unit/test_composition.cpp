#include <doctest.h>

#include "fixtures.hpp"
#include "gammaq/composition.hpp"
#include "gammaq/errors.hpp"

using namespace gammaq;
using namespace fixtures;

namespace {

  std::vector<QFuzzySubset> grid_subsets(GammaSemigroup const& g) {
    return enumerate_q_fuzzy_subsets(g, single_q(), default_grid()).collect();
  }

  Grade max_grade(QFuzzySubset const& mu) {
    Grade best = Grade::zero();
    for (auto const& v : mu.grades()) {
      best = std::max(best, v);
    }
    return best;
  }

}  // namespace

TEST_CASE("composition of the worked example with itself") {
  auto g  = lz3();
  auto mu = example_mu(g);
  auto c  = compose(g, mu, mu);
  CHECK(c.to_string() == "a:4/5 b:7/10 c:3/5");
  CHECK(c == oracle::compose(g, mu, mu));
}

TEST_CASE("composition is zero where no factorization exists") {
  auto g   = const2();
  auto one = full_characteristic(g, single_q());
  auto c   = compose(g, one, one);
  CHECK(c(0, 0) == Grade::one());
  CHECK(c(1, 0) == Grade::zero());
  auto zero = QFuzzySubset(g.carrier_ptr(), single_q());
  CHECK_FALSE(compose(g, one, zero).is_nonempty());
  CHECK_THROWS_AS(compose(g, one, QFuzzySubset(g.carrier_ptr(), QSet::generated(2))),
                  DomainMismatch);
}

TEST_CASE("composition properties over grid pairs") {
  for (auto const& g : {lz3(), const2(), mod4mul()}) {
    auto const subsets = grid_subsets(g);
    for (std::size_t i = 0; i < subsets.size(); i += 7) {
      for (std::size_t j = 0; j < subsets.size(); j += 5) {
        auto const& a = subsets[i];
        auto const& b = subsets[j];
        auto const  c = compose(g, a, b);
        REQUIRE(c == oracle::compose(g, a, b));
        CHECK(!(std::min(max_grade(a), max_grade(b)) < max_grade(c)));
      }
    }
  }
  SUBCASE("monotone in each argument") {
    auto       g       = lz3();
    auto const subsets = grid_subsets(g);
    auto const mu      = example_mu(g);
    for (std::size_t i = 0; i < subsets.size(); i += 3) {
      for (std::size_t j = 0; j < subsets.size(); j += 4) {
        if (includes(subsets[i], subsets[j])) {
          CHECK(includes(compose(g, subsets[i], mu), compose(g, subsets[j], mu)));
          CHECK(includes(compose(g, mu, subsets[i]), compose(g, mu, subsets[j])));
        }
      }
    }
  }
}

TEST_CASE("full characteristic") {
  auto g = mod16();
  auto x = full_characteristic(g, single_q());
  CHECK(level_set(x, Grade::one()).is_full());
  auto mu = QFuzzySubset::constant(g.carrier_ptr(), single_q(), Grade(1, 4));
  CHECK(intersection(x, mu) == mu);
}

TEST_CASE("ideals are exactly the subsets absorbing χ") {
  auto g  = lz3();
  auto mu = example_mu(g);
  auto r  = check_chi_inclusion(g, mu, Side::right);
  CHECK(r.lhs);
  CHECK(r.rhs);
  auto l = check_chi_inclusion(g, mu, Side::left);
  CHECK_FALSE(l.lhs);
  CHECK_FALSE(l.rhs);
  auto b = check_chi_inclusion(g, mu, Side::both);
  CHECK_FALSE(b.lhs);
  CHECK_FALSE(b.rhs);
  auto half = QFuzzySubset::constant(g.carrier_ptr(), single_q(), Grade(1, 2));
  CHECK(check_chi_inclusion(g, half, Side::both).lhs);
  CHECK(check_chi_inclusion(g, half, Side::both).rhs);

  for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
    for (auto const& m : grid_subsets(s)) {
      for (Side side : {Side::left, Side::right, Side::both}) {
        CHECK(check_chi_inclusion(s, m, side).agrees());
      }
    }
  }
}

TEST_CASE("product of a right and a left ideal lies below their meet") {
  auto g    = lz3();
  auto mu   = example_mu(g);
  auto half = QFuzzySubset::constant(g.carrier_ptr(), single_q(), Grade(1, 2));
  CHECK(check_product_below_meet(g, mu, half).rhs);
  auto x = full_characteristic(g, single_q());
  CHECK(check_product_below_meet(g, x, x).rhs);
  CHECK_THROWS_AS(check_product_below_meet(g, half, mu), PreconditionViolated);

  auto c       = const2();
  auto subsets = grid_subsets(c);
  for (auto const& a : subsets) {
    if (!a.is_nonempty() || !is_q_fuzzy_ideal(c, a, Side::right).holds) {
      continue;
    }
    for (auto const& b : subsets) {
      if (b.is_nonempty() && is_q_fuzzy_ideal(c, b, Side::left).holds) {
        CHECK(check_product_below_meet(c, a, b).rhs);
        CHECK(check_ideal_product_chain(c, a, b).rhs);
      }
    }
  }
}

TEST_CASE("on regular structures the meet lies below the product") {
  auto g  = lz3();
  auto mu = example_mu(g);
  CHECK(check_meet_below_product(g, mu, mu).rhs);
  auto x = full_characteristic(g, single_q());
  CHECK(compose(g, x, x) == x);
  auto c = const2();
  auto y = full_characteristic(c, single_q());
  CHECK_THROWS_AS(check_meet_below_product(c, y, y), PreconditionViolated);
}

TEST_CASE("regularity criterion") {
  auto l = check_regularity_criterion(lz3(), single_q(), default_grid());
  CHECK(l.verdict.lhs);
  CHECK(l.verdict.rhs);
  auto m = check_regularity_criterion(mod16(), single_q(), default_grid());
  CHECK(m.verdict.lhs);
  CHECK(m.verdict.rhs);

  auto c = check_regularity_criterion(const2(), single_q(), default_grid());
  CHECK_FALSE(c.verdict.lhs);
  CHECK_FALSE(c.verdict.rhs);
  CHECK(c.verdict.agrees());
  CHECK(c.verdict.witness.find("(b,") != std::string::npos);

  // The witness pair χ_S, χ_S fails at b: (χ∘χ)(b) = 0 < 1.
  auto cs  = const2();
  auto chi = full_characteristic(cs, single_q());
  CHECK(compose(cs, chi, chi)(1, 0) == Grade::zero());
  CHECK(intersection(chi, chi)(1, 0) == Grade::one());
}

TEST_CASE("crisp regularity criterion") {
  for (auto const& g : {lz3(), const2(), mod16(), mod4mul()}) {
    auto v = check_crisp_regularity_criterion(g);
    CHECK(v.agrees());
    CHECK(v.lhs == oracle::regular(g));
  }
  auto c = check_crisp_regularity_criterion(const2());
  CHECK_FALSE(c.rhs);
}
