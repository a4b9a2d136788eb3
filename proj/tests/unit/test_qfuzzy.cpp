#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/qfuzzy.hpp"

using namespace gammaq;
using namespace fixtures;

TEST_CASE("grades parse exactly and render as n/d") {
  CHECK(Grade::parse("0.8") == Grade(4, 5));
  CHECK(Grade::parse("0.7").to_string() == "7/10");
  CHECK(Grade::parse("3/4") == Grade(3, 4));
  CHECK(Grade::parse("6/8").to_string() == "3/4");
  CHECK(Grade::parse("1").to_string() == "1/1");
  CHECK(Grade::parse("0").to_string() == "0/1");
  CHECK(Grade::parse(".5") == Grade(1, 2));
  CHECK_THROWS_AS(Grade::parse("5/4"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse("1.01"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse("-1/2"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse("abc"), ParseError);
  CHECK_THROWS_AS(Grade::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Grade::parse(""), ParseError);
  CHECK(Grade(1, 3) < Grade(1, 2));
  CHECK(Grade::zero() < Grade::one());
}

TEST_CASE("grids") {
  auto g = default_grid();
  REQUIRE(g.size() == 5);
  CHECK(g[1] == Grade(1, 4));
  CHECK(g[4] == Grade::one());
  CHECK(parse_grid("3") == std::vector<Grade>{Grade(0, 1), Grade(1, 2), Grade(1, 1)});
  CHECK(parse_grid("0,1/3,1") == std::vector<Grade>{Grade(0, 1), Grade(1, 3), Grade(1, 1)});
  CHECK_THROWS(parse_grid("1"));
}

TEST_CASE("Q sets") {
  CHECK_THROWS_AS(QSet(std::vector<std::string>{}), InvalidSymbol);
  auto q = QSet::generated(2);
  CHECK(q.names().names() == std::vector<std::string>{"q1", "q2"});
}

TEST_CASE("level sets and images of the worked example") {
  auto g  = lz3();
  auto mu = example_mu(g);
  CHECK(level_set(mu, Grade(7, 10)).to_string() == "{a,b}");
  CHECK(level_set(mu, Grade(4, 5)).to_string() == "{a}");
  CHECK(level_set(mu, Grade(9, 10)).empty());
  CHECK(level_set(mu, Grade::zero()).is_full());
  auto im = image(mu);
  CHECK(im == std::vector<Grade>{Grade(3, 5), Grade(7, 10), Grade(4, 5)});

  SUBCASE("level sets take the minimum over Q") {
    QFuzzySubset two(g.carrier_ptr(), QSet::generated(2));
    two.set(0, 0, Grade(1, 1));
    two.set(0, 1, Grade(1, 4));
    two.set(1, 0, Grade(1, 2));
    two.set(1, 1, Grade(1, 2));
    CHECK(level_set(two, Grade(1, 2)).to_string() == "{b}");
  }
  SUBCASE("level sets are antitone in t and match the oracle") {
    for (auto const& t : uniform_grid(11)) {
      auto lv = level_set(mu, t);
      auto o  = oracle::level(mu, t);
      for (std::size_t x = 0; x < 3; ++x) {
        CHECK(lv.contains(x) == o[x]);
      }
      for (auto const& s : uniform_grid(11)) {
        if (t < s) {
          CHECK(level_set(mu, s).is_subset_of(lv));
        }
      }
    }
  }
}

TEST_CASE("Q-fuzzy ideal predicate") {
  auto g  = lz3();
  auto mu = example_mu(g);
  CHECK(is_q_fuzzy_ideal(g, mu, Side::right).holds);
  auto left = is_q_fuzzy_ideal(g, mu, Side::left);
  CHECK_FALSE(left.holds);
  REQUIRE(left.violation.has_value());
  auto const& v = *left.violation;
  // First violation in (x, γ, y, q) order; (c, γ, a, p) is another one.
  CHECK(v.x == 1);
  CHECK(v.gamma == 0);
  CHECK(v.y == 0);
  CHECK(mu(g.product(v.x, v.gamma, v.y), v.q) < mu(v.y, v.q));
  CHECK(mu(g.product(2, 0, 0), 0) < mu(0, 0));
  CHECK_FALSE(is_q_fuzzy_ideal(g, mu, Side::both).holds);

  CHECK_THROWS_AS(is_q_fuzzy_ideal(g, QFuzzySubset(g.carrier_ptr(), single_q()), Side::left),
                  EmptyFuzzySubset);
  CHECK_THROWS_AS(
      is_q_fuzzy_ideal(g, QFuzzySubset(make_symbols({"a"}), single_q(), Grade::one()), Side::left),
      DomainMismatch);

  SUBCASE("constants are ideals of every kind") {
    for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
      auto c = QFuzzySubset::constant(s.carrier_ptr(), single_q(), Grade(1, 2));
      for (Side side : {Side::left, Side::right, Side::both}) {
        CHECK(is_q_fuzzy_ideal(s, c, side).holds);
      }
    }
  }
  SUBCASE("matches the oracle over every grid subset") {
    for (auto const& s : {lz3(), const2(), mod4mul()}) {
      for (auto const& m : enumerate_q_fuzzy_subsets(s, single_q(), default_grid())) {
        if (!m.is_nonempty()) {
          continue;
        }
        for (Side side : {Side::left, Side::right, Side::both}) {
          auto check = is_q_fuzzy_ideal(s, m, side);
          REQUIRE(check.holds == oracle::is_fuzzy_ideal(s, m, side));
          if (!check.holds) {
            auto const& w = *check.violation;
            auto const  p = m(s.product(w.x, w.gamma, w.y), w.q);
            CHECK(p < (w.side == Side::left ? m(w.y, w.q) : m(w.x, w.q)));
          }
        }
      }
    }
  }
}

TEST_CASE("characteristic and two-valued subsets") {
  auto g = lz3();
  auto i = CrispSubset::from_mask(g.carrier_ptr(), 0b011);
  auto c = characteristic(g, i, single_q());
  CHECK(c.to_string() == "a:1/1 b:1/1 c:0/1");
  auto t = two_valued(g, i, Grade(1, 4), Grade(3, 4), single_q());
  CHECK(t.to_string() == "a:3/4 b:3/4 c:1/4");
  CHECK(image(t) == std::vector<Grade>{Grade(1, 4), Grade(3, 4)});
  CHECK_THROWS_AS(two_valued(g, i, Grade(3, 4), Grade(1, 4), single_q()), GradeOrderViolation);
  CHECK_THROWS_AS(two_valued(g, i, Grade::zero(), Grade::zero(), single_q()),
                  GradeOrderViolation);

  SUBCASE("two-valued subsets on ideals are fuzzy ideals") {
    for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
      auto grid = default_grid();
      for (auto const& ideal : enumerate_subsets(s.carrier_ptr(), true)) {
        for (Side side : {Side::left, Side::right, Side::both}) {
          if (!is_ideal(s, ideal, side)) {
            continue;
          }
          for (auto const& a : grid) {
            for (auto const& b : grid) {
              if (a <= b && !b.is_zero()) {
                CHECK(is_q_fuzzy_ideal(s, two_valued(s, ideal, a, b, single_q()), side).holds);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("intersection and inclusion") {
  auto g   = lz3();
  auto mu  = example_mu(g);
  auto one = QFuzzySubset::constant(g.carrier_ptr(), single_q(), Grade::one());
  CHECK(intersection(mu, one) == mu);
  CHECK(includes(mu, one));
  CHECK_FALSE(includes(one, mu));
  auto half = QFuzzySubset::constant(g.carrier_ptr(), single_q(), Grade(1, 2));
  auto meet = intersection(mu, half);
  CHECK(meet == half);
  CHECK_THROWS_AS(intersection(mu, QFuzzySubset(g.carrier_ptr(), QSet::generated(2))),
                  DomainMismatch);
}

TEST_CASE("characteristic criterion agrees for every subset and side") {
  for (auto const& g : {lz3(), const2(), mod16(), mod4mul()}) {
    for (auto const& i : enumerate_subsets(g.carrier_ptr(), true)) {
      for (Side side : {Side::left, Side::right, Side::both}) {
        auto v = check_characteristic_criterion(g, i, single_q(), side);
        CHECK(v.agrees());
        CHECK(v.lhs == is_ideal(g, i, side));
      }
    }
  }
}

TEST_CASE("level criterion") {
  auto g = lz3();
  auto v = check_level_criterion(g, example_mu(g), Side::right);
  CHECK(v.lhs);
  CHECK(v.rhs);
  auto w = check_level_criterion(g, example_mu(g), Side::left);
  CHECK_FALSE(w.lhs);
  CHECK_FALSE(w.rhs);
  CHECK(check_level_criterion(g, QFuzzySubset(g.carrier_ptr(), single_q()), Side::left).vacuous);

  SUBCASE("holds with |Q| = 1 on every grid subset, both threshold readings") {
    for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
      for (auto const& m : enumerate_q_fuzzy_subsets(s, single_q(), default_grid())) {
        for (Side side : {Side::left, Side::right, Side::both}) {
          CHECK(check_level_criterion(s, m, side).agrees());
          CHECK(check_level_criterion(s, m, side, LevelThresholds::all_nonempty).agrees());
        }
      }
    }
  }
  SUBCASE("with |Q| = 2 the image reading can fail on a fuzzy ideal") {
    auto          c = const2();
    QFuzzySubset  m(c.carrier_ptr(), QSet::generated(2));
    m.set(0, 0, Grade::zero());
    m.set(0, 1, Grade(1, 2));
    auto image_reading = check_level_criterion(c, m, Side::left);
    CHECK(image_reading.lhs);
    CHECK_FALSE(image_reading.rhs);
    CHECK(check_level_criterion(c, m, Side::left, LevelThresholds::all_nonempty).agrees());
  }
}

TEST_CASE("grid enumeration") {
  auto g     = lz3();
  auto range = enumerate_q_fuzzy_subsets(g, single_q(), default_grid());
  CHECK(range.count() == 125);
  std::set<std::string> seen;
  std::size_t           n = 0;
  for (auto const& m : range) {
    seen.insert(m.to_string());
    ++n;
  }
  CHECK(n == 125);
  CHECK(seen.size() == 125);
  auto all = range.collect();
  CHECK(all.front().to_string() == "a:0/1 b:0/1 c:0/1");
  CHECK(all[1].to_string() == "a:0/1 b:0/1 c:1/4");
  CHECK(all.back().to_string() == "a:1/1 b:1/1 c:1/1");
  CHECK(enumerate_q_fuzzy_subsets(const2(), single_q(), default_grid()).count() == 25);
  CHECK_THROWS_AS(enumerate_q_fuzzy_subsets(g, QSet::generated(4), default_grid(), 1000),
                  BoundExceeded);
  CHECK(assignment_count(5, 3) == 125u);
  CHECK_FALSE(assignment_count(10, 100).has_value());
}
