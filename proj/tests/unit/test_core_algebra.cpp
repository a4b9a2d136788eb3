#include <doctest.h>

#include "fixtures.hpp"
#include "gammaq/crisp_subset.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/symbol_table.hpp"

using namespace gammaq;
using namespace fixtures;

namespace {

  CrispSubset subset(GammaSemigroup const& g, std::vector<std::string> const& labels) {
    return CrispSubset::from_labels(g.carrier_ptr(), labels);
  }

  std::vector<bool> mask_of(CrispSubset const& a) {
    std::vector<bool> out(a.universe_size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = a.contains(i);
    }
    return out;
  }

}  // namespace

TEST_CASE("symbol tables reject empty, duplicate and blank labels") {
  CHECK_THROWS_AS(SymbolTable({"a", "a"}), InvalidSymbol);
  CHECK_THROWS_AS(SymbolTable({""}), InvalidSymbol);
  CHECK_THROWS_AS(SymbolTable({"a b"}), InvalidSymbol);
  SymbolTable t({"x", "y", "z"});
  CHECK(t.size() == 3);
  CHECK(t.index("y") == 1);
  CHECK_FALSE(t.find("w").has_value());
  CHECK_THROWS_AS(t.index("w"), UnknownSymbol);
  CHECK(t.names() == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("crisp subsets") {
  auto u = make_symbols({"a", "b", "c"});
  auto a = CrispSubset::from_mask(u, 0b011);
  auto b = CrispSubset::from_mask(u, 0b110);
  CHECK(a.to_string() == "{a,b}");
  CHECK(a.intersection(b).to_string() == "{b}");
  CHECK(a.union_with(b).is_full());
  CHECK(CrispSubset(u).empty());
  CHECK(a.intersection(b).is_subset_of(a));

  auto other = make_symbols({"x"});
  CHECK_THROWS_AS(a.intersection(CrispSubset(other)), DomainMismatch);

  SUBCASE("enumeration covers every subset once, in mask order") {
    auto range = enumerate_subsets(u, true);
    CHECK(range.count() == 7);
    std::size_t n = 0;
    for (auto const& s : range) {
      CHECK_FALSE(s.empty());
      ++n;
    }
    CHECK(n == 7);
    CHECK(enumerate_subsets(u, false).count() == 8);
    CHECK_THROWS_AS(enumerate_subsets(make_symbols({"1", "2", "3", "4", "5", "6", "7", "8", "9",
                                                    "10", "11", "12", "13", "14", "15", "16",
                                                    "17"}),
                                      true),
                    BoundExceeded);
  }
}

TEST_CASE("building validates totality and associativity") {
  auto s = make_symbols({"a", "b"});
  auto g = make_symbols({"g"});

  SUBCASE("a missing cell") {
    OperationTable op{0, 0, 0, std::nullopt};
    CHECK_THROWS_AS(GammaSemigroup::build(s, g, op), MissingEntry);
  }
  SUBCASE("a cell outside S") {
    OperationTable op{0, 0, 0, 2};
    CHECK_THROWS_AS(GammaSemigroup::build(s, g, op), MissingEntry);
  }
  SUBCASE("associativity") {
    // x g y = not (x xor y) is associative; x g y = not x is not.
    OperationTable xnor{1, 0, 0, 1};
    CHECK_NOTHROW(GammaSemigroup::build(s, g, xnor));
    OperationTable negate{1, 1, 0, 0};
    CHECK_THROWS_AS(GammaSemigroup::build(s, g, negate), AssociativityViolation);
  }
  SUBCASE("both-sided laws are checked too") {
    // MOD16 with a broken Γ×S×Γ table.
    auto good = mod16();
    std::vector<std::optional<std::size_t>> s_op(good.s_table().begin(), good.s_table().end());
    std::vector<std::optional<std::size_t>> g_op(good.g_table().begin(), good.g_table().end());
    CHECK_NOTHROW(GammaSemigroup::build(good.carrier_ptr(), good.gamma_ptr(), s_op, g_op));
    g_op[0] = (*g_op[0] + 1) % 4;
    CHECK_THROWS_AS(GammaSemigroup::build(good.carrier_ptr(), good.gamma_ptr(), s_op, g_op),
                    AssociativityViolation);
  }
}

TEST_CASE("the bundled test structures satisfy every associative law") {
  // Brute force over every triple, independent of the builder's own check.
  for (auto const& g : {lz3(), const2(), mod16(), mod4mul()}) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t b = 0; b < g.gamma_size(); ++b) {
        for (std::size_t y = 0; y < g.size(); ++y) {
          for (std::size_t c = 0; c < g.gamma_size(); ++c) {
            for (std::size_t z = 0; z < g.size(); ++z) {
              REQUIRE(g.product(g.product(x, b, y), c, z) == g.product(x, b, g.product(y, c, z)));
            }
          }
        }
      }
    }
  }
  auto g = mod16();
  CHECK(g.both_sided());
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t y = 0; y < 4; ++y) {
          for (std::size_t c = 0; c < 4; ++c) {
            // α(aβb)γ = (αaβ)bγ
            REQUIRE(g.gamma_product(a, g.product(x, b, y), c)
                    == g.gamma_product(g.gamma_product(a, x, b), y, c));
            // (aαb)βc = a(αbβ)c
            REQUIRE(g.product(g.product(x, a, y), b, c)
                    == g.product(x, g.gamma_product(a, y, b), c));
          }
        }
      }
    }
  }
  CHECK_FALSE(lz3().both_sided());
  CHECK_THROWS_AS(lz3().gamma_product(0, 0, 0), RequiresBothSided);
}

TEST_CASE("crisp ideals") {
  auto g = lz3();
  CHECK(is_ideal(g, subset(g, {"a"}), Side::right));
  CHECK_FALSE(is_ideal(g, subset(g, {"a"}), Side::left));
  CHECK(is_ideal(g, CrispSubset::full(g.carrier_ptr()), Side::both));
  CHECK_THROWS_AS(is_ideal(g, CrispSubset(g.carrier_ptr()), Side::left), EmptySubset);
  CHECK_THROWS_AS(is_ideal(g, CrispSubset(make_symbols({"a"})), Side::left), DomainMismatch);

  SUBCASE("agrees with the brute-force oracle on every subset and side") {
    for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
      for (auto const& a : enumerate_subsets(s.carrier_ptr(), true)) {
        for (Side side : {Side::left, Side::right, Side::both}) {
          CHECK(is_ideal(s, a, side) == oracle::is_ideal(s, mask_of(a), side));
        }
      }
    }
  }
  SUBCASE("two-sided ideals are exactly the left ideals that are right ideals") {
    auto m = mod4mul();
    for (auto const& a : enumerate_subsets(m.carrier_ptr(), true)) {
      CHECK(is_ideal(m, a, Side::both)
            == (is_ideal(m, a, Side::left) && is_ideal(m, a, Side::right)));
    }
  }
}

TEST_CASE("regularity") {
  auto l = is_regular(lz3());
  CHECK(l.regular);
  CHECK(l.witness == std::vector<std::size_t>{0, 0, 0});

  auto c = is_regular(const2());
  CHECK_FALSE(c.regular);
  REQUIRE(c.failing.has_value());
  CHECK(*c.failing == 1);

  auto g = mod16();
  auto m = is_regular(g);
  CHECK(m.regular);
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(mod16_g[m.witness[x]] == (16 - mod16_s[x]) % 16);
  }

  auto z = is_regular(mod4mul());
  CHECK_FALSE(z.regular);
  CHECK(*z.failing == 2);  // 2β2 = 0 for every β

  for (auto const& s : {lz3(), const2(), mod16(), mod4mul()}) {
    CHECK(is_regular(s).regular == oracle::regular(s));
  }
}

TEST_CASE("crisp products") {
  auto g = lz3();
  CHECK(crisp_product(g, subset(g, {"a", "b"}), subset(g, {"c"})).to_string() == "{a,b}");
  CHECK(crisp_product(g, CrispSubset(g.carrier_ptr()), subset(g, {"c"})).empty());
  auto c = const2();
  auto s = CrispSubset::full(c.carrier_ptr());
  CHECK(crisp_product(c, s, s).to_string() == "{a}");
}

TEST_CASE("factorization index lists exactly the preimages") {
  for (auto const& g : {lz3(), const2(), mod16(), mod4mul()}) {
    std::size_t total = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (auto const& f : g.factorizations(x)) {
        CHECK(g.product(f.left, f.gamma, f.right) == x);
      }
      total += g.factorizations(x).size();
    }
    CHECK(total == g.size() * g.gamma_size() * g.size());
  }
  CHECK(const2().factorizations(1).empty());
}
