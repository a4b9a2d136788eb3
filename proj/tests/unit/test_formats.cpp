#include <doctest.h>

#include "fixtures.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/formats.hpp"

using namespace gammaq;
using namespace fixtures;

namespace {

  int parse_error_line(std::string const& text) {
    try {
      parse_gsem(text);
    } catch (ParseError const& e) {
      return static_cast<int>(e.line());
    }
    return -1;
  }

}  // namespace

TEST_CASE("bundled GSEM files match the structures built from formulas") {
  CHECK(parse_gsem(read_file(data_path("lz3.gsem"))) == lz3());
  CHECK(parse_gsem(read_file(data_path("const2.gsem"))) == const2());
  CHECK(parse_gsem(read_file(data_path("mod16.gsem"))) == mod16());
  CHECK(parse_gsem(read_file(data_path("mod4mul.gsem"))) == mod4mul());
  auto g = parse_gsem(read_file(data_path("lz3.gsem")));
  CHECK(g.size() == 3);
  CHECK(g.gamma_size() == 2);
  CHECK(parse_gsem(read_file(data_path("mod16.gsem"))).both_sided());
}

TEST_CASE("GSEM round trip") {
  for (auto const& g : {lz3(), const2(), mod16(), mod4mul()}) {
    auto text = render_gsem(g);
    CHECK(parse_gsem(text) == g);
    CHECK(render_gsem(parse_gsem(text)) == text);
  }
}

TEST_CASE("GSEM syntax errors") {
  std::string const ok = "gsem v1\nS: a b\nG: g\nSGS g:\na a\na a\n";
  CHECK_NOTHROW(parse_gsem(ok));
  CHECK_NOTHROW(parse_gsem("# leading comment\n\n" + ok + "# trailing\n"));

  CHECK_THROWS_AS(parse_gsem(""), ParseError);
  CHECK(parse_error_line("gsem v2\nS: a\nG: g\nSGS g:\na\n") == 1);
  CHECK_THROWS_AS(parse_gsem("gsem v1\nS: a b\nG: g\n"), ParseError);
  CHECK(parse_error_line("gsem v1\nS: a b\nG: g\nSGS g:\na a\na\n") == 6);
  CHECK(parse_error_line("gsem v1\nS: a b\nG: g\nSGS h:\na a\na a\n") == 4);
  CHECK(parse_error_line("gsem v1\nS: a a\nG: g\n") == 2);
  CHECK(parse_error_line("gsem v1\nS: a b\nG: g\nSGS g:\na a\na a\nSGS g:\na a\na a\n") == 7);
  CHECK(parse_error_line("gsem v1\nS: a b\nG: g\nSGS g:\na a\n") == 4);
  CHECK_THROWS_AS(parse_gsem("gsem v1\nS: a b\nG: g\nSGS g:\na a\na z\n"), MissingEntry);
  CHECK_THROWS_AS(parse_gsem("gsem v1\nS: a b\nG: g\nSGS g:\nb b\na a\n"),
                  AssociativityViolation);
  // Partial GSG blocks leave cells undefined.
  CHECK_THROWS_AS(parse_gsem(ok + "GSG a:\ng\n"), MissingEntry);
}

TEST_CASE("QFZ parsing") {
  auto g  = lz3();
  auto mu = parse_qfz(read_file(data_path("lz3.qfz")), g);
  CHECK(mu == example_mu(g));
  CHECK(mu(0, 0) == Grade(4, 5));
  CHECK(mu(1, 0) == Grade(7, 10));
  CHECK(mu(2, 0) == Grade(3, 5));

  auto empty = parse_qfz("qfz v1\nQ: p\n", g);
  CHECK_FALSE(empty.is_nonempty());

  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nmu a p 5/4\n", g), OutOfRange);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nmu z p 1/2\n", g), UnknownSymbol);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nmu a r 1/2\n", g), UnknownSymbol);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nmu a p 1/2\nmu a p 1/3\n", g), ParseError);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nmu a p x\n", g), ParseError);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nmu a p 1/2\n", g), ParseError);
  CHECK_THROWS_AS(parse_qfz("qfz v1\nQ: p\nnu a p 1/2\n", g), ParseError);

  auto two = parse_qfz("qfz v1\nQ: p r\nmu b r 1/3\n", g);
  CHECK(two.q_size() == 2);
  CHECK(two(1, 1) == Grade(1, 3));
  CHECK(two(1, 0) == Grade::zero());
}

TEST_CASE("QFZ round trip") {
  auto g = mod4mul();
  for (auto const& mu : enumerate_q_fuzzy_subsets(g, QSet::generated(1), uniform_grid(3))) {
    auto text = render_qfz(mu);
    auto back = parse_qfz(text, g);
    REQUIRE(back.grades().size() == mu.grades().size());
    CHECK(std::equal(back.grades().begin(), back.grades().end(), mu.grades().begin()));
    CHECK(render_qfz(back) == text);
  }
}
