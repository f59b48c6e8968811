#include <doctest.h>

#include "gws/error.hpp"
#include "gws/roots/roots.hpp"

using namespace gws;
using namespace gws::roots;

TEST_CASE("root and Weyl group sizes") {
  struct Row {
    char t;
    int n;
    std::size_t pos, weyl;
  };
  for (auto row : {Row{'A', 1, 1, 2}, Row{'A', 2, 3, 6}, Row{'A', 3, 6, 24}, Row{'B', 2, 4, 8}, Row{'C', 3, 9, 48},
                   Row{'G', 2, 6, 12}, Row{'D', 4, 12, 192}}) {
    CAPTURE(row.t);
    CAPTURE(row.n);
    auto sys = RootSystem::generate(CartanMatrix::of_type(row.t, row.n));
    CHECK(sys.num_positive() == row.pos);
    CHECK(sys.weyl_group().size() == row.weyl);
  }
}

TEST_CASE("G2 highest root and coroots") {
  auto sys = RootSystem::generate(CartanMatrix::of_type('G', 2));
  auto pos = sys.positive_roots();
  CHECK(root_to_string(pos.back()) == root_to_string(Root{3, 2}));
  // Short simple root alpha_1: coroot heights differ from root heights on long roots.
  CHECK(sys.coroot({1, 0}) == Root{1, 0});
  CHECK(sys.coroot({0, 1}) == Root{0, 1});
  CHECK(sys.coroot({3, 2}) == Root{1, 2});
  CHECK(sys.coroot({1, 1}) == Root{1, 3});
}

TEST_CASE("B2 coroots swap long and short") {
  auto sys = RootSystem::generate(CartanMatrix::of_type('B', 2));
  // alpha_1 long, alpha_2 short; alpha_1 + 2 alpha_2 is long with coroot alpha_1^vee + alpha_2^vee.
  CHECK(sys.coroot({1, 2}) == Root{1, 1});
  CHECK(sys.coroot({1, 1}) == Root{2, 1});
  CHECK(sys.pairing({1, 2}, {0, 1}) == 2);
}

TEST_CASE("reduced words and the longest element") {
  auto sys = RootSystem::generate(CartanMatrix::of_type('A', 2));
  auto w0 = sys.longest();
  CHECK(sys.length(w0) == 3);
  CHECK(word_to_string(sys.reduced_word(sys.identity())) == "id");
  CHECK(sys.from_word({1, 2, 1}) == sys.from_word({2, 1, 2}));
  CHECK(sys.apply(sys.simple_reflection(1), {0, 1}) == Root{1, 1});
}

TEST_CASE("type A chart images") {
  auto reg = make_registry({"alpha_1", "alpha_2", "lambda_0", "lambda_1", "lambda_2"});
  auto p1 = type_a_chart(2, Chart::part1, reg);
  CHECK(p1.at("alpha_1").to_string() == "lambda_0 - lambda_1");
  auto p3 = type_a_chart(2, Chart::part3, reg);
  CHECK(p3.at("alpha_2").to_string() == "-lambda_1 + lambda_2");
  CHECK(parse_chart("part3") == Chart::part3);
  CHECK_THROWS_AS(parse_chart("part2"), PreconditionError);
}

TEST_CASE("invalid Cartan requests") {
  CHECK_THROWS_AS(CartanMatrix::of_type('D', 3), PreconditionError);
  CHECK_THROWS_AS(CartanMatrix::of_type('G', 3), PreconditionError);
  auto sys = RootSystem::generate(CartanMatrix::of_type('A', 2));
  CHECK_THROWS_AS(sys.reflect({2, 0}, {1, 0}), PreconditionError);
}
