#include "nilpotent/errors.hpp"
#include "nilpotent/words.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace nilpotent;
using nilpotent::testing::Rng;

namespace {

std::vector<Letter> L(std::initializer_list<std::pair<int, long>> xs) {
  std::vector<Letter> out;
  for (auto [g, e] : xs)
    out.push_back({g, e});
  return out;
}

} // namespace

TEST_CASE("parse_word: basic denotations") {
  CHECK(parse_word("x1^2*x2^-1", 2).letters() == L({{1, 2}, {2, -1}}));
  CHECK(parse_word("x1*x1^-1", 1).empty());
  CHECK(parse_word("[x1,x2]", 2).letters() == L({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
  CHECK(parse_word(" x1 x2 ( x1 ) ^ 3 ", 2).letters() == L({{1, 1}, {2, 1}, {1, 3}}));
  CHECK(parse_word("1", 2).empty());
  CHECK(parse_word("[x1,x2,x2]", 2) == commutator(commutator(Word::generator(1), Word::generator(2)),
                                                   Word::generator(2)));
}

TEST_CASE("parse_word: arbitrary precision exponents") {
  Word w = parse_word("x2^123456789012345678901234567890", 2);
  REQUIRE(w.size() == 1);
  CHECK(w.letters()[0].exponent == Integer("123456789012345678901234567890"));
  CHECK(render(w) == "x2^123456789012345678901234567890");
}

TEST_CASE("parse_word: errors") {
  CHECK_THROWS_AS(parse_word("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x0", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x1*", 2), ParseError);
  CHECK_THROWS_AS(parse_word("[x1]", 2), ParseError);
  CHECK_THROWS_AS(parse_word("(x1", 2), ParseError);
  CHECK_THROWS_AS(parse_word("y1", 2), ParseError);
  CHECK_THROWS_AS(parse_word("", 2), ParseError);
  try {
    parse_word("x1*x9", 2);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("expand_commutator") {
  auto x1 = CommutatorExpr::leaf(1), x2 = CommutatorExpr::leaf(2);
  CHECK(expand_commutator(x1).letters() == L({{1, 1}}));
  CHECK(expand_commutator(CommutatorExpr::bracket(x1, x2)).letters() == L({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
  // [[x1,x2],x1] = [x2,x1] x1^-1 [x1,x2] x1 reduces to 8 letters.
  Word w = expand_commutator(CommutatorExpr::bracket(CommutatorExpr::bracket(x1, x2), x1));
  CHECK(w.letters() == L({{2, -1}, {1, -1}, {2, 1}, {1, -1}, {2, -1}, {1, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("invert / concat / free_reduce") {
  CHECK(invert(Word::from_letters(L({{1, 2}, {2, 1}}))).letters() == L({{2, -1}, {1, -2}}));
  CHECK(concat(Word::generator(1), Word::generator(1, -1)).empty());
  CHECK(concat(Word::generator(1, 2), Word::generator(1, 3)).letters() == L({{1, 5}}));
  CHECK(free_reduce(L({{1, 1}, {2, 0}, {1, -1}, {2, 3}})) == L({{2, 3}}));
  CHECK(free_reduce(L({{1, 2}, {2, 1}, {2, -1}, {1, -2}})).empty());
  CHECK(power(parse_word("x1x2", 2), -2) == parse_word("x2^-1x1^-1x2^-1x1^-1", 2));
  CHECK(conjugate(Word::generator(1), Word::generator(2)) == parse_word("x2^-1x1x2", 2));
}

TEST_CASE("word properties on random inputs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> raw;
    int n = nilpotent::testing::uniform(rng, 0, 14);
    for (int i = 0; i < n; ++i)
      raw.push_back({nilpotent::testing::uniform(rng, 1, 3), nilpotent::testing::uniform(rng, -2, 2)});
    auto once = free_reduce(raw);
    CHECK(free_reduce(once) == once);
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once[i].exponent != 0);
      if (i > 0)
        CHECK(once[i].generator != once[i - 1].generator);
    }
    Word w = Word::from_letters(raw);
    CHECK(concat(w, invert(w)).empty());
    CHECK(parse_word(render(w), 3) == w);
  }
}

TEST_CASE("CommutatorExpr order, weight and rendering") {
  auto x1 = CommutatorExpr::leaf(1), x2 = CommutatorExpr::leaf(2);
  auto c = CommutatorExpr::bracket(x2, x1);
  CHECK(c.weight() == 2);
  CHECK(CommutatorExpr::bracket(c, x2).weight() == 3);
  CHECK(x1 < x2);
  CHECK(x2 < c);
  CHECK(CommutatorExpr::bracket(c, x1) < CommutatorExpr::bracket(c, x2));
  CHECK(render(CommutatorExpr::bracket(c, x2)) == "[[x2,x1],x2]");
  CHECK(parse_commutator_expr("[[x2,x1],x2]", 2) == CommutatorExpr::bracket(c, x2));
  CHECK(parse_commutator_expr("[x2,x1,x2]", 2) == CommutatorExpr::bracket(c, x2));
  CHECK_THROWS_AS(parse_commutator_expr("[x2,x1", 2), ParseError);
}
