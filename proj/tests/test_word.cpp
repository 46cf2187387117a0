#include <doctest.h>

#include <random>

#include "pcat/errors.hpp"
#include "pcat/freewords.hpp"
#include "pcat/word.hpp"

using pcat::FullWord;
using pcat::OpSymbol;
using pcat::Word;

TEST_CASE("parse and format basic words") {
  const Word w = pcat::parse_word("((a*b)/c)");
  CHECK(w.leaf_count() == 3);
  CHECK(w.node_count() == 2);
  CHECK(pcat::format_word(w) == "((a*b)/c)");
  CHECK(pcat::format_postfix(w.tokens()) == "a b μ c μ^στσ");

  const Word sl = pcat::parse_word("(a*(a\\b))");
  CHECK_FALSE(pcat::is_reduced(sl));

  CHECK(pcat::parse_word(" ( a * b ) ") == pcat::parse_word("(a*b)"));
  CHECK(pcat::parse_word("(a1*a2)") == pcat::parse_word("(a*b)"));
  CHECK(pcat::format_word(pcat::parse_word("(a30*a2)")) == "(a30*a2)");
  CHECK(pcat::format_word(pcat::parse_word("a")) == "a");
}

TEST_CASE("parse errors carry a position") {
  SUBCASE("missing parenthesis at end of input") {
    try {
      pcat::parse_word("(a*b");
      FAIL("expected a parse error");
    } catch (const pcat::ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
  SUBCASE("unparenthesized compound") {
    CHECK_THROWS_AS(pcat::parse_word("a*b"), pcat::ParseError);
  }
  SUBCASE("unknown generator") {
    try {
      pcat::parse_word("(a*c)", 2);
      FAIL("expected a parse error");
    } catch (const pcat::ParseError& e) {
      CHECK(e.position() == 3);
    }
  }
  SUBCASE("opposite operator in a basic word") {
    CHECK_THROWS_AS(pcat::parse_word("(a o b)"), pcat::ParseError);
    CHECK_NOTHROW(pcat::parse_full_word("(a o b)"));
  }
  SUBCASE("junk") {
    CHECK_THROWS_AS(pcat::parse_word("(a+b)"), pcat::ParseError);
    CHECK_THROWS_AS(pcat::parse_word(""), pcat::ParseError);
    CHECK_THROWS_AS(pcat::parse_word("(a*b))"), pcat::ParseError);
    CHECK_THROWS_AS(pcat::parse_word("a0"), pcat::ParseError);
  }
}

TEST_CASE("full word syntax") {
  const FullWord f = pcat::parse_full_word("(c//(b o a))");
  CHECK_FALSE(f.is_basic());
  CHECK(f.root_op() == OpSymbol::opposite_right_divide());
  CHECK(f.left() == FullWord::leaf(2));
  CHECK(f.right().root_op() == OpSymbol::opposite_multiply());
  CHECK(pcat::format_word(f) == "(c//(b o a))");
  CHECK(pcat::parse_full_word("(a\\\\b)").root_op() == OpSymbol::opposite_left_divide());
}

TEST_CASE("Word rejects malformed token sequences") {
  using pcat::Token;
  CHECK_THROWS_AS(Word(pcat::Tokens{Token::letter(0), Token::letter(1)}), pcat::DomainError);
  CHECK_THROWS_AS(Word(pcat::Tokens{Token::letter(0), Token::op(OpSymbol::multiply())}),
                  pcat::DomainError);
  CHECK_THROWS_AS(Word(pcat::Tokens{Token::letter(0), Token::letter(1),
                                    Token::op(OpSymbol::opposite_multiply())}),
                  pcat::DomainError);
}

namespace {

FullWord random_full(std::mt19937& rng, int leaves, std::uint32_t letters, bool basic_only) {
  if (leaves == 1) return FullWord::leaf(std::uniform_int_distribution<std::uint32_t>(0, letters - 1)(rng));
  const int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  const auto ops = OpSymbol::all();
  OpSymbol op = ops[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
  if (basic_only && !op.is_basic()) op = op.opposite();
  return FullWord::node(op, random_full(rng, left, letters, basic_only),
                        random_full(rng, leaves - left, letters, basic_only));
}

}  // namespace

TEST_CASE("parse inverts format on random words") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const int leaves = std::uniform_int_distribution<int>(1, 12)(rng);
    const std::uint32_t letters = i % 5 == 0 ? 40 : 4;
    const FullWord f = random_full(rng, leaves, letters, false);
    const std::string text = pcat::format_word(f);
    REQUIRE(pcat::parse_full_word(text) == f);
    REQUIRE(pcat::format_word(pcat::parse_full_word(text)) == text);

    const Word w(random_full(rng, leaves, letters, true));
    REQUIRE(pcat::parse_word(pcat::format_word(w)) == w);
  }
}
