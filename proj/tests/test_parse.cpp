#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {
auto ring() { return FreeAlgebra<PrimeField>::make(kFp, Alphabet{"a", "b", "c"}); }
}  // namespace

TEST_CASE("polynomial syntax") {
  auto R = ring();
  auto a = R->gen("a"), b = R->gen("b"), c = R->gen("c");
  CHECK(P(R, "ab") == a * b);
  CHECK(P(R, "a*b") == a * b);
  CHECK(P(R, "2*a b") == kFp.from_int(2) * (a * b));
  CHECK(P(R, "(a+b)^2") == a * a + a * b + b * a + b * b);
  CHECK(P(R, "-a + 1/2") == -a + R->scalar(kFp.from_ratio(1, 2)));
  CHECK(P(R, "ca = -bc - ab") == c * a + b * c + a * b);
  CHECK(P(R, "a^0") == R->one());
  CHECK(P(R, "3(a-b)c") == kFp.from_int(3) * ((a - b) * c));
  CHECK(P(R, "  0 ").is_zero());
}

TEST_CASE("multi-letter generators") {
  auto R = FreeAlgebra<PrimeField>::make(kFp, Alphabet{"x1", "x2", "x12"});
  CHECK(P(R, "x12x1") == R->gen("x12") * R->gen("x1"));
  CHECK(P(R, "x1 x2") == R->gen("x1") * R->gen("x2"));
}

TEST_CASE("syntax errors report positions") {
  auto R = ring();
  auto at = [&](std::string_view text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_polynomial(R, text, 4);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(at("a + d") == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(at("(a + b") .first == 4);
  CHECK(at("a +") .first == 4);
  CHECK(at("a ^ b") == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(at("1/0").first == 4);
  CHECK(at("a = b = c").first == 4);
}

TEST_CASE("presentation files") {
  const char* text = R"(# E3 in file form
generators: a b c
aa
bb   # comment after a relation
cc
ca + bc + ab
cb + ba + ac
)";
  auto pres = parse_presentation(kFp, text, "e3");
  CHECK(pres.relations.size() == 5);
  CHECK(pres.label == "e3");
  auto rs = complete(pres);
  CHECK(normal_words(rs, std::nullopt).size() == 12);
  try {
    parse_presentation(kFp, "generators: a b\nab + \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_presentation(kFp, "aa\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(kFp, "generators: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(kFp, "generators:\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(kFp, ""), ParseError);
}
