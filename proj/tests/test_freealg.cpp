#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {
auto ring3() { return FreeAlgebra<PrimeField>::make(kFp, Alphabet{"a", "b", "c"}); }
}  // namespace

TEST_CASE("deglex order") {
  Alphabet al{"a", "b", "c"};
  CHECK(al.word("ab") > al.word("c"));
  CHECK(al.word("ca") > al.word("bc"));
  CHECK(al.word("bab") == al.word("bab"));
  CHECK(compare_deglex(al.word("ab"), al.word("ab")) == std::strong_ordering::equal);
  CHECK(Word{} < al.word("a"));
}

TEST_CASE("words") {
  Alphabet al{"a", "b", "c"};
  auto w = al.word("abcab");
  CHECK(w.find(al.word("ab"), 1) == 3u);
  CHECK(w.has_prefix(al.word("abc")));
  CHECK(w.has_suffix(al.word("cab")));
  CHECK_FALSE(w.contains(al.word("ba")));
  CHECK(al.format(w.subword(1, 3)) == "bca");
  CHECK(al.format(Word{}) == "1");
  Alphabet long_names{"x1", "x2", "x12"};
  CHECK(long_names.word("x12x1").size() == 2);
  CHECK(long_names.format(long_names.word("x12x1")) == "x12*x1");
  CHECK_THROWS(Alphabet({"a", "a"}));
  CHECK_THROWS(al.word("abd"));
}

TEST_CASE("polynomial arithmetic") {
  auto R = ring3();
  auto a = R->gen("a"), b = R->gen("b");
  CHECK(a * b == R->monomial(R->alphabet().word("ab")));
  std::mt19937_64 rng(3);
  NcPoly<PrimeField> p = R->zero();
  for (int i = 0; i < 6; ++i) p += kFp.random(rng) * pow(R->gen(static_cast<Letter>(i % 3)) + R->scalar(i), i % 4);
  CHECK(R->one() * p == p);
  CHECK(p * R->one() == p);
  CHECK((a + b) * (a - b) == a * a - a * b + b * a - b * b);
  CHECK((p - p).is_zero());
  CHECK((a * b - b * a).leading_word() == R->alphabet().word("ba"));
  CHECK(pow(a + b, 2).size() == 4);
  auto other = FreeAlgebra<PrimeField>::make(kFp, Alphabet{"x", "y"});
  CHECK_THROWS(a + other->gen("x"));
}

TEST_CASE("morphisms") {
  auto R = ring3();
  auto a = R->gen("a"), b = R->gen("b"), c = R->gen("c");
  auto act = group_action(Model::D3, R);
  // (12) a = -b, so a^2 goes to b^2
  CHECK(apply_morphism(act[0].spec, a * a) == b * b);
  CHECK(apply_morphism(act[1].spec, b) == -c);
  auto p = a * b - c * c * a + R->scalar(5);
  CHECK(apply_morphism(MorphismSpec<PrimeField>::identity(R), p) == p);
  auto twice = compose(act[0].spec, act[0].spec);
  CHECK(apply_morphism(twice, p) == p);
}

TEST_CASE("G action on T generators") {
  auto R = FreeAlgebra<PrimeField>::make(kFp, Alphabet{"a", "b", "c", "d"});
  auto a = R->gen("a"), b = R->gen("b"), c = R->gen("c"), d = R->gen("d");
  auto act = group_action(Model::T, R);
  const auto& gd = act[3].spec;
  CHECK(apply_morphism(gd, a) == -c);
  // expand by hand: g_d(c) = -b, g_d(b) = -a, g_d(a) = -c
  CHECK(apply_morphism(gd, c * b + b * a + a * c) == b * a + a * c + c * b);
  auto gd2 = compose(gd, gd);
  CHECK(apply_morphism(gd2, b) == c);
  CHECK(apply_morphism(gd2, d) == d);
}

TEST_CASE("skew derivation of the Ore data") {
  auto R = FreeAlgebra<PrimeField>::make(kFp, Alphabet{"a", "b", "c", "y"});
  auto p = params(kFp, 2, 5);
  auto ore = ore_data(p, R);
  auto a = R->gen("a"), c = R->gen("c");
  auto a2 = R->scalar(p.alpha2);
  // d(a^2) = d(a) a + sigma(a) d(a) with sigma(a) = -c, d(a) = alpha2 - ac
  CHECK(apply_skew_derivation(ore.partial, a * a) == (a2 - a * c) * a - c * (a2 - a * c));
  CHECK(apply_skew_derivation(ore.partial, R->one()).is_zero());
  auto q = a * c + R->gen("b") * a * a;
  auto lam = kFp.from_int(1234);
  CHECK(apply_skew_derivation(ore.partial, lam * q) == lam * apply_skew_derivation(ore.partial, q));
}
