#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {
Matrix<PrimeField> M(std::vector<std::vector<std::int64_t>> rows) {
  Matrix<PrimeField> m(kFp, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = kFp.from_int(rows[i][j]);
  return m;
}
}  // namespace

TEST_CASE("rank and kernel") {
  auto m = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_vector(kFp, m.apply(k[0])));
  CHECK(rank(Matrix<PrimeField>::identity(kFp, 4)) == 4);
  CHECK(kernel(Matrix<PrimeField>::identity(kFp, 3)).empty());
}

TEST_CASE("inverse") {
  auto m = M({{2, 1}, {7, 4}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix<PrimeField>::identity(kFp, 2));
  CHECK_FALSE(inverse(M({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("random matrices: rank-nullity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix<PrimeField> m(kFp, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? kFp.zero() : kFp.random(rng);
    auto k = kernel(m);
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) CHECK(is_zero_vector(kFp, m.apply(v)));
  }
}

TEST_CASE("subspaces") {
  auto v = [](std::vector<std::int64_t> xs) {
    Vec<PrimeField> out;
    for (auto x : xs) out.push_back(kFp.from_int(x));
    return out;
  };
  auto s = Subspace<PrimeField>::span(kFp, 3, {v({1, 1, 0}), v({2, 2, 0}), v({0, 1, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(v({1, 2, 1})));
  CHECK_FALSE(s.contains(v({0, 0, 1})));
  auto t = Subspace<PrimeField>::span(kFp, 3, {v({1, 2, 1}), v({1, 0, -1})});
  CHECK(s == t);
  CHECK(s.contains(t));
  CHECK_FALSE(s.insert(v({3, 3, 0})));
  CHECK(s.insert(v({0, 0, 1})));
  CHECK(s.dim() == 3);
  Coordinates<PrimeField> c(kFp, {v({1, 1, 0}), v({0, 1, 1})});
  auto co = c.of(v({2, 5, 3}));
  REQUIRE(co);
  CHECK((*co)[0] == kFp.from_int(2));
  CHECK((*co)[1] == kFp.from_int(3));
  CHECK_FALSE(c.of(v({0, 0, 1})).has_value());
}
