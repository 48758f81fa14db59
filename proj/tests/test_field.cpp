#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("prime field arithmetic") {
  const auto& f = kFp;
  CHECK(f.is_zero(f.add(f.from_int(3), f.from_int(-3))));
  CHECK(f.is_one(f.mul(f.inv(f.from_int(7)), f.from_int(7))));
  CHECK_THROWS_AS(f.inv(f.zero()), FieldError);
  CHECK(f.from_int(-1).v == 10008);
  CHECK(f.to_signed(f.from_int(-5)) == -5);
  CHECK(display(f, f.from_int(10010)) == "1");
  CHECK(f.from_ratio(1, 2) == f.inv(f.from_int(2)));
  CHECK(f.pow(f.from_int(3), 10008) == f.one());
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("fp:10009").characteristic == 10009);
  CHECK(FieldSpec::parse("qq").characteristic == 0);
  CHECK_THROWS(FieldSpec::parse("fp:10"));
  CHECK_THROWS(FieldSpec::parse("fp:3"));
  CHECK_THROWS(FieldSpec::parse("zz"));
  CHECK_THROWS(PrimeField(2));
  CHECK(is_prime(10009));
  CHECK_FALSE(is_prime(10011));
}

TEST_CASE("primitive cube roots of unity") {
  PrimeField f7(7);
  // enumeration oracle: residues with z^2 + z + 1 = 0
  std::vector<std::uint64_t> roots;
  for (std::uint64_t z = 0; z < 7; ++z)
    if ((z * z + z + 1) % 7 == 0) roots.push_back(z);
  CHECK(roots == std::vector<std::uint64_t>{2, 4});
  CHECK(f7.primitive_cube_root().v == 2);
  auto z = kFp.primitive_cube_root();
  CHECK(kFp.is_zero(kFp.add(kFp.add(kFp.mul(z, z), z), kFp.one())));
  CHECK_THROWS_AS(PrimeField(5).primitive_cube_root(), FieldError);
  CHECK_THROWS_AS(RationalField{}.primitive_cube_root(), FieldError);
}

TEST_CASE("square roots") {
  CHECK(kFp.square_root(kFp.from_int(4))->v == 2);
  CHECK(kFp.square_root(kFp.zero())->v == 0);
  PrimeField f7(7);
  std::set<std::uint64_t> squares;
  for (std::uint64_t x = 0; x < 7; ++x) squares.insert(x * x % 7);
  for (std::uint64_t s = 0; s < 7; ++s) {
    auto r = f7.square_root(f7.from_int(static_cast<std::int64_t>(s)));
    CHECK(r.has_value() == squares.count(s) > 0);
    if (r) CHECK(f7.mul(*r, *r).v == s);
  }
  CHECK_FALSE(f7.square_root(f7.from_int(3)).has_value());
  RationalField q;
  CHECK(*q.square_root(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK_FALSE(q.square_root(mpq_class(2)).has_value());
  CHECK_FALSE(q.square_root(mpq_class(-1)).has_value());
}

TEST_CASE("cube roots") {
  // in F_10009 (p = 1 mod 3) exactly a third of the nonzero residues are cubes
  std::size_t cubes = 0;
  for (std::int64_t s = 1; s < 10009; ++s) {
    auto r = kFp.cube_root(kFp.from_int(s));
    if (r) {
      ++cubes;
      CHECK(kFp.pow(*r, 3).v == static_cast<std::uint64_t>(s));
    }
  }
  CHECK(cubes == 10008 / 3);
  PrimeField f11(11);  // 11 = 2 mod 3: cubing is a bijection
  for (std::int64_t s = 0; s < 11; ++s) CHECK(f11.cube_root(f11.from_int(s)).has_value());
  RationalField q;
  CHECK(*q.cube_root(mpq_class(-8, 27)) == mpq_class(-2, 3));
  CHECK_FALSE(q.cube_root(mpq_class(2)).has_value());
}

TEST_CASE("rationals are canonical") {
  RationalField q;
  auto x = q.from_ratio(6, -4);
  CHECK(x == mpq_class(-3, 2));
  CHECK(q.to_string(x) == "-3/2");
  CHECK_THROWS_AS(q.from_ratio(1, 0), FieldError);
  CHECK_THROWS_AS(q.inv(q.zero()), FieldError);
}

TEST_CASE("random elements are seeded") {
  std::mt19937_64 r1(7), r2(7);
  for (int i = 0; i < 10; ++i) CHECK(kFp.random(r1) == kFp.random(r2));
}
