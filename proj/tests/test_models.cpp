#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {
using F = PrimeField;
using E = F::Elem;

E det2(const Matrix<F>& g) { return kFp.sub(kFp.mul(g(0, 0), g(1, 1)), kFp.mul(g(0, 1), g(1, 0))); }
}  // namespace

TEST_CASE("model names") {
  for (auto m : {Model::E3, Model::D3, Model::K, Model::K3, Model::T, Model::B, Model::CLIFFORD})
    CHECK(parse_model(model_name(m)) == m);
  CHECK_THROWS_AS(parse_model("E4"), ModelError);
}

TEST_CASE("presentations") {
  auto d0 = presentation(Model::D3, params(kFp, 0, 0));
  auto e3 = presentation(Model::E3, params(kFp, 0, 0));
  REQUIRE(d0.relations.size() == e3.relations.size());
  for (std::size_t i = 0; i < d0.relations.size(); ++i) CHECK(d0.relations[i] == e3.relations[i]);
  CHECK(presentation(Model::T, params(kFp, 1, 1, 1)).relations.size() == 9);
  auto zero = QuadraticForm<F>{2, Matrix<F>(kFp, 2, 2), {kFp.zero(), kFp.zero()}, std::nullopt};
  auto ext = presentation(Model::CLIFFORD, params(kFp, 0, 0), &zero);
  auto rs = complete(ext);
  CHECK(normal_words(rs, std::nullopt).size() == 4);
  CHECK_THROWS_AS(presentation(Model::CLIFFORD, params(kFp, 0, 0)), ModelError);
}

TEST_CASE("group actions") {
  auto R = model_ring(Model::D3, kFp);
  auto act = group_action(Model::D3, R);
  CHECK(act[1].name == "(23)");
  CHECK(apply_morphism(act[1].spec, R->gen("b")) == -R->gen("c"));
  auto T = model_ring(Model::T, kFp);
  auto g = group_action(Model::T, T);
  CHECK(apply_morphism(g[3].spec, T->gen("a")) == -T->gen("c"));
  auto gd2 = compose(g[3].spec, g[3].spec);
  CHECK(apply_morphism(gd2, T->gen("b")) == T->gen("c"));
  CHECK(apply_morphism(gd2, T->gen("c")) == T->gen("a"));
  CHECK_THROWS_AS(group_action(Model::K, model_ring(Model::K, kFp)), ModelError);
}

TEST_CASE("derived elements") {
  auto p = params(kFp, 1, 1);
  auto pres = presentation(Model::D3, p);
  auto rs = complete(pres);
  const auto& R = pres.ring;
  auto e = derived_element("e1", p, R) + derived_element("e2", p, R) + derived_element("e3", p, R);
  CHECK(normal_form(rs, e) == R->one());
  CHECK((derived_element("u", p, R) + derived_element("v", p, R) + derived_element("w", p, R)).is_zero());
  auto p13 = params(kFp, 1, 3);
  CHECK(derived_element("f1", p13, R) + derived_element("f2", p13, R) == R->one());
  CHECK_THROWS_AS(derived_element("e1", p13, R), ModelError);
  CHECK_THROWS_AS(derived_element("vplus", ModelParams<RationalField>::ints(RationalField{}, 1, 1),
                                  model_ring(Model::D3, RationalField{})),
                  ModelError);
}

TEST_CASE("corner form of D3") {
  auto p = params(kFp, 4, 9);
  auto q = quadratic_form(FormKind::FK3_CORNER, p);
  CHECK(q.gram(0, 0) == kFp.from_int(4));
  CHECK(q.gram(0, 1) == kFp.from_ratio(5, 2));
  // degenerate iff (3a1 - a2)(a1 + a2) = 0, checked on a grid
  for (int a1 = -3; a1 <= 3; ++a1) {
    for (int a2 = -3; a2 <= 9; ++a2) {
      auto g = quadratic_form(FormKind::FK3_CORNER, params(kFp, a1, a2)).gram;
      CHECK(kFp.is_zero(det2(g)) == ((3 * a1 - a2) * (a1 + a2) == 0));
    }
  }
}

TEST_CASE("q_gamma discriminant") {
  auto p = ModelParams<F>::with_gamma(kFp, kFp.one(), kFp.zero(), kFp.one());
  auto q = quadratic_form(FormKind::Q_GAMMA, p);
  REQUIRE(q.discriminant);
  // -9 (4*1*1 + 3^3 (1 + 0)) = -279
  CHECK(display(kFp, *q.discriminant) == "-279");
  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    auto pi = ModelParams<F>::with_gamma(kFp, kFp.random(rng), kFp.random(rng), kFp.random(rng));
    auto qi = quadratic_form(FormKind::Q_GAMMA, pi);
    CHECK(*qi.discriminant == kFp.mul(kFp.from_int(-4), det2(qi.gram)));
  }
  RationalField qq;
  CHECK_THROWS_AS(quadratic_form(FormKind::Q_GAMMA, ModelParams<RationalField>::ints(qq, 1, 0, 2)), ModelError);
}

TEST_CASE("q'_gamma nondegeneracy locus") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto g = kFp.random(rng);
    if (kFp.is_zero(g)) continue;
    auto p = ModelParams<F>::with_gamma(kFp, kFp.random(rng), kFp.random(rng), g);
    auto q = quadratic_form(FormKind::QPRIME_GAMMA, p);
    auto f = kFp.add(p.alpha3, kFp.mul(kFp.add(p.alpha1, p.alpha2), kFp.mul(p.beta, p.beta)));
    CHECK((rank(q.gram) == 3) == !kFp.is_zero(f));
  }
}

TEST_CASE("Ore data") {
  auto p = params(kFp, 2, 3);
  auto pres = presentation(Model::K, p);
  auto rs = complete(pres);
  const auto& R = pres.ring;
  auto ore = ore_data(p, R);
  CHECK(contains(rs, apply_morphism(ore.sigma, P(R, "ca + bc + ab - 3"))));
  CHECK(contains(rs, apply_skew_derivation(ore.partial, P(R, "aa - 2"))));
  auto s6 = ore.sigma;
  for (int i = 0; i < 5; ++i) s6 = compose(ore.sigma, s6);
  for (Letter i = 0; i < 4; ++i) CHECK(s6.images[i] == R->gen(i));
}

TEST_CASE("rho images") {
  auto p = ModelParams<F>::with_gamma(kFp, kFp.one(), kFp.zero(), kFp.one());
  auto rho = rho_matrices(p);
  const auto& M = rho.matrices;
  CHECK(M.dim() == 36);
  CHECK(M.multiply(rho.A, rho.A) == M.scalar(p.alpha1));
  CHECK(M.add(M.add(M.multiply(rho.A, rho.B), M.multiply(rho.B, rho.C)), M.multiply(rho.C, rho.A)) ==
        M.scalar(p.alpha2));
  CHECK(subalgebra_with_unit(M, {rho.A, rho.B, rho.C}).dim() == 36);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10; ++i) {
    auto pi = ModelParams<F>::with_gamma(kFp, kFp.random(rng), kFp.random(rng), kFp.random(rng));
    if (kFp.is_zero(kFp.add(kFp.pow(*pi.gamma, 3), kFp.pow(pi.beta, 3)))) continue;
    auto r = rho_matrices(pi);
    CHECK(r.matrices.power(r.Y, 3) == r.matrices.scalar(pi.alpha3));
  }
  // gamma^3 = -beta^3: (1, 4) gives beta = -1, so gamma = 1
  auto bad = ModelParams<F>::with_gamma(kFp, kFp.one(), kFp.from_int(4), kFp.one());
  CHECK_THROWS_AS(rho_matrices(bad), ModelError);
}

TEST_CASE("relation suites") {
  auto p = params(kFp, 3, 5);
  auto d3 = complete(presentation(Model::D3, p));
  auto urels = relation_suite("fk3-urels", p);
  CHECK(urels.polys.size() == 10);
  for (const auto& r : urels.polys) CHECK(normal_form(d3, r).is_zero());
  auto k = complete(presentation(Model::K, p));
  for (const char* id : {"k-abcy", "k-u1v1", "k-uv"})
    for (const auto& r : relation_suite(id, p).polys) CHECK(normal_form(k, r).is_zero());
  auto e3 = complete(presentation(Model::E3, params(kFp, 0, 0)));
  CHECK(normal_form(e3, pow(P(e3.ring(), "a-b"), 3)).is_zero());
  auto t = complete(presentation(Model::T, params(kFp, 3, 5, 7)));
  for (const char* id : {"t-yrels", "t-ore", "t-d"})
    for (const auto& r : relation_suite(id, params(kFp, 3, 5, 7)).polys) CHECK(normal_form(t, r).is_zero());
  CHECK_THROWS_AS(relation_suite("fk3-coinvariant", p), ModelError);
  CHECK_THROWS_AS(relation_suite("nope", p), ModelError);
  CHECK(relation_suite_ids().size() == 9);
}

TEST_CASE("PBW monomials") {
  auto p = params(kFp, 2, 1, 3);
  CHECK(pbw_monomials(Model::D3, p, model_ring(Model::D3, kFp)).size() == 12);
  CHECK(pbw_monomials(Model::K3, p, model_ring(Model::K3, kFp)).size() == 36);
  CHECK(pbw_monomials(Model::T, p, model_ring(Model::T, kFp)).size() == 72);
}

TEST_CASE("sextic forms of B") {
  auto R = model_ring(Model::B, kFp);
  auto forms = b_sextic_forms(R);
  CHECK(forms.size() == 3);
  CHECK(forms[0] == pow(P(R, "a+b+c"), 6));
}
