#include "ncforge/models.hpp"

#include <array>
#include <sstream>

namespace ncforge {

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 7> kModelNames{{
    {Model::E3, "E3"},
    {Model::D3, "D3"},
    {Model::K, "K"},
    {Model::K3, "K3"},
    {Model::T, "T"},
    {Model::B, "B"},
    {Model::CLIFFORD, "CLIFFORD"},
}};

}  // namespace

std::string_view model_name(Model m) {
  for (const auto& [model, name] : kModelNames) {
    if (model == m) return name;
  }
  return "?";
}

Model parse_model(std::string_view name) {
  for (const auto& [model, n] : kModelNames) {
    if (n == name) return model;
  }
  throw ModelError("unknown model '" + std::string(name) + "'");
}

Alphabet model_alphabet(Model m, std::size_t clifford_dim) {
  switch (m) {
    case Model::E3:
    case Model::D3:
      return Alphabet{"a", "b", "c"};
    case Model::K:
    case Model::K3:
      return Alphabet{"a", "b", "c", "y"};
    case Model::T:
    case Model::B:
      return Alphabet{"a", "b", "c", "d"};
    case Model::CLIFFORD: {
      if (clifford_dim == 0) throw ModelError("Clifford algebra needs a positive dimension");
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= clifford_dim; ++i) names.push_back("x" + std::to_string(i));
      return Alphabet(std::move(names));
    }
  }
  throw ModelError("unknown model");
}

template <Field F>
AlgebraPtr<F> model_ring(Model m, const F& f, std::size_t clifford_dim) {
  return FreeAlgebra<F>::make(f, model_alphabet(m, clifford_dim));
}

template <Field F>
ModelParams<F> ModelParams<F>::make(const F& f, Elem a1, Elem a2, Elem a3) {
  ModelParams p{f, a1, a2, a3, f.sub(f.mul(f.from_int(3), a1), a2), std::nullopt, std::nullopt};
  p.gamma = f.cube_root(a3);
  if (f.characteristic() % 3 == 1) p.zeta = f.primitive_cube_root();
  return p;
}

template <Field F>
ModelParams<F> ModelParams<F>::with_gamma(const F& f, Elem a1, Elem a2, Elem g) {
  ModelParams p = make(f, a1, a2, f.pow(g, 3));
  p.gamma = g;
  return p;
}

template <Field F>
const typename F::Elem& ModelParams<F>::require_gamma() const {
  if (!gamma) throw ModelError("alpha3 = " + display(field, alpha3) + " has no cube root in " + field.name());
  return *gamma;
}

template <Field F>
const typename F::Elem& ModelParams<F>::require_zeta() const {
  if (!zeta) throw ModelError("no primitive cube root of unity in " + field.name());
  return *zeta;
}

template <Field F>
std::string ModelParams<F>::describe() const {
  std::ostringstream out;
  out << "(" << display(field, alpha1) << ", " << display(field, alpha2) << ", " << display(field, alpha3) << ")";
  return out.str();
}

template <Field F>
typename F::Elem QuadraticForm<F>::evaluate(const std::vector<Elem>& l) const {
  const F& f = gram.field();
  Elem s = f.zero();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) s = f.add(s, f.mul(gram(i, j), f.mul(l[i], l[j])));
  }
  return s;
}

template <Field F>
QuadraticForm<F> form_from_coefficients(const F& f, std::size_t n, const std::vector<typename F::Elem>& upper) {
  if (upper.size() != n * (n + 1) / 2) throw ModelError("quadratic form needs n(n+1)/2 coefficients");
  QuadraticForm<F> q{n, Matrix<F>(f, n, n), {}, std::nullopt};
  const auto half = f.inv(f.from_int(2));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++k) {
      if (i == j) {
        q.gram(i, i) = upper[k];
      } else {
        q.gram(i, j) = q.gram(j, i) = f.mul(upper[k], half);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) q.diagonal.push_back(q.gram(i, i));
  return q;
}

template <Field F>
QuadraticForm<F> quadratic_form(FormKind kind, const ModelParams<F>& p) {
  const F& f = p.field;
  auto k = [&](std::int64_t n) { return f.from_int(n); };
  const auto& a1 = p.alpha1;
  const auto& a2 = p.alpha2;
  const auto& b = p.beta;
  switch (kind) {
    case FormKind::FK3_CORNER:
      return form_from_coefficients(f, 2, {a1, f.sub(a2, a1), a1});
    case FormKind::Q_GAMMA:
    case FormKind::QPRIME_GAMMA: {
      const auto& g = p.require_gamma();
      auto g2 = f.mul(g, g), g3 = f.mul(g2, g), b2 = f.mul(b, b), b3 = f.mul(b2, b);
      auto q11 = f.add(g, f.add(f.mul(k(3), a1), f.mul(k(2), a2)));
      auto q12 = f.sub(f.sub(f.mul(k(2), g2), f.mul(k(2), f.mul(b, g))), b2);
      auto q22 = f.add(g3, b3);
      if (kind == FormKind::Q_GAMMA) {
        auto q = form_from_coefficients(f, 2, {q11, q12, q22});
        // printed value -9(4 a1 g^3 + b^3 (a1 + a2))
        q.discriminant = f.mul(k(-9), f.add(f.mul(k(4), f.mul(a1, g3)), f.mul(b3, f.add(a1, a2))));
        return q;
      }
      auto q13 = f.sub(f.mul(k(2), a2), g);
      auto q23 = f.add(f.mul(k(2), g2), b2);
      return form_from_coefficients(f, 3, {q11, q12, q13, q22, q23, a1});
    }
  }
  throw ModelError("unknown quadratic form");
}

template <Field F>
Presentation<F> clifford_presentation(const QuadraticForm<F>& q) {
  const F& f = q.gram.field();
  auto ring = model_ring(Model::CLIFFORD, f, q.dim);
  Presentation<F> p{ring, {}, "CLIFFORD"};
  for (std::size_t i = 0; i < q.dim; ++i) {
    auto x = ring->gen(static_cast<Letter>(i));
    p.relations.push_back(x * x - ring->scalar(q.gram(i, i)));
  }
  for (std::size_t j = 0; j < q.dim; ++j) {
    for (std::size_t k = j + 1; k < q.dim; ++k) {
      auto xj = ring->gen(static_cast<Letter>(j)), xk = ring->gen(static_cast<Letter>(k));
      p.relations.push_back(xj * xk + xk * xj - ring->scalar(f.mul(f.from_int(2), q.gram(j, k))));
    }
  }
  return p;
}

template <Field F>
Presentation<F> presentation(Model m, const ModelParams<F>& p, const QuadraticForm<F>* q) {
  if (m == Model::CLIFFORD) {
    if (!q) throw ModelError("Clifford presentation needs a quadratic form");
    return clifford_presentation(*q);
  }
  const F& f = p.field;
  auto ring = model_ring(m, f);
  auto gen = [&](const char* n) { return ring->gen(n); };
  auto s = [&](const typename F::Elem& x) { return ring->scalar(x); };
  Presentation<F> pr{ring, {}, std::string(model_name(m))};
  auto& rel = pr.relations;

  if (m == Model::B) {
    auto a = gen("a"), b = gen("b"), c = gen("c"), d = gen("d");
    rel = {a * a,         b * b,         c * c,         d * d,        a * b + b * c + c * a,
           a * c + c * d + d * a, a * d + b * a + d * b, b * d + c * b + d * c, pow(a + b + c, 6)};
    return pr;
  }

  const bool graded = m == Model::E3;
  const auto a1 = graded ? f.zero() : p.alpha1;
  const auto a2 = graded ? f.zero() : p.alpha2;
  auto a = gen("a"), b = gen("b"), c = gen("c");
  rel = {a * a - s(a1), b * b - s(a1), c * c - s(a1)};
  switch (m) {
    case Model::E3:
    case Model::D3:
      rel.push_back(c * a + b * c + a * b - s(a2));
      rel.push_back(c * b + b * a + a * c - s(a2));
      break;
    case Model::K:
    case Model::K3: {
      auto y = gen("y");
      rel.push_back(a * b + b * c + c * a - s(a2));
      rel.push_back(a * c + c * b + b * a - s(a2) - y);
      if (m == Model::K3) rel.push_back(pow(y, 3) - s(p.alpha3));
      break;
    }
    case Model::T: {
      auto d = gen("d");
      rel.push_back(d * d - s(a1));
      rel.push_back(c * a + b * c + a * b - s(a2));
      rel.push_back(d * a + c * d + a * c - s(a2));
      rel.push_back(d * b + b * a + a * d - s(a2));
      rel.push_back(d * c + c * b + b * d - s(a2));
      rel.push_back(pow(c * b + b * a + a * c - s(a2), 3) - s(p.alpha3));
      break;
    }
    default:
      break;
  }
  return pr;
}

template <Field F>
std::vector<NamedMorphism<F>> group_action(Model m, const AlgebraPtr<F>& ring) {
  auto img = [&](std::initializer_list<const char*> names) {
    MorphismSpec<F> spec;
    for (const char* n : names) spec.images.push_back(-ring->gen(n));
    return spec;
  };
  if (m == Model::D3 || m == Model::E3) {
    return {{"(12)", img({"b", "a", "c"})}, {"(23)", img({"a", "c", "b"})}};
  }
  if (m == Model::T || m == Model::B) {
    return {{"g_a", img({"a", "c", "d", "b"})},
            {"g_b", img({"d", "b", "a", "c"})},
            {"g_c", img({"b", "d", "c", "a"})},
            {"g_d", img({"c", "a", "b", "d"})}};
  }
  throw ModelError("no group action registered for " + std::string(model_name(m)));
}

namespace {

template <Field F>
NcPoly<F> y_element(const ModelParams<F>& p, const AlgebraPtr<F>& ring) {
  if (ring->alphabet().index_of("y")) return ring->gen("y");
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  return a * c + c * b + b * a - ring->scalar(p.alpha2);
}

template <Field F>
typename F::Elem require_beta_inverse(const ModelParams<F>& p) {
  if (p.field.is_zero(p.beta)) throw ModelError("idempotents e_i need 3*alpha1 - alpha2 != 0");
  return p.field.inv(p.beta);
}

}  // namespace

template <Field F>
NcPoly<F> derived_element(std::string_view name, const ModelParams<F>& p, const AlgebraPtr<F>& ring) {
  const F& f = p.field;
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  auto s = [&](const typename F::Elem& x) { return ring->scalar(x); };
  if (name == "u") return a - b;
  if (name == "v") return b - c;
  if (name == "w") return c - a;
  if (name == "t") return a + b + c;
  if (name == "y") return y_element(p, ring);
  if (name == "vplus" || name == "vminus") {
    const auto& z = p.require_zeta();
    auto z2 = f.mul(z, z);
    if (name == "vplus") return a + z * b + z2 * c;
    return a + z2 * b + z * c;
  }
  const auto sum12 = s(f.add(p.alpha1, p.alpha2));
  if (name == "e1") return require_beta_inverse(p) * (pow(b + c, 2) - sum12);
  if (name == "e2") return require_beta_inverse(p) * (pow(a + c, 2) - sum12);
  if (name == "e3") return require_beta_inverse(p) * (pow(a + b, 2) - sum12);
  if (name == "e1alt") return require_beta_inverse(p) * ((c - a) * (b - a));
  if (name == "e2alt") return require_beta_inverse(p) * ((c - b) * (a - b));
  if (name == "e3alt") return require_beta_inverse(p) * ((a - c) * (b - c));
  if (name == "f1" || name == "f2") {
    if (f.is_zero(p.alpha1)) throw ModelError("f1, f2 need alpha1 != 0");
    auto r = f.square_root(p.alpha1);
    if (!r) throw ModelError("alpha1 = " + display(f, p.alpha1) + " is not a square in " + f.name());
    auto inv2r = f.inv(f.mul(f.from_int(2), *r));
    if (name == "f1") return inv2r * (s(*r) + b);
    return inv2r * (s(*r) - b);
  }
  if (name == "ey") {
    const auto& g = p.require_gamma();
    if (f.is_zero(g)) throw ModelError("the idempotent of K[y] needs gamma != 0");
    auto y = y_element(p, ring);
    auto coef = f.inv(f.mul(f.from_int(3), f.mul(g, g)));
    return coef * (y * y + g * y + s(f.mul(g, g)));
  }
  throw ModelError("unknown derived element '" + std::string(name) + "'");
}

template <Field F>
NcPoly<F> witness_element(const ModelParams<F>& p, const AlgebraPtr<F>& ring, const typename F::Elem& lambda) {
  auto vm = derived_element("vminus", p, ring);
  return derived_element("vplus", p, ring) + lambda * (vm * vm);
}

template <Field F>
OreData<F> ore_data(const ModelParams<F>& p, const AlgebraPtr<F>& ring) {
  const auto& alpha = ring->alphabet();
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  auto a2 = ring->scalar(p.alpha2);
  OreData<F> o;
  o.sigma.images.resize(alpha.size());
  o.partial.images.resize(alpha.size(), ring->zero());
  for (std::size_t i = 0; i < alpha.size(); ++i) o.sigma.images[i] = ring->gen(static_cast<Letter>(i));
  o.sigma.images[alpha.at("a")] = -c;
  o.sigma.images[alpha.at("b")] = -a;
  o.sigma.images[alpha.at("c")] = -b;
  o.partial.images[alpha.at("a")] = a2 - a * c;
  o.partial.images[alpha.at("b")] = a2 - b * a;
  o.partial.images[alpha.at("c")] = a2 - c * b;
  o.partial.sigma = o.sigma;
  if (auto iy = alpha.index_of("y")) {
    // y stands for ac + cb + ba - alpha2; its image is forced by the rule on products
    o.partial.images[*iy] = apply_skew_derivation(o.partial, a * c + c * b + b * a);
  }
  return o;
}

template <Field F>
std::vector<NcPoly<F>> pbw_monomials(Model m, const ModelParams<F>& p, const AlgebraPtr<F>& ring) {
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  std::vector<NcPoly<F>> out;
  NcPoly<F> u = a - b;
  int max_y = 0, max_d = 0;
  switch (m) {
    case Model::E3:
    case Model::D3:
      break;
    case Model::K3:
      max_y = 2;
      break;
    case Model::T:
      u = b - a;
      max_y = 2;
      max_d = 1;
      break;
    default:
      throw ModelError("no PBW basis registered for " + std::string(model_name(m)));
  }
  auto y = max_y ? y_element(p, ring) : ring->one();
  auto d = max_d ? ring->gen("d") : ring->one();
  for (unsigned n1 = 0; n1 <= 2; ++n1) {
    for (unsigned n2 = 0; n2 <= 1; ++n2) {
      for (unsigned n3 = 0; n3 <= 1; ++n3) {
        for (int n4 = 0; n4 <= max_y; ++n4) {
          for (int n5 = 0; n5 <= max_d; ++n5) {
            out.push_back(pow(u, n1) * pow(a, n2) * pow(c, n3) * pow(y, static_cast<unsigned>(n4)) *
                          pow(d, static_cast<unsigned>(n5)));
          }
        }
      }
    }
  }
  return out;
}

template <Field F>
std::vector<NcPoly<F>> b_sextic_forms(const AlgebraPtr<F>& ring) {
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  return {pow(a + b + c, 6), pow(c * b + b * a + a * c, 3),
          pow(c * b * a, 2) + pow(b * a * c, 2) + pow(a * c * b, 2)};
}

std::vector<std::string> relation_suite_ids() {
  return {"fk3-urels", "d3-newrels", "k-abcy", "k-u1v1", "k-uv", "t-yrels", "t-ore", "t-d", "fk3-coinvariant"};
}

template <Field F>
RelationSuite<F> relation_suite(std::string_view id, const ModelParams<F>& p) {
  const F& f = p.field;
  RelationSuite<F> s;
  auto add = [&](std::string label, NcPoly<F> poly) {
    s.labels.push_back(std::move(label));
    s.polys.push_back(std::move(poly));
  };

  if (id == "fk3-urels" || id == "d3-newrels" || id == "fk3-coinvariant") {
    s.model = Model::D3;
    auto ring = model_ring(Model::D3, f);
    auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
    auto u = a - b, v = b - c, w = c - a;
    auto k = [&](const typename F::Elem& x) { return ring->scalar(x); };
    if (id == "fk3-urels") {
      add("ua = -bu", u * a + b * u);
      add("ub = -au", u * b + a * u);
      add("uc = (c-a-b)u", u * c - (c - a - b) * u);
      add("uv = vu", u * v - v * u);
      add("uw = wu", u * w - w * u);
      add("vw = wv", v * w - w * v);
      add("uv+vw+uw = alpha2-3alpha1", u * v + v * w + u * w - k(f.neg(p.beta)));
      add("u^3 = beta u", pow(u, 3) - p.beta * u);
      add("u^2v+uv^2 = 0", u * u * v + u * v * v);
      add("uvw = 0", u * v * w);
    } else if (id == "d3-newrels") {
      add("au = u^2-ua", a * u - (u * u - u * a));
      add("cu = u^2-2ua+uc", c * u - (u * u - f.from_int(2) * (u * a) + u * c));
      add("ca = alpha2-alpha1+u^2-ua+uc-ac",
          c * a - (k(f.sub(p.alpha2, p.alpha1)) + u * u - u * a + u * c - a * c));
    } else {
      if (!f.is_zero(f.sub(p.alpha2, f.mul(f.from_int(3), p.alpha1)))) {
        throw ModelError("coinvariant suite needs alpha2 = 3*alpha1");
      }
      auto f1 = derived_element("f1", p, ring), f2 = derived_element("f2", p, ring);
      add("f1^2 = f1", f1 * f1 - f1);
      add("f2^2 = f2", f2 * f2 - f2);
      add("f1+f2 = 1", f1 + f2 - ring->one());
      add("f1f2 = 0", f1 * f2);
      add("f2f1 = 0", f2 * f1);
      const std::array<NcPoly<F>, 2> fs{f1, f2};
      auto uu = [&](int i, int j) { return fs[i] * u * fs[j]; };
      auto vv = [&](int i, int j) { return fs[i] * v * fs[j]; };
      auto ww = [&](int i, int j) { return -uu(i, j) - vv(i, j); };
      for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
        std::string ji = std::to_string(j + 1) + std::to_string(i + 1);
        add("u" + ij + "v" + ji + " = v" + ij + "u" + ji, uu(i, j) * vv(j, i) - vv(i, j) * uu(j, i));
        add("u" + ij + "v" + ji + "+v" + ij + "w" + ji + "+u" + ij + "w" + ji + " = 0",
            uu(i, j) * vv(j, i) + vv(i, j) * ww(j, i) + uu(i, j) * ww(j, i));
        add("u" + ij + "v" + ji + "w" + ij + " = 0", uu(i, j) * vv(j, i) * ww(i, j));
      }
    }
    return s;
  }

  if (id == "k-abcy" || id == "k-u1v1" || id == "k-uv") {
    s.model = Model::K;
    auto ring = model_ring(Model::K, f);
    auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c"), y = ring->gen("y");
    auto k = [&](const typename F::Elem& x) { return ring->scalar(x); };
    const auto& beta = p.beta;
    if (id == "k-abcy") {
      add("ya = cy", y * a - c * y);
      add("yb = ay", y * b - a * y);
      add("yc = by", y * c - b * y);
      add("bab-aba = alpha2(b-a)", b * a * b - a * b * a - p.alpha2 * (b - a));
      add("(b-a)^3 = beta(b-a)", pow(b - a, 3) - beta * (b - a));
      auto y3 = pow(y, 3);
      add("y^3 a = a y^3", y3 * a - a * y3);
      add("y^3 b = b y^3", y3 * b - b * y3);
      add("y^3 c = c y^3", y3 * c - c * y3);
      return s;
    }
    const auto& z = p.require_zeta();
    const auto z2 = f.mul(z, z);
    auto t = derived_element("t", p, ring);
    auto vp = derived_element("vplus", p, ring), vm = derived_element("vminus", p, ring);
    if (id == "k-u1v1") {
      add("yv+ = zeta v+y", y * vp - z * (vp * y));
      add("yv- = zeta^-1 v-y", y * vm - z2 * (vm * y));
      add("v+v- = beta+zeta y", vp * vm - k(beta) - z * y);
      add("v-v+ = beta+zeta^2 y", vm * vp - k(beta) - z2 * y);
      add("tv+ = -v+t-v-^2", t * vp + vp * t + vm * vm);
      add("tv- = -v-t-v+^2", t * vm + vm * t + vp * vp);
    } else {
      auto vp3 = pow(vp, 3);
      auto two = f.from_int(2);
      add("t^2 = y+3alpha1+2alpha2", t * t - y - k(f.add(f.mul(f.from_int(3), p.alpha1), f.mul(two, p.alpha2))));
      add("tv+^3+v+^3t = 2y^2-2beta y-beta^2",
          t * vp3 + vp3 * t - two * (y * y) + f.mul(two, beta) * y + k(f.mul(beta, beta)));
      add("v+^6 = y^3+beta^3", vp3 * vp3 - pow(y, 3) - k(f.pow(beta, 3)));
      add("v+^3 = v-^3", vp3 - pow(vm, 3));
    }
    return s;
  }

  if (id == "t-yrels" || id == "t-ore" || id == "t-d") {
    s.model = Model::T;
    auto ring = model_ring(Model::T, f);
    auto y = y_element(p, ring);
    if (id == "t-yrels") {
      auto gd = group_action(Model::T, ring)[3].spec;
      for (const char* x : {"a", "b", "c", "d"}) {
        auto g = ring->gen(x);
        add(std::string("y") + x + " = -(g_d." + x + ")y", y * g + apply_morphism(gd, g) * y);
      }
    } else if (id == "t-ore") {
      auto ore = ore_data(p, ring);
      auto d = ring->gen("d");
      for (const char* x : {"a", "b", "c"}) {
        auto g = ring->gen(x);
        add(std::string("d") + x + " = sigma(" + x + ")d + partial(" + x + ")",
            d * g - apply_morphism(ore.sigma, g) * d - apply_skew_derivation(ore.partial, g));
      }
    } else {
      auto d = ring->gen("d");
      auto k = [&](const typename F::Elem& x) { return ring->scalar(x); };
      auto t = derived_element("t", p, ring);
      auto vp3 = pow(derived_element("vplus", p, ring), 3);
      add("d^2 = alpha1", d * d - k(p.alpha1));
      add("dt+td = 2alpha2-y", d * t + t * d - k(f.mul(f.from_int(2), p.alpha2)) + y);
      add("dv+^3+v+^3d = 2y^2+beta^2", d * vp3 + vp3 * d - f.from_int(2) * (y * y) - k(f.mul(p.beta, p.beta)));
    }
    return s;
  }
  throw ModelError("unknown relation suite '" + std::string(id) + "'");
}

template <Field F>
RhoImage<F> rho_matrices(const ModelParams<F>& p) {
  const F& f = p.field;
  const auto& g = p.require_gamma();
  const auto& z = p.require_zeta();
  const auto& b = p.beta;
  const auto z2 = f.mul(z, z);
  const auto n2 = f.add(f.pow(g, 3), f.pow(b, 3));
  if (f.is_zero(n2)) throw ModelError("x2 is not invertible: gamma^3 + beta^3 = 0");

  auto q = quadratic_form(FormKind::Q_GAMMA, p);
  auto pres = clifford_presentation(q);
  auto cl = build_table(complete(pres));
  const auto& ring = pres.ring;
  auto x1 = cl.element(ring->gen("x1"));
  auto x2 = cl.element(ring->gen("x2"));
  auto x2inv = cl.scale(f.inv(n2), x2);
  if (cl.multiply(x2, x2inv) != cl.unit()) throw ModelError("x2 * x2^-1 != 1 in the Clifford algebra");

  const auto bz2g = f.add(b, f.mul(z2, g));  // beta + zeta^2 gamma
  const auto bzg = f.add(b, f.mul(z, g));    // beta + zeta gamma
  const auto bg = f.add(b, g);               // beta + gamma
  auto xp = cl.sub(cl.scale(f.neg(f.one()), x1), cl.scale(f.inv(bz2g), x2));
  auto xpp = cl.sub(cl.add(x1, cl.scale(f.inv(bz2g), x2)), cl.scale(f.inv(bg), x2));
  auto sc = [&](const typename F::Elem& c) { return cl.scalar(c); };

  auto mats = matrix_algebra(cl, 3);
  const std::size_t d = cl.dim();
  auto assemble = [&](const std::array<Element<F>, 9>& entries, const typename F::Elem& factor) {
    Element<F> m = mats.zero();
    for (std::size_t ij = 0; ij < 9; ++ij) {
      for (std::size_t k = 0; k < d; ++k) m[ij * d + k] = f.mul(factor, entries[ij][k]);
    }
    return m;
  };
  const auto third = f.inv(f.from_int(3));
  // row i of A, B, C differs only by powers of zeta: entry (i, j) picks up zeta^(j - i)
  auto abc = [&](const typename F::Elem& w) {
    auto w2 = f.mul(w, w);
    return std::array<Element<F>, 9>{
        x1,       sc(f.mul(w, bz2g)),   cl.scale(w2, x2),
        sc(w2),   xp,                   sc(f.mul(w, bg)),
        cl.scale(f.mul(w, bzg), x2inv), sc(w2), xpp};
  };
  RhoImage<F> r{cl, mats, {}, {}, {}, {}};
  r.A = assemble(abc(f.one()), third);
  r.B = assemble(abc(z), third);
  r.C = assemble(abc(z2), third);
  auto zero = cl.zero();
  r.Y = assemble({sc(g), zero, zero, zero, sc(f.mul(z, g)), zero, zero, zero, sc(f.mul(z2, g))}, f.one());
  return r;
}

#define NCFORGE_INSTANTIATE(F)                                                                                \
  template AlgebraPtr<F> model_ring(Model, const F&, std::size_t);                                           \
  template struct ModelParams<F>;                                                                             \
  template struct QuadraticForm<F>;                                                                           \
  template QuadraticForm<F> form_from_coefficients(const F&, std::size_t, const std::vector<F::Elem>&);      \
  template QuadraticForm<F> quadratic_form(FormKind, const ModelParams<F>&);                                  \
  template Presentation<F> clifford_presentation(const QuadraticForm<F>&);                                    \
  template Presentation<F> presentation(Model, const ModelParams<F>&, const QuadraticForm<F>*);               \
  template std::vector<NamedMorphism<F>> group_action(Model, const AlgebraPtr<F>&);                           \
  template NcPoly<F> derived_element(std::string_view, const ModelParams<F>&, const AlgebraPtr<F>&);          \
  template NcPoly<F> witness_element(const ModelParams<F>&, const AlgebraPtr<F>&, const F::Elem&);           \
  template OreData<F> ore_data(const ModelParams<F>&, const AlgebraPtr<F>&);                                  \
  template std::vector<NcPoly<F>> pbw_monomials(Model, const ModelParams<F>&, const AlgebraPtr<F>&);         \
  template std::vector<NcPoly<F>> b_sextic_forms(const AlgebraPtr<F>&);                                       \
  template RelationSuite<F> relation_suite(std::string_view, const ModelParams<F>&);                          \
  template RhoImage<F> rho_matrices(const ModelParams<F>&);

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
