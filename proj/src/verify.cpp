#include "ncforge/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ncforge/models.hpp"

namespace ncforge {

std::string Ratio::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

double ErrorBound::log10() const {
  return static_cast<double>(trials) *
         (std::log10(static_cast<double>(degree)) - std::log10(static_cast<double>(sample_size)));
}

std::string ErrorBound::exact() const {
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), degree, trials);
  mpz_ui_pow_ui(den.get_mpz_t(), sample_size, trials);
  mpq_class q(num, den);
  q.canonicalize();
  return q.get_str();
}

Status combine(const std::vector<PointReport>& points) {
  bool any_fail = false, any_pass = false;
  for (const auto& p : points) {
    if (p.status == Status::Error) return Status::Error;
    if (p.status == Status::Fail) any_fail = true;
    if (p.status == Status::Pass) any_pass = true;
  }
  if (any_fail) return Status::Fail;
  if (any_pass) return Status::Pass;
  return Status::Skipped;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "ncforge-report/1";
  j["check"] = check_id;
  j["summary"] = check_info(check_id).summary;
  j["status"] = status_name(status);
  j["config"] = config;
  std::map<Status, std::size_t> counts;
  Json skipped = Json::array();
  for (const auto& p : points) {
    ++counts[p.status];
    if (p.status == Status::Skipped) skipped.push_back({{"params", p.params}, {"reason", p.reason}});
  }
  j["counts"] = {{"pass", counts[Status::Pass]},
                 {"fail", counts[Status::Fail]},
                 {"skipped", counts[Status::Skipped]},
                 {"error", counts[Status::Error]}};
  j["skipped"] = skipped;
  if (error_bound) {
    j["error_bound"] = {{"degree", error_bound->degree},
                        {"sample_size", error_bound->sample_size},
                        {"trials", error_bound->trials},
                        {"log10", error_bound->log10()},
                        {"exact", error_bound->exact()}};
  }
  Json pts = Json::array();
  for (const auto& p : points) {
    Json q;
    q["params"] = p.params;
    q["status"] = status_name(p.status);
    if (!p.reason.empty()) q["reason"] = p.reason;
    q["details"] = p.details;
    pts.push_back(std::move(q));
  }
  j["points"] = std::move(pts);
  return j;
}

namespace {

/// Thrown inside a check when the point lies outside its domain.
struct Skip {
  std::string reason;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t point_seed(std::uint64_t seed, const GridPoint& pt) {
  std::uint64_t h = splitmix(seed);
  for (const auto& r : pt) {
    h = splitmix(h ^ static_cast<std::uint64_t>(r.num));
    h = splitmix(h ^ static_cast<std::uint64_t>(r.den));
  }
  return h;
}

std::int64_t random_bound(const CheckConfig& cfg) {
  // rationals grow quickly in 72-dimensional tables; keep their samples small
  if (cfg.field.characteristic == 0) return 64;
  std::int64_t cap = std::int64_t{1} << 15;
  return std::min<std::int64_t>(cap, static_cast<std::int64_t>((cfg.field.characteristic - 1) / 2));
}

Ratio random_ratio(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  return {dist(rng), 1};
}

template <Field F>
F make_field(const FieldSpec& spec) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return PrimeField(spec.characteristic);
  } else {
    return RationalField{};
  }
}

template <Field F>
struct Ctx {
  F field;
  const CheckConfig& cfg;
  std::map<std::string, RewriteSystem<F>> systems;
  std::map<std::string, AlgebraTable<F>> tables;

  using Elem = typename F::Elem;

  Elem value(const Ratio& r) const { return field.from_ratio(r.num, r.den); }

  static std::string key(const Presentation<F>& p) {
    std::string k = p.label;
    for (const auto& r : p.relations) k += "|" + r.to_string();
    return k;
  }

  const RewriteSystem<F>& system(const Presentation<F>& p) {
    auto k = key(p);
    auto it = systems.find(k);
    if (it == systems.end()) it = systems.emplace(k, complete(p, cfg.degree_bound, cfg.max_rules)).first;
    return it->second;
  }

  const AlgebraTable<F>& table(const Presentation<F>& p) {
    auto k = key(p);
    auto it = tables.find(k);
    if (it == tables.end()) it = tables.emplace(k, build_table(system(p))).first;
    return it->second;
  }
};

template <Field F>
using PointFn = void (*)(Ctx<F>&, const GridPoint&, PointReport&);

void expect(PointReport& out, const std::string& name, bool ok) {
  if (!out.details.contains("assertions")) out.details["assertions"] = Json::object();
  out.details["assertions"][name] = ok;
  if (!ok && out.status == Status::Pass) out.status = Status::Fail;
}

template <Field F>
ModelParams<F> params_of(Ctx<F>& ctx, const GridPoint& pt) {
  const F& f = ctx.field;
  switch (pt.size()) {
    case 0: return ModelParams<F>::make(f, f.zero(), f.zero());
    case 2: return ModelParams<F>::make(f, ctx.value(pt[0]), ctx.value(pt[1]));
    default: return ModelParams<F>::make(f, ctx.value(pt[0]), ctx.value(pt[1]), ctx.value(pt[2]));
  }
}

/// Points whose third coordinate is gamma rather than alpha3.
template <Field F>
ModelParams<F> gamma_params(Ctx<F>& ctx, const GridPoint& pt) {
  return ModelParams<F>::with_gamma(ctx.field, ctx.value(pt[0]), ctx.value(pt[1]), ctx.value(pt[2]));
}

template <Field F>
Json words_json(const Alphabet& alphabet, const std::vector<Word>& ws) {
  Json j = Json::array();
  for (const auto& w : ws) j.push_back(alphabet.format(w));
  return j;
}

template <Field F>
Json rules_json(const RewriteSystem<F>& rs) {
  Json j = Json::array();
  for (const auto& r : rs.rules()) {
    j.push_back(rs.ring()->alphabet().format(r.lead) + " -> " + r.tail.to_string());
  }
  return j;
}

template <Field F>
void require_certified(const RewriteSystem<F>& rs, PointReport& out) {
  out.details["rules"] = rs.rules().size();
  expect(out, "groebner basis certified", rs.certified());
}

template <Field F>
std::vector<Element<F>> to_elements(const AlgebraTable<F>& t, const std::vector<NcPoly<F>>& ps) {
  std::vector<Element<F>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(t.element(p));
  return out;
}

template <Field F>
std::size_t span_dim(const AlgebraTable<F>& t, const std::vector<Element<F>>& xs) {
  return Subspace<F>::span(t.field(), t.dim(), xs).dim();
}

std::vector<std::size_t> poly_product(const std::vector<std::vector<std::size_t>>& factors) {
  std::vector<std::size_t> acc{1};
  for (const auto& g : factors) {
    std::vector<std::size_t> next(acc.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) next[i + j] += acc[i] * g[j];
    }
    acc = std::move(next);
  }
  return acc;
}

template <Field F>
void run_suite(Ctx<F>& ctx, const RewriteSystem<F>& rs, std::string_view id, const ModelParams<F>& p,
               PointReport& out) {
  auto suite = relation_suite(id, p);
  Json failures = Json::array();
  for (std::size_t i = 0; i < suite.polys.size(); ++i) {
    auto nf = normal_form(rs, suite.polys[i]);
    if (!nf.is_zero()) failures.push_back(suite.labels[i] + " leaves " + nf.to_string());
  }
  (void)ctx;
  out.details["suite " + std::string(id)] = {{"identities", suite.polys.size()}, {"failures", failures}};
  expect(out, "suite " + std::string(id) + " reduces to 0", failures.empty() && rs.certified());
}

const char* const kE3Words[] = {"1", "a", "b", "c", "ab", "ac", "ba", "bc", "aba", "abc", "bac", "abac"};

template <Field F>
bool words_match_e3(const Alphabet& alphabet, const std::vector<Word>& ws) {
  std::set<std::string> got, want(std::begin(kE3Words), std::end(kE3Words));
  for (const auto& w : ws) got.insert(alphabet.format(w));
  return got == want && ws.size() == want.size();
}

// ---------------------------------------------------------------- D3 family

template <Field F>
void check_e3_basis(Ctx<F>& ctx, const GridPoint&, PointReport& out) {
  auto p = ModelParams<F>::make(ctx.field, ctx.field.zero(), ctx.field.zero());
  auto pres = presentation(Model::E3, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  out.details["rule_list"] = rules_json(rs);
  expect(out, "finite dimensional", is_finite_dimensional(rs));
  auto ws = normal_words(rs, std::nullopt);
  out.details["normal_words"] = words_json<F>(pres.ring->alphabet(), ws);
  expect(out, "normal words are the listed basis", words_match_e3<F>(pres.ring->alphabet(), ws));
  auto h = hilbert_series(rs, 4);
  out.details["hilbert"] = h;
  expect(out, "hilbert series (1+t)^2(1+t+t^2)", h == poly_product({{1, 1}, {1, 1}, {1, 1, 1}}));
  expect(out, "dimension 12", ws.size() == 12);
}

template <Field F>
void check_d3_gbasis(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::D3, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  out.details["rule_list"] = rules_json(rs);
  const auto& ring = pres.ring;
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  auto k = [&](const typename F::Elem& x) { return ring->scalar(x); };
  std::vector<NcPoly<F>> expected{a * a - k(p.alpha1),
                                  b * b - k(p.alpha1),
                                  c * c - k(p.alpha1),
                                  c * a + b * c + a * b - k(p.alpha2),
                                  c * b + b * a + a * c - k(p.alpha2),
                                  b * a * b - a * b * a - p.alpha2 * b + p.alpha2 * a};
  bool all = rs.rules().size() == expected.size();
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& r : rs.rules()) {
      if (r.lead == e.leading_word()) found = (r.as_relation() == e);
    }
    all = all && found;
  }
  expect(out, "reduced groebner basis equals the six listed relations", all);
}

template <Field F>
void check_d3_flatness(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::D3, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  expect(out, "finite dimensional", is_finite_dimensional(rs));
  auto ws = normal_words(rs, std::nullopt);
  out.details["dimension"] = ws.size();
  expect(out, "dimension 12", ws.size() == 12);
  expect(out, "normal words equal those of E3", words_match_e3<F>(pres.ring->alphabet(), ws));
  const auto& t = ctx.table(pres);
  auto pbw = pbw_monomials(Model::D3, p, pres.ring);
  auto r = span_dim(t, to_elements(t, pbw));
  out.details["pbw_rank"] = r;
  expect(out, "PBW monomials (a-b)^i a^j c^k form a basis", pbw.size() == 12 && r == 12);
}

template <Field F>
void check_d3_semisimple(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  bool ss = is_semisimple(t);
  bool predicted = !f.is_zero(f.mul(p.beta, f.add(p.alpha1, p.alpha2)));
  out.details["semisimple"] = ss;
  out.details["predicted"] = predicted;
  out.details["radical_dim"] = radical(t).dim();
  out.details["center_dim"] = center(t).dim();
  expect(out, "semisimple iff (3a1-a2)(a1+a2) != 0", ss == predicted);
  if (ss) expect(out, "center has dimension 3", center(t).dim() == 3);
}

template <Field F>
void check_d3_degenerate(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  bool beta_zero = f.is_zero(p.beta);
  bool sum_zero = f.is_zero(f.add(p.alpha1, p.alpha2));
  if (!beta_zero && !sum_zero) throw Skip{"not on a degenerate locus"};
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  auto rad = radical(t);
  out.details["radical_dim"] = rad.dim();
  if (beta_zero) {
    out.details["locus"] = "alpha2 = 3 alpha1";
    std::vector<Element<F>> gens{t.element(derived_element("u", p, ring)), t.element(derived_element("v", p, ring))};
    auto ideal = two_sided_ideal(t, gens);
    Subspace<F> left(f, t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (const auto& g : gens) left.insert(t.multiply(t.basis_element(i), g));
    }
    out.details["ideal_dim"] = ideal.dim();
    expect(out, "left ideal L generated by a-b, b-c is two-sided", left == ideal);
    expect(out, "L has dimension 10", ideal.dim() == 10);
    auto nil = nilpotency_index(t, ideal);
    out.details["nilpotency_index"] = nil ? Json(*nil) : Json(nullptr);
    expect(out, "L is nilpotent", nil.has_value());
    if (!f.is_zero(p.alpha1)) {
      expect(out, "radical equals L", rad == ideal);
    } else {
      // a^2 = 0 in the quotient, so the radical is one dimension larger
      expect(out, "radical strictly contains L with dimension 11", rad.contains(ideal) && rad.dim() == 11);
    }
    return;
  }
  out.details["locus"] = "alpha1 + alpha2 = 0";
  expect(out, "radical is nonzero", rad.dim() > 0);
  auto e3 = t.element(derived_element("e3", p, ring));
  auto cor = corner(t, e3);
  expect(out, "corner e3 D3 e3 has dimension 4", cor.dim() == 4);
  auto crad = radical(cor);
  out.details["corner_radical_dim"] = crad.dim();
  auto q = quadratic_form(FormKind::FK3_CORNER, p);
  auto kern = kernel(q.gram);
  out.details["form_radical_dim"] = kern.size();
  expect(out, "rad(B_q) has dimension 1", kern.size() == 1);
  Coordinates<F> coords(f, cor.embedding());
  auto X = t.multiply(e3, t.element(ring->gen("a")));
  auto Z = t.multiply(e3, t.element(ring->gen("c")));
  std::vector<Element<F>> images;
  for (const auto& v : kern) {
    auto img = t.add(t.scale(v[0], X), t.scale(v[1], Z));
    auto c = coords.of(img);
    if (!c) throw StructureError("image of rad(B_q) left the corner");
    images.push_back(*c);
  }
  auto generated = two_sided_ideal(cor, images);
  out.details["generated_ideal_dim"] = generated.dim();
  expect(out, "corner radical is generated by rad(B_q)", generated == crad);
  expect(out, "radical of D3 is three copies of the corner radical", rad.dim() == 3 * crad.dim());
}

template <Field F>
void check_d3_idempotents(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  if (f.is_zero(p.beta)) throw Skip{"3 alpha1 - alpha2 = 0"};
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  std::vector<NcPoly<F>> polys;
  std::vector<Element<F>> e;
  for (const char* n : {"e1", "e2", "e3"}) {
    polys.push_back(derived_element(n, p, ring));
    e.push_back(t.element(polys.back()));
  }
  bool alt = true, idem = true, orth = true, central = true, nonzero = true;
  for (std::size_t i = 0; i < 3; ++i) {
    std::string name = "e" + std::to_string(i + 1);
    alt = alt && t.element(derived_element(name + "alt", p, ring)) == e[i];
    idem = idem && t.multiply(e[i], e[i]) == e[i];
    nonzero = nonzero && !t.is_zero(e[i]);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) orth = orth && t.is_zero(t.multiply(e[i], e[j]));
    }
    for (const char* g : {"a", "b", "c"}) {
      central = central && t.is_zero(commutator(t, e[i], t.element(ring->gen(g))));
    }
  }
  out.details["e1"] = t.format(e[0]);
  out.details["e2"] = t.format(e[1]);
  out.details["e3"] = t.format(e[2]);
  expect(out, "both formulas agree", alt);
  expect(out, "idempotent", idem);
  expect(out, "nonzero", nonzero);
  expect(out, "pairwise orthogonal", orth);
  expect(out, "central", central);
  expect(out, "sum to 1", t.add(t.add(e[0], e[1]), e[2]) == t.unit());
  auto act = group_action(Model::D3, ring);
  // (12) swaps e1 and e2, (23) swaps e2 and e3
  expect(out, "(12) e2 = e1", t.element(apply_morphism(act[0].spec, polys[1])) == e[0]);
  expect(out, "(23) e2 = e3", t.element(apply_morphism(act[1].spec, polys[1])) == e[2]);
}

template <Field F>
void check_d3_corner_clifford(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  if (f.is_zero(p.beta)) throw Skip{"3 alpha1 - alpha2 = 0"};
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  auto e3 = t.element(derived_element("e3", p, ring));
  auto cor = corner(t, e3);
  out.details["corner_dim"] = cor.dim();
  expect(out, "corner has dimension 4", cor.dim() == 4);
  auto X = t.multiply(e3, t.element(ring->gen("a")));
  auto Z = t.multiply(e3, t.element(ring->gen("c")));
  auto sq = [&](const Element<F>& x) { return t.multiply(x, x); };
  expect(out, "X^2 = alpha1 e3", sq(X) == t.scale(p.alpha1, e3));
  expect(out, "Z^2 = alpha1 e3", sq(Z) == t.scale(p.alpha1, e3));
  expect(out, "XZ + ZX = (alpha2 - alpha1) e3",
         t.add(t.multiply(X, Z), t.multiply(Z, X)) == t.scale(f.sub(p.alpha2, p.alpha1), e3));
  expect(out, "(X - Z)^2 = beta e3", sq(t.sub(X, Z)) == t.scale(p.beta, e3));
  expect(out, "e3 (a - b) = 0", t.is_zero(t.multiply(e3, t.element(derived_element("u", p, ring)))));
  // 1, x1, x2, x1x2 of the Clifford algebra map to a basis of the corner
  auto r = span_dim(t, {e3, X, Z, t.multiply(X, Z)});
  expect(out, "e3, X, Z, XZ are linearly independent", r == 4);
  auto q = quadratic_form(FormKind::FK3_CORNER, p);
  auto qr = rank(q.gram);
  bool cor_ss = is_semisimple(cor);
  out.details["form_rank"] = qr;
  out.details["corner_semisimple"] = cor_ss;
  expect(out, "corner semisimple iff q nondegenerate", cor_ss == (qr == 2));
  expect(out, "q degenerate iff (3a1-a2)(a1+a2) = 0",
         (qr < 2) == f.is_zero(f.mul(p.beta, f.add(p.alpha1, p.alpha2))));
  auto cl = build_table(complete(clifford_presentation(q), ctx.cfg.degree_bound, ctx.cfg.max_rules));
  expect(out, "Clifford algebra has dimension 4", cl.dim() == 4);
  expect(out, "Clifford and corner radicals agree in dimension", radical(cl).dim() == radical(cor).dim());
}

template <Field F>
std::pair<std::size_t, std::optional<std::size_t>> hall_trials(const AlgebraTable<F>& t, std::size_t trials,
                                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const F& f = t.field();
  auto rnd = [&] {
    Element<F> x = t.zero();
    for (auto& c : x) c = f.random(rng);
    return x;
  };
  std::size_t nonzero = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < trials; ++i) {
    auto x = rnd(), y = rnd(), z = rnd();
    if (!t.is_zero(hall_value(t, x, y, z))) {
      ++nonzero;
      if (!first) first = i;
    }
  }
  return {nonzero, first};
}

template <Field F>
void check_pi_hall(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  auto [nonzero, first] = hall_trials(t, ctx.cfg.trials, point_seed(ctx.cfg.seed, pt));
  out.details["trials"] = ctx.cfg.trials;
  out.details["nonzero"] = nonzero;
  if (first) out.details["first_nonzero_trial"] = *first;
  expect(out, "[[x,y]^2, z] vanishes at every sampled triple", nonzero == 0);
}

// ---------------------------------------------------------------- K family

template <Field F>
void check_k_relations(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::K, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  run_suite(ctx, rs, "k-abcy", p, out);
  if (!p.zeta) {
    if (out.status == Status::Pass) {
      out.status = Status::Skipped;
      out.reason = "suites k-u1v1 and k-uv need a primitive cube root of unity";
    }
    return;
  }
  run_suite(ctx, rs, "k-u1v1", p, out);
  run_suite(ctx, rs, "k-uv", p, out);
}

template <Field F>
void check_k_dim(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::K3, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  expect(out, "finite dimensional", is_finite_dimensional(rs));
  auto ws = normal_words(rs, std::nullopt);
  out.details["dimension"] = ws.size();
  expect(out, "dimension 36", ws.size() == 36);
  const auto& t = ctx.table(pres);
  auto pbw = pbw_monomials(Model::K3, p, pres.ring);
  auto r = span_dim(t, to_elements(t, pbw));
  out.details["pbw_rank"] = r;
  expect(out, "PBW monomials (a-b)^i a^j c^k y^l form a basis", pbw.size() == 36 && r == 36);
}

template <Field F>
void check_k_rho(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = gamma_params(ctx, pt);
  if (!p.zeta) throw Skip{"needs a primitive cube root of unity"};
  const auto& g = *p.gamma;
  auto g3 = f.pow(g, 3);
  if (f.is_zero(f.add(g3, f.pow(p.beta, 3)))) {
    bool rejected = false;
    try {
      rho_matrices(p);
    } catch (const ModelError&) {
      rejected = true;
    }
    if (!rejected) {
      expect(out, "construction rejected when gamma^3 + beta^3 = 0", false);
      return;
    }
    throw Skip{"gamma^3 + beta^3 = 0: x2 is not invertible"};
  }
  auto rho = rho_matrices(p);
  const auto& M = rho.matrices;
  auto mul = [&](const Element<F>& x, const Element<F>& y) { return M.multiply(x, y); };
  auto s = [&](const typename F::Elem& c) { return M.scalar(c); };
  expect(out, "A^2 = alpha1", mul(rho.A, rho.A) == s(p.alpha1));
  expect(out, "B^2 = alpha1", mul(rho.B, rho.B) == s(p.alpha1));
  expect(out, "C^2 = alpha1", mul(rho.C, rho.C) == s(p.alpha1));
  auto abc = M.add(M.add(mul(rho.A, rho.B), mul(rho.B, rho.C)), mul(rho.C, rho.A));
  auto acb = M.add(M.add(mul(rho.A, rho.C), mul(rho.C, rho.B)), mul(rho.B, rho.A));
  expect(out, "AB + BC + CA = alpha2", abc == s(p.alpha2));
  expect(out, "AC + CB + BA = alpha2 + Y", acb == M.add(s(p.alpha2), rho.Y));
  expect(out, "Y^3 = gamma^3", M.power(rho.Y, 3) == s(g3));
  auto sub = subalgebra_with_unit(M, {rho.A, rho.B, rho.C});
  auto q = quadratic_form(FormKind::Q_GAMMA, p);
  // discriminant of the binary form q11 l1^2 + 2 q12' l1 l2 + q22 l2^2 is -4 det
  auto det = f.sub(f.mul(q.gram(0, 0), q.gram(1, 1)), f.mul(q.gram(0, 1), q.gram(1, 0)));
  auto disc = f.mul(f.from_int(-4), det);
  auto cond = f.mul(g, f.add(f.mul(f.from_int(4), f.mul(p.alpha1, g3)),
                             f.mul(f.pow(p.beta, 3), f.add(p.alpha1, p.alpha2))));
  out.details["subalgebra_dim"] = sub.dim();
  out.details["discriminant"] = display(f, disc);
  out.details["clifford_dim"] = rho.clifford.dim();
  expect(out, "discriminant matches the printed formula", q.discriminant && *q.discriminant == disc);
  expect(out, "Clifford algebra semisimple iff discriminant != 0",
         is_semisimple(rho.clifford) == !f.is_zero(disc));
  if (!f.is_zero(cond)) {
    expect(out, "A, B, C generate all of M3(C)", sub.dim() == 36);
  } else {
    out.details["simple_module_condition"] = "fails; subalgebra dimension recorded only";
  }
}

template <Field F>
typename F::Elem lambda_candidate(const F& f, std::size_t k) {
  // 0, 1, -1, 2, -2, ...
  std::int64_t m = static_cast<std::int64_t>((k + 1) / 2);
  return f.from_int(k % 2 == 1 ? m : -m);
}

template <Field F>
void check_k_peirce(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = gamma_params(ctx, pt);
  if (!p.zeta) throw Skip{"needs a primitive cube root of unity"};
  const auto& g = *p.gamma;
  if (f.is_zero(g)) throw Skip{"gamma = 0"};
  auto pres = presentation(Model::K3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  auto el = [&](std::string_view n) { return t.element(derived_element(n, p, ring)); };
  auto e = el("ey"), y = t.element(ring->gen("y"));
  expect(out, "e is idempotent", t.multiply(e, e) == e);
  expect(out, "y e = gamma e", t.multiply(y, e) == t.scale(g, e));
  expect(out, "e is primitive in K[y]", span_dim(t, {e, t.multiply(y, e), t.multiply(t.multiply(y, y), e)}) == 1);
  auto cor = corner(t, e);
  out.details["corner_dim"] = cor.dim();
  expect(out, "eKe has dimension 4", cor.dim() == 4);
  auto q = quadratic_form(FormKind::Q_GAMMA, p);
  auto X1 = t.multiply(e, el("t"));
  auto X2 = t.multiply(e, t.power(el("vplus"), 3));
  auto sq = [&](const Element<F>& x) { return t.multiply(x, x); };
  expect(out, "X1^2 = q(x1) e", sq(X1) == t.scale(q.gram(0, 0), e));
  expect(out, "X2^2 = q(x2) e", sq(X2) == t.scale(q.gram(1, 1), e));
  expect(out, "X1X2 + X2X1 = 2B(x1,x2) e",
         t.add(t.multiply(X1, X2), t.multiply(X2, X1)) == t.scale(f.mul(f.from_int(2), q.gram(0, 1)), e));
  Coordinates<F> coords(f, cor.embedding());
  auto in_corner = [&](const Element<F>& x) {
    auto c = coords.of(x);
    if (!c) throw StructureError("element left the corner");
    return *c;
  };
  auto gen = subalgebra_with_unit(cor, {in_corner(X1), in_corner(X2)});
  expect(out, "X1, X2 generate eKe", gen.dim() == 4);

  std::optional<Element<F>> x, xinv;
  typename F::Elem lambda = f.zero();
  for (std::size_t k = 0; k < 64 && !x; ++k) {
    lambda = lambda_candidate(f, k);
    auto cand = t.element(witness_element(p, ring, lambda));
    if (auto inv = inverse_element(t, cand)) {
      x = cand;
      xinv = *inv;
    }
  }
  expect(out, "invertible witness v+ + lambda v-^2 found", x.has_value());
  if (!x) return;
  out.details["lambda"] = display(f, lambda);
  expect(out, "y x = zeta x y", t.multiply(y, *x) == t.scale(*p.zeta, t.multiply(*x, y)));
  std::vector<Element<F>> powers{t.unit(), *x, t.multiply(*x, *x)};
  Subspace<F> total(f, t.dim());
  std::size_t sum = 0;
  Json piece_dims = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<Element<F>> piece;
      for (const auto& b : cor.embedding()) piece.push_back(t.multiply(t.multiply(powers[i], b), powers[j]));
      auto d = span_dim(t, piece);
      piece_dims.push_back(d);
      sum += d;
      for (const auto& v : piece) total.insert(v);
    }
  }
  out.details["piece_dims"] = piece_dims;
  expect(out, "nine pieces x^i eKe x^j have dimension 4 each and sum directly to K", sum == 36 && total.dim() == 36);
  auto rad = radical(t).dim(), crad = radical(cor).dim();
  out.details["radical_dim"] = rad;
  out.details["corner_radical_dim"] = crad;
  expect(out, "dim Rad K = 9 dim Rad eKe", rad == 9 * crad);
  auto det = f.sub(f.mul(q.gram(0, 0), q.gram(1, 1)), f.mul(q.gram(0, 1), q.gram(1, 0)));
  expect(out, "K semisimple iff q_gamma nondegenerate", (rad == 0) == !f.is_zero(det));
}

// ---------------------------------------------------------------- T and B

const std::vector<std::size_t> kTHilbert{1, 4, 8, 11, 12, 12, 11, 8, 4, 1};

template <Field F>
void check_t_hilbert(Ctx<F>& ctx, const GridPoint&, PointReport& out) {
  auto p = ModelParams<F>::make(ctx.field, ctx.field.zero(), ctx.field.zero());
  auto pres = presentation(Model::B, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  out.details["rule_list"] = rules_json(rs);
  expect(out, "finite dimensional", is_finite_dimensional(rs));
  auto h = hilbert_series(rs, 9);
  std::size_t dim = normal_words(rs, std::nullopt).size();
  out.details["hilbert"] = h;
  out.details["dimension"] = dim;
  expect(out, "hilbert series of B matches the listed coefficients", h == kTHilbert);
  expect(out, "hilbert series equals (1+t)^3(1+t+t^2)(1+t^2+t^4)",
         h == poly_product({{1, 1}, {1, 1}, {1, 1}, {1, 1, 1}, {1, 0, 1, 0, 1}}));
  expect(out, "B has dimension 72", dim == 72);
  auto t0 = presentation(Model::T, p);
  const auto& rs0 = ctx.system(t0);
  expect(out, "T(0,0,0) is certified", rs0.certified());
  expect(out, "T(0,0,0) has the same hilbert series", hilbert_series(rs0, 9) == kTHilbert);
}

template <Field F>
void check_t_dim(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto pres = presentation(Model::T, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  expect(out, "finite dimensional", is_finite_dimensional(rs));
  auto ws = normal_words(rs, std::nullopt);
  out.details["dimension"] = ws.size();
  expect(out, "dimension 72", ws.size() == 72);
  const auto& t = ctx.table(pres);
  auto pbw = pbw_monomials(Model::T, p, pres.ring);
  auto r = span_dim(t, to_elements(t, pbw));
  out.details["pbw_rank"] = r;
  expect(out, "PBW monomials (b-a)^i a^j c^k y^l d^m form a basis", pbw.size() == 72 && r == 72);
}

template <Field F>
void check_b_sextic(Ctx<F>& ctx, const GridPoint&, PointReport& out) {
  auto p = ModelParams<F>::make(ctx.field, ctx.field.zero(), ctx.field.zero());
  auto base = presentation(Model::B, p);
  base.relations.pop_back();  // the quadratic relations only
  auto forms = b_sextic_forms(base.ring);
  std::vector<RewriteSystem<F>> systems;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto pres = base;
    pres.relations.push_back(forms[i]);
    pres.label = "B-form" + std::to_string(i);
    systems.push_back(ctx.system(pres));
    expect(out, "form " + std::to_string(i + 1) + " certified", systems.back().certified());
    expect(out, "form " + std::to_string(i + 1) + " gives dimension 72",
           normal_words(systems.back(), std::nullopt).size() == 72);
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (i == j) continue;
      expect(out, "form " + std::to_string(j + 1) + " lies in the ideal of form " + std::to_string(i + 1),
             contains(systems[i], forms[j]));
    }
  }
}

template <Field F>
void check_t_semisimple(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  if (!p.gamma) throw Skip{"alpha3 has no cube root in " + f.name()};
  auto pres = presentation(Model::T, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  bool ss = is_semisimple(t);
  auto factor = f.add(p.alpha3, f.mul(f.add(p.alpha1, p.alpha2), f.mul(p.beta, p.beta)));
  bool predicted = !f.is_zero(f.mul(p.alpha3, factor));
  out.details["semisimple"] = ss;
  out.details["predicted"] = predicted;
  out.details["radical_dim"] = radical(t).dim();
  expect(out, "semisimple iff alpha3 (alpha3 + (alpha1+alpha2) beta^2) != 0", ss == predicted);
  if (ss) {
    auto z = center(t).dim();
    out.details["center_dim"] = z;
    expect(out, "center has dimension 2", z == 2);
  }
  if (f.is_zero(*p.gamma)) return;
  // q'_gamma only describes the corner when gamma != 0
  auto qp = quadratic_form(FormKind::QPRIME_GAMMA, p);
  auto qr = rank(qp.gram);
  out.details["qprime_rank"] = qr;
  expect(out, "q'_gamma nondegenerate iff alpha3 + (alpha1+alpha2) beta^2 != 0", (qr == 3) == !f.is_zero(factor));
  if (!p.zeta) {
    out.details["corner"] = "not computed (needs a primitive cube root of unity)";
    return;
  }
  const auto& ring = pres.ring;
  auto el = [&](std::string_view n) { return t.element(derived_element(n, p, ring)); };
  auto e = el("ey");
  auto cor = corner(t, e);
  out.details["corner_dim"] = cor.dim();
  expect(out, "eTe has dimension 8", cor.dim() == 8);
  std::vector<Element<F>> X{t.multiply(e, el("t")), t.multiply(e, t.power(el("vplus"), 3)),
                            t.multiply(e, t.element(ring->gen("d")))};
  bool rel = true;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      auto lhs = t.add(t.multiply(X[i], X[j]), t.multiply(X[j], X[i]));
      rel = rel && lhs == t.scale(f.mul(f.from_int(2), qp.gram(i, j)), e);
    }
  }
  expect(out, "et, ev+^3, ed satisfy the Clifford relations of q'_gamma", rel);
  Coordinates<F> coords(f, cor.embedding());
  std::vector<Element<F>> cx;
  for (const auto& x : X) {
    auto c = coords.of(x);
    if (!c) throw StructureError("element left the corner");
    cx.push_back(*c);
  }
  expect(out, "they generate eTe", subalgebra_with_unit(cor, cx).dim() == 8);
  bool css = is_semisimple(cor);
  expect(out, "eTe semisimple iff q'_gamma nondegenerate", css == (qr == 3));
  expect(out, "T semisimple iff eTe semisimple", css == ss);
}

// ---------------------------------------------------------------- structure maps

template <Field F>
void check_ore(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto kpres = presentation(Model::K, p);
  auto k3pres = presentation(Model::K3, p);
  const auto& rk = ctx.system(kpres);
  const auto& rk3 = ctx.system(k3pres);
  require_certified(rk, out);
  expect(out, "K3 certified", rk3.certified());
  auto ore = ore_data(p, kpres.ring);
  bool sig = true, der = true, sig3 = true, der3 = true;
  for (const auto& r : kpres.relations) {
    sig = sig && contains(rk, apply_morphism(ore.sigma, r));
    der = der && contains(rk, apply_skew_derivation(ore.partial, r));
  }
  for (const auto& r : k3pres.relations) {
    sig3 = sig3 && contains(rk3, apply_morphism(ore.sigma, r));
    der3 = der3 && contains(rk3, apply_skew_derivation(ore.partial, r));
  }
  expect(out, "sigma preserves the ideal of K", sig);
  expect(out, "partial maps the relations of K into its ideal", der);
  expect(out, "sigma preserves the ideal of K(alpha3)", sig3);
  expect(out, "partial maps the relations of K(alpha3) into its ideal", der3);
  auto s6 = ore.sigma;
  for (int i = 1; i < 6; ++i) s6 = compose(ore.sigma, s6);
  auto s3 = compose(ore.sigma, compose(ore.sigma, ore.sigma));
  bool order = true, cube = true;
  for (std::size_t i = 0; i < kpres.ring->num_generators(); ++i) {
    auto x = kpres.ring->gen(static_cast<Letter>(i));
    order = order && s6.images[i] == x;
    if (kpres.ring->alphabet().names()[i] != "y") cube = cube && s3.images[i] == -x;
  }
  expect(out, "sigma^6 = id", order);
  expect(out, "sigma^3 = -id on a, b, c", cube);
  auto tpres = presentation(Model::T, p);
  const auto& rt = ctx.system(tpres);
  expect(out, "T certified", rt.certified());
  run_suite(ctx, rt, "t-ore", p, out);
  if (p.zeta) run_suite(ctx, rt, "t-d", p, out);
  if (rk3.certified() && rt.certified()) {
    auto dk = normal_words(rk3, std::nullopt).size(), dt = normal_words(rt, std::nullopt).size();
    out.details["dims"] = {{"K", dk}, {"T", dt}};
    expect(out, "dim T = 2 dim K(alpha3)", dt == 2 * dk);
  }
}

template <Field F>
void check_equivariance(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  auto p = params_of(ctx, pt);
  auto dpres = presentation(Model::D3, p);
  const auto& rd = ctx.system(dpres);
  require_certified(rd, out);
  for (const auto& g : group_action(Model::D3, dpres.ring)) {
    bool ok = true;
    for (const auto& r : dpres.relations) ok = ok && contains(rd, apply_morphism(g.spec, r));
    expect(out, "S3 generator " + g.name + " preserves the ideal of D3", ok);
  }
  auto tpres = presentation(Model::T, p);
  const auto& rt = ctx.system(tpres);
  expect(out, "T certified", rt.certified());
  const auto& ring = tpres.ring;
  auto act = group_action(Model::T, ring);
  for (const auto& g : act) {
    bool ok = true;
    for (const auto& r : tpres.relations) ok = ok && contains(rt, apply_morphism(g.spec, r));
    expect(out, g.name + " preserves the ideal of T", ok);
  }
  // chains g h = h k = k g of the group relations; index order a b c d
  const std::vector<std::array<int, 3>> chains{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  for (const auto& ch : chains) {
    auto prod = [&](int x, int y) { return compose(act[x].spec, act[y].spec); };
    auto m1 = prod(ch[0], ch[1]), m2 = prod(ch[1], ch[2]), m3 = prod(ch[2], ch[0]);
    bool ok = true;
    for (std::size_t i = 0; i < ring->num_generators(); ++i) {
      ok = ok && m1.images[i] == m2.images[i] && m2.images[i] == m3.images[i];
    }
    expect(out, act[ch[0]].name + act[ch[1]].name + " = " + act[ch[1]].name + act[ch[2]].name + " = " +
                    act[ch[2]].name + act[ch[0]].name,
           ok);
  }
  auto gd2 = compose(act[3].spec, act[3].spec);
  auto a = ring->gen("a"), b = ring->gen("b"), c = ring->gen("c");
  expect(out, "g_d^2 cycles a -> b -> c -> a",
         apply_morphism(gd2, a) == b && apply_morphism(gd2, b) == c && apply_morphism(gd2, c) == a);
  auto y = derived_element("y", p, ring);
  expect(out, "g_d fixes y", contains(rt, apply_morphism(act[3].spec, y) - y));
  run_suite(ctx, rt, "t-yrels", p, out);
}

// ---------------------------------------------------------------- FK3

template <Field F>
void check_fk3_preprojective(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  if (!f.is_zero(f.add(p.alpha1, p.alpha2)) || f.is_zero(p.alpha1)) {
    throw Skip{"needs alpha2 = -alpha1 != 0"};
  }
  auto s = f.square_root(p.alpha1);
  if (!s) throw Skip{"alpha1 is not a square in " + f.name()};
  auto pres = presentation(Model::D3, p);
  require_certified(ctx.system(pres), out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  auto e3 = derived_element("e3", p, ring);
  auto x = e3 * ring->gen("a");
  auto half = f.inv(f.from_int(2));
  auto g1 = half * (e3 + f.inv(*s) * x);
  auto g2 = half * (e3 - f.inv(*s) * x);
  auto r = e3 * ring->gen("a") + e3 * ring->gen("c");
  auto arr = g1 * r * g2, arr_star = g2 * r * g1;
  auto act = group_action(Model::D3, ring);
  const auto& s12 = act[0].spec;
  const auto& s23 = act[1].spec;
  std::vector<std::pair<std::string, MorphismSpec<F>>> moves{
      {"e3", MorphismSpec<F>::identity(ring)}, {"e2", s23}, {"e1", compose(s12, s23)}};
  std::vector<Element<F>> all;
  for (const auto& [name, m] : moves) {
    auto G1 = t.element(apply_morphism(m, g1)), G2 = t.element(apply_morphism(m, g2));
    auto A = t.element(apply_morphism(m, arr)), As = t.element(apply_morphism(m, arr_star));
    auto E = t.element(apply_morphism(m, e3));
    auto mul = [&](const Element<F>& u, const Element<F>& v) { return t.multiply(u, v); };
    expect(out, name + ": g1, g2 orthogonal idempotents summing to " + name,
           mul(G1, G1) == G1 && mul(G2, G2) == G2 && t.is_zero(mul(G1, G2)) && t.is_zero(mul(G2, G1)) &&
               t.add(G1, G2) == E);
    expect(out, name + ": arrows nonzero", !t.is_zero(A) && !t.is_zero(As));
    expect(out, name + ": arrows go g1 -> g2 and g2 -> g1", mul(mul(G1, A), G2) == A && mul(mul(G2, As), G1) == As);
    expect(out, name + ": preprojective relations", t.is_zero(mul(A, As)) && t.is_zero(mul(As, A)));
    expect(out, name + ": g1, g2, arrow, dual arrow span the corner", span_dim(t, {G1, G2, A, As}) == 4 &&
                                                                          corner(t, E).dim() == 4);
    for (const auto& v : {G1, G2, A, As}) all.push_back(v);
  }
  expect(out, "the three corners span D3", span_dim(t, all) == 12);
}

template <Field F>
void check_fk3_coinvariant(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  auto p = params_of(ctx, pt);
  if (!f.is_zero(p.beta) || f.is_zero(p.alpha1)) throw Skip{"needs alpha2 = 3 alpha1 != 0"};
  if (!f.square_root(p.alpha1)) throw Skip{"alpha1 is not a square in " + f.name()};
  auto pres = presentation(Model::D3, p);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  run_suite(ctx, rs, "fk3-urels", p, out);
  run_suite(ctx, rs, "fk3-coinvariant", p, out);
  const auto& t = ctx.table(pres);
  const auto& ring = pres.ring;
  auto f1 = derived_element("f1", p, ring), f2 = derived_element("f2", p, ring);
  auto u = derived_element("u", p, ring), v = derived_element("v", p, ring);
  std::vector<Element<F>> gens{t.element(f1), t.element(f2), t.element(f1 * u * f2), t.element(f1 * v * f2),
                               t.element(f2 * u * f1), t.element(f2 * v * f1)};
  auto sub = subalgebra_with_unit(t, gens);
  out.details["generated_dim"] = sub.dim();
  expect(out, "f1, f2 and the four arrows generate D3", sub.dim() == 12);
}

// ---------------------------------------------------------------- Clifford

template <Field F>
void check_clifford(Ctx<F>& ctx, const GridPoint& pt, PointReport& out) {
  const F& f = ctx.field;
  if (pt[0].den != 1 || pt[1].den != 1 || pt[0].num < 1 || pt[0].num > 6 || pt[1].num < 0 ||
      pt[1].num > pt[0].num) {
    throw CheckError("clifford points are (dim, rank) with 1 <= dim <= 6 and 0 <= rank <= dim");
  }
  const std::size_t n = static_cast<std::size_t>(pt[0].num), r = static_cast<std::size_t>(pt[1].num);
  std::mt19937_64 rng(point_seed(ctx.cfg.seed, pt));
  auto nonzero = [&] {
    for (;;) {
      auto c = f.random(rng);
      if (!f.is_zero(c)) return c;
    }
  };
  Matrix<F> P(f, n, n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) P(i, j) = f.random(rng);
    }
    if (inverse(P)) break;
  }
  Matrix<F> D(f, n, n), Pt(f, n, n);
  for (std::size_t i = 0; i < r; ++i) D(i, i) = nonzero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) Pt(i, j) = P(j, i);
  }
  QuadraticForm<F> q{n, Pt * D * P, {}, std::nullopt};
  for (std::size_t i = 0; i < n; ++i) q.diagonal.push_back(q.gram(i, i));
  auto pres = clifford_presentation(q);
  const auto& rs = ctx.system(pres);
  require_certified(rs, out);
  const auto& t = ctx.table(pres);
  out.details["dimension"] = t.dim();
  expect(out, "dimension 2^n", t.dim() == (std::size_t{1} << n));
  auto kern = kernel(q.gram);
  std::vector<Element<F>> rad_gens;
  for (const auto& v : kern) {
    auto x = t.zero();
    for (std::size_t i = 0; i < n; ++i) x = t.add(x, t.scale(v[i], t.element(pres.ring->gen(static_cast<Letter>(i)))));
    rad_gens.push_back(x);
  }
  auto rad = radical(t);
  out.details["radical_dim"] = rad.dim();
  expect(out, "radical is generated by rad(B_q)", two_sided_ideal(t, rad_gens) == rad);
  expect(out, "semisimple iff q nondegenerate", is_semisimple(t) == (r == n));
  if (r == n) {
    auto z = center(t).dim();
    out.details["center_dim"] = z;
    expect(out, "center has dimension 1 (n even) or 2 (n odd)", z == (n % 2 == 0 ? 1u : 2u));
  }
}

// ---------------------------------------------------------------- registry

std::vector<GridPoint> d3_points(const CheckConfig& cfg) {
  std::vector<GridPoint> pts;
  const std::int64_t vals[] = {0, 1, -1, 2, 3};
  for (auto a : vals) {
    for (auto b : vals) pts.push_back({{a, 1}, {b, 1}});
  }
  std::mt19937_64 rng(splitmix(cfg.seed));
  auto bound = random_bound(cfg);
  for (int i = 0; i < 20; ++i) pts.push_back({random_ratio(rng, bound), random_ratio(rng, bound)});
  return pts;
}

std::vector<GridPoint> t_points(const CheckConfig& cfg) {
  std::vector<GridPoint> pts;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  std::mt19937_64 rng(splitmix(cfg.seed ^ 0x5bd1e995ULL));
  auto bound = random_bound(cfg);
  const std::int64_t bound_i = std::min<std::int64_t>(bound, 1 << 10);
  for (const auto& d : d3_points(cfg)) {
    std::int64_t a1 = d[0].num, a2 = d[1].num, b = 3 * a1 - a2;
    // -beta^3 and -(a1+a2) beta^2 put the point on a degenerate locus; only
    // kept while they stay small enough to be exact integers
    std::vector<std::int64_t> a3s{0, 1, -1, random_ratio(rng, bound).num};
    if (std::abs(b) <= bound_i) {
      a3s.push_back(-b * b * b);
      a3s.push_back(-(a1 + a2) * b * b);
    }
    for (auto a3 : a3s) {
      if (seen.insert({a1, a2, a3}).second) pts.push_back({d[0], d[1], {a3, 1}});
    }
  }
  return pts;
}

std::vector<GridPoint> single_point(const CheckConfig&) { return {GridPoint{}}; }

std::vector<GridPoint> hall_points(const CheckConfig&) {
  std::vector<GridPoint> pts;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 3}, {1, -1}, {2, 6}, {2, -2}, {3, 1},
                                                      {-1, 2}, {5, 7}, {0, 1}}) {
    pts.push_back({{a, 1}, {b, 1}});
  }
  return pts;
}

std::vector<GridPoint> degenerate_points(const CheckConfig&) {
  std::vector<GridPoint> pts;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 3}, {2, 6}, {-1, -3}, {1, -1}, {2, -2}, {3, -3}}) {
    pts.push_back({{a, 1}, {b, 1}});
  }
  return pts;
}

std::vector<GridPoint> rho_points(const CheckConfig& cfg) {
  std::vector<GridPoint> pts{{{1, 1}, {0, 1}, {1, 1}}, {{1, 1}, {-1, 1}, {0, 1}}, {{0, 1}, {0, 1}, {1, 1}},
                             {{1, 1}, {4, 1}, {1, 1}}};
  std::mt19937_64 rng(splitmix(cfg.seed ^ 0x72686fULL));
  auto bound = random_bound(cfg);
  for (int i = 0; i < 7; ++i) pts.push_back({random_ratio(rng, bound), random_ratio(rng, bound), random_ratio(rng, bound)});
  return pts;
}

std::vector<GridPoint> peirce_points(const CheckConfig&) {
  return {{{1, 1}, {0, 1}, {1, 1}}, {{2, 1}, {1, 1}, {3, 1}}, {{1, 1}, {0, 1}, {-3, 1}}};
}

std::vector<GridPoint> preprojective_points(const CheckConfig&) {
  return {{{1, 1}, {-1, 1}}, {{4, 1}, {-4, 1}}, {{-1, 1}, {1, 1}}};
}

std::vector<GridPoint> coinvariant_points(const CheckConfig&) { return {{{1, 1}, {3, 1}}, {{4, 1}, {12, 1}}}; }

std::vector<GridPoint> clifford_points(const CheckConfig&) {
  std::vector<GridPoint> pts;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3},
                                                      {4, 4}}) {
    pts.push_back({{n, 1}, {r, 1}});
  }
  return pts;
}

struct Entry {
  CheckInfo info;
  std::vector<GridPoint> (*defaults)(const CheckConfig&);
  PointFn<PrimeField> fp;
  PointFn<RationalField> qq;
  bool hall = false;
};

#define NCFORGE_ENTRY(id, axes, summary, defaults, fn) \
  Entry { CheckInfo{id, axes, summary}, defaults, &fn<PrimeField>, &fn<RationalField> }

const std::vector<std::string> kNone{};
const std::vector<std::string> kA12{"alpha1", "alpha2"};
const std::vector<std::string> kA123{"alpha1", "alpha2", "alpha3"};
const std::vector<std::string> kA12G{"alpha1", "alpha2", "gamma"};
const std::vector<std::string> kDimRank{"dim", "rank"};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v{
        NCFORGE_ENTRY("e3-basis", kNone, "E3 has the listed 12 normal words and Hilbert series (1+t)^2(1+t+t^2)",
                      single_point, check_e3_basis),
        NCFORGE_ENTRY("d3-gbasis", kA12, "reduced Groebner basis of D3 is the six listed relations", d3_points,
                      check_d3_gbasis),
        NCFORGE_ENTRY("d3-flatness", kA12, "D3 has dimension 12 with the normal words of E3 and a PBW basis",
                      d3_points, check_d3_flatness),
        NCFORGE_ENTRY("d3-semisimple", kA12, "D3 semisimple iff (3a1-a2)(a1+a2) != 0, center of dimension 3",
                      d3_points, check_d3_semisimple),
        NCFORGE_ENTRY("d3-degenerate", kA12, "radical of D3 on the loci 3a1 = a2 and a1 + a2 = 0",
                      degenerate_points, check_d3_degenerate),
        NCFORGE_ENTRY("d3-idempotents", kA12, "e1, e2, e3 are orthogonal central idempotents summing to 1",
                      d3_points, check_d3_idempotents),
        NCFORGE_ENTRY("d3-corner-clifford", kA12, "e3 D3 e3 is the Clifford algebra of the corner form", d3_points,
                      check_d3_corner_clifford),
        NCFORGE_ENTRY("pi-hall", kA12, "D3 satisfies [[x,y]^2, z] = 0 (randomized)", hall_points, check_pi_hall),
        NCFORGE_ENTRY("k-relations", kA12, "relation families of K(alpha1, alpha2) hold", d3_points,
                      check_k_relations),
        NCFORGE_ENTRY("k-dim", kA123, "K(alpha1, alpha2, alpha3) has dimension 36 with a PBW basis", t_points,
                      check_k_dim),
        NCFORGE_ENTRY("k-rho", kA12G, "the 3x3 matrices over the Clifford algebra of q_gamma satisfy the relations",
                      rho_points, check_k_rho),
        NCFORGE_ENTRY("k-peirce", kA12G, "Peirce decomposition of K(alpha3) by the idempotent of K[y]",
                      peirce_points, check_k_peirce),
        NCFORGE_ENTRY("t-hilbert", kNone, "B and T(0,0,0) have Hilbert series 1,4,8,11,12,12,11,8,4,1",
                      single_point, check_t_hilbert),
        NCFORGE_ENTRY("t-dim", kA123, "T has dimension 72 with a PBW basis", t_points, check_t_dim),
        NCFORGE_ENTRY("b-sextic", kNone, "the three forms of the sextic relation of B generate the same ideal",
                      single_point, check_b_sextic),
        NCFORGE_ENTRY("t-semisimple", kA123, "T semisimple iff alpha3 (alpha3 + (alpha1+alpha2) beta^2) != 0",
                      t_points, check_t_semisimple),
        NCFORGE_ENTRY("ore", kA123, "T is an Ore extension of K by (sigma, partial)", t_points, check_ore),
        NCFORGE_ENTRY("equivariance", kA123, "S3 acts on D3 and the group G on T", t_points, check_equivariance),
        NCFORGE_ENTRY("fk3-preprojective", kA12, "corners of D3 at alpha1 + alpha2 = 0 are preprojective algebras",
                      preprojective_points, check_fk3_preprojective),
        NCFORGE_ENTRY("fk3-coinvariant", kA12, "D3 at alpha2 = 3 alpha1 as a quiver algebra on f1, f2",
                      coinvariant_points, check_fk3_coinvariant),
        NCFORGE_ENTRY("clifford", kDimRank, "Clifford algebras of random forms: dimension 2^n, radical from rad(B_q)",
                      clifford_points, check_clifford),
    };
    for (auto& e : v) e.hall = e.info.id == "pi-hall";
    return v;
  }();
  return list;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw CheckError("unknown check '" + std::string(id) + "'");
}

Json config_json(const CheckConfig& cfg) {
  Json j;
  j["field"] = cfg.field.name;
  j["seed"] = cfg.seed;
  j["degree_bound"] = cfg.degree_bound;
  j["max_rules"] = cfg.max_rules;
  j["trials"] = cfg.trials;
  j["grid"] = cfg.grid ? "custom" : "default";
  j["scope"] = "pointwise verification at the listed parameters over " + cfg.field.name;
  return j;
}

template <Field F>
Report run_points(const Entry& e, PointFn<F> fn, const CheckConfig& cfg, const std::vector<GridPoint>& pts) {
  Ctx<F> ctx{make_field<F>(cfg.field), cfg, {}, {}};
  Report rep;
  rep.check_id = e.info.id;
  rep.config = config_json(cfg);
  for (const auto& pt : pts) {
    if (pt.size() != e.info.axes.size()) {
      throw CheckError("check '" + e.info.id + "' takes " + std::to_string(e.info.axes.size()) +
                       " parameters, got " + std::to_string(pt.size()));
    }
    PointReport pr;
    pr.params = Json::object();
    for (std::size_t i = 0; i < pt.size(); ++i) pr.params[e.info.axes[i]] = pt[i].to_string();
    try {
      fn(ctx, pt, pr);
    } catch (const Skip& s) {
      pr.status = Status::Skipped;
      pr.reason = s.reason;
    } catch (const CompletionOverflow<F>& ex) {
      pr.status = Status::Error;
      pr.reason = ex.what();
    } catch (const CheckError&) {
      throw;
    } catch (const std::exception& ex) {
      pr.status = Status::Error;
      pr.reason = ex.what();
    }
    rep.points.push_back(std::move(pr));
  }
  rep.status = combine(rep.points);
  if (e.hall) rep.error_bound = ErrorBound{5, ctx.field.sample_size(), cfg.trials};
  return rep;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CheckInfo& check_info(std::string_view id) { return entry(id).info; }

std::vector<GridPoint> default_points(std::string_view id, const CheckConfig& cfg) {
  return entry(id).defaults(cfg);
}

Report run_check(std::string_view id, const CheckConfig& cfg) {
  const auto& e = entry(id);
  auto pts = cfg.grid ? *cfg.grid : e.defaults(cfg);
  if (cfg.field.characteristic == 0) return run_points<RationalField>(e, e.qq, cfg, pts);
  return run_points<PrimeField>(e, e.fp, cfg, pts);
}

Report scan(std::string_view id, const CheckConfig& cfg) {
  if (!cfg.grid || cfg.grid->empty()) throw CheckError("scan needs a nonempty grid");
  return run_check(id, cfg);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CheckError("bad integer '" + std::string(s) + "' in grid");
  }
  return v;
}

Ratio parse_ratio(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {parse_int(s), 1};
  Ratio r{parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1))};
  if (r.den == 0) throw CheckError("zero denominator in grid");
  if (r.den < 0) r = {-r.num, -r.den};
  return r;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Ratio> parse_axis(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw CheckError("unterminated value set in grid");
    std::vector<Ratio> out;
    for (auto v : split(s.substr(1, s.size() - 2), ',')) out.push_back(parse_ratio(v));
    return out;
  }
  auto dots = s.find("..");
  if (dots == std::string_view::npos) return {parse_ratio(s)};
  auto lo = parse_int(s.substr(0, dots)), hi = parse_int(s.substr(dots + 2));
  if (hi < lo) throw CheckError("empty range in grid");
  if (hi - lo > 10000) throw CheckError("grid range too long");
  std::vector<Ratio> out;
  for (auto v = lo; v <= hi; ++v) out.push_back({v, 1});
  return out;
}

}  // namespace

std::optional<std::vector<GridPoint>> parse_grid(std::string_view text, std::size_t arity, const CheckConfig& cfg) {
  text = trim(text);
  if (text == "default") return std::nullopt;
  std::vector<GridPoint> pts;
  if (text.starts_with("random:")) {
    auto n = parse_int(text.substr(7));
    if (n <= 0) throw CheckError("random grid needs a positive count");
    std::mt19937_64 rng(splitmix(cfg.seed ^ 0x67726964ULL));
    auto bound = random_bound(cfg);
    for (std::int64_t i = 0; i < n; ++i) {
      GridPoint pt;
      for (std::size_t k = 0; k < arity; ++k) pt.push_back(random_ratio(rng, bound));
      pts.push_back(pt);
    }
    return pts;
  }
  if (text.find("..") != std::string_view::npos || text.find('{') != std::string_view::npos) {
    std::vector<std::vector<Ratio>> axes;
    for (auto part : split(text, 'x')) axes.push_back(parse_axis(part));
    if (axes.size() != arity) {
      throw CheckError("grid has " + std::to_string(axes.size()) + " axes, expected " + std::to_string(arity));
    }
    pts.push_back({});
    for (const auto& axis : axes) {
      std::vector<GridPoint> next;
      for (const auto& pt : pts) {
        for (const auto& v : axis) {
          auto q = pt;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      }
      pts = std::move(next);
    }
    return pts;
  }
  for (auto tuple : split(text, ';')) {
    if (trim(tuple).empty()) continue;
    GridPoint pt;
    for (auto v : split(tuple, ',')) pt.push_back(parse_ratio(v));
    if (pt.size() != arity) {
      throw CheckError("grid point '" + std::string(trim(tuple)) + "' has " + std::to_string(pt.size()) +
                       " coordinates, expected " + std::to_string(arity));
    }
    pts.push_back(pt);
  }
  if (pts.empty()) throw CheckError("empty grid");
  return pts;
}

template <Field F>
Report pi_test(const AlgebraTable<F>& table, const CheckConfig& cfg, std::uint64_t seed) {
  Report rep;
  rep.check_id = "pi-hall";
  rep.config = config_json(cfg);
  PointReport pr;
  auto [nonzero, first] = hall_trials(table, cfg.trials, seed);
  pr.details["trials"] = cfg.trials;
  pr.details["nonzero"] = nonzero;
  if (first) pr.details["first_nonzero_trial"] = *first;
  expect(pr, "[[x,y]^2, z] vanishes at every sampled triple", nonzero == 0);
  rep.points.push_back(std::move(pr));
  rep.status = combine(rep.points);
  rep.error_bound = ErrorBound{5, table.field().sample_size(), cfg.trials};
  return rep;
}

template Report pi_test<PrimeField>(const AlgebraTable<PrimeField>&, const CheckConfig&, std::uint64_t);
template Report pi_test<RationalField>(const AlgebraTable<RationalField>&, const CheckConfig&, std::uint64_t);

}  // namespace ncforge
