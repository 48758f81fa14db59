#ifndef NCFORGE_MODELS_HPP
#define NCFORGE_MODELS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncforge/gbasis.hpp"
#include "ncforge/linalg.hpp"
#include "ncforge/structure.hpp"

namespace ncforge {

/// Parameters outside the domain of a construction (e.g. a required root
/// does not exist, or a denominator vanishes).
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Model { E3, D3, K, K3, T, B, CLIFFORD };

std::string_view model_name(Model m);
Model parse_model(std::string_view name);

/// Deformation parameters. beta = 3*alpha1 - alpha2 is kept in sync; gamma
/// and zeta are filled in whenever the field provides them.
template <Field F>
struct ModelParams {
  using Elem = typename F::Elem;

  F field;
  Elem alpha1{}, alpha2{}, alpha3{};
  Elem beta{};
  std::optional<Elem> gamma;
  std::optional<Elem> zeta;

  /// gamma is the smallest cube root of alpha3 if one exists.
  static ModelParams make(const F& f, Elem a1, Elem a2, Elem a3);
  static ModelParams make(const F& f, Elem a1, Elem a2) { return make(f, a1, a2, f.zero()); }
  static ModelParams ints(const F& f, std::int64_t a1, std::int64_t a2, std::int64_t a3 = 0) {
    return make(f, f.from_int(a1), f.from_int(a2), f.from_int(a3));
  }
  /// alpha3 = gamma^3 with the given gamma.
  static ModelParams with_gamma(const F& f, Elem a1, Elem a2, Elem g);

  const Elem& require_gamma() const;
  const Elem& require_zeta() const;
  std::string describe() const;
};

template <Field F>
struct QuadraticForm {
  using Elem = typename F::Elem;

  std::size_t dim = 0;
  /// Bilinear form B_q(x_i, x_j); the diagonal holds q(x_i).
  Matrix<F> gram;
  std::vector<Elem> diagonal;
  std::optional<Elem> discriminant;

  /// q(sum l_i x_i)
  Elem evaluate(const std::vector<Elem>& l) const;
};

enum class FormKind { FK3_CORNER, Q_GAMMA, QPRIME_GAMMA };

/// Generator names used by each model: a b c for E3/D3, a b c y for K/K3,
/// a b c d for T/B, x1..xn for Clifford algebras.
Alphabet model_alphabet(Model m, std::size_t clifford_dim = 0);

template <Field F>
AlgebraPtr<F> model_ring(Model m, const F& f, std::size_t clifford_dim = 0);

/// Defining relations as printed. K3 and T use alpha3; CLIFFORD needs q.
template <Field F>
Presentation<F> presentation(Model m, const ModelParams<F>& p, const QuadraticForm<F>* q = nullptr);

template <Field F>
Presentation<F> clifford_presentation(const QuadraticForm<F>& q);

template <Field F>
QuadraticForm<F> quadratic_form(FormKind kind, const ModelParams<F>& p);

/// Form from the coefficients of l_i l_j (i <= j) as in a printed formula.
template <Field F>
QuadraticForm<F> form_from_coefficients(const F& f, std::size_t n,
                                        const std::vector<typename F::Elem>& upper);

template <Field F>
struct NamedMorphism {
  std::string name;
  MorphismSpec<F> spec;
};

/// D3: the transpositions (12), (23). T: g_a, g_b, g_c, g_d.
template <Field F>
std::vector<NamedMorphism<F>> group_action(Model m, const AlgebraPtr<F>& ring);

/// u, v, w, t, vplus, vminus, y, e1, e2, e3 (e1alt, e2alt, e3alt for the
/// factored forms), f1, f2, ey (idempotent of K[y] with y*ey = gamma*ey).
/// The ring must contain generators a, b, c.
template <Field F>
NcPoly<F> derived_element(std::string_view name, const ModelParams<F>& p, const AlgebraPtr<F>& ring);

/// v+ + lambda * v-^2
template <Field F>
NcPoly<F> witness_element(const ModelParams<F>& p, const AlgebraPtr<F>& ring, const typename F::Elem& lambda);

/// sigma and the sigma-derivation of the Ore description of T, on the ring
/// of K (a b c y) or of T (a b c d, with d fixed and mapped to 0).
template <Field F>
struct OreData {
  MorphismSpec<F> sigma;
  SkewDerivationSpec<F> partial;
};

template <Field F>
OreData<F> ore_data(const ModelParams<F>& p, const AlgebraPtr<F>& ring);

template <Field F>
struct RelationSuite {
  Model model;
  std::vector<std::string> labels;
  std::vector<NcPoly<F>> polys;
};

/// Identities expected to lie in the ideal of `model`. Ids: fk3-urels,
/// d3-newrels, k-abcy, k-u1v1, k-uv, t-yrels, t-ore, t-d, fk3-coinvariant.
template <Field F>
RelationSuite<F> relation_suite(std::string_view id, const ModelParams<F>& p);

std::vector<std::string> relation_suite_ids();

/// PBW monomials (a-b)^n1 a^n2 c^n3 [y^n4] of D3/K3 and
/// (b-a)^n1 a^n2 c^n3 y^n4 d^n5 of T, in exponent order.
template <Field F>
std::vector<NcPoly<F>> pbw_monomials(Model m, const ModelParams<F>& p, const AlgebraPtr<F>& ring);

/// The degree-six relation of B in its three printed forms:
/// (a+b+c)^6, (cb+ba+ac)^3 and (cba)^2+(bac)^2+(acb)^2.
template <Field F>
std::vector<NcPoly<F>> b_sextic_forms(const AlgebraPtr<F>& ring);

/// Images of a, b, c, y in M_3 over the Clifford algebra of q_gamma.
template <Field F>
struct RhoImage {
  AlgebraTable<F> clifford;
  AlgebraTable<F> matrices;
  Element<F> A, B, C, Y;
};

/// Throws ModelError when gamma^3 + beta^3 = 0.
template <Field F>
RhoImage<F> rho_matrices(const ModelParams<F>& p);

}  // namespace ncforge

#endif  // NCFORGE_MODELS_HPP
