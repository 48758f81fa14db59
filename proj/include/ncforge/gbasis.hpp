#ifndef NCFORGE_GBASIS_HPP
#define NCFORGE_GBASIS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncforge/freealg.hpp"

namespace ncforge {

/// Generators and relations of a two-sided ideal in the free algebra.
template <Field F>
struct Presentation {
  AlgebraPtr<F> ring;
  std::vector<NcPoly<F>> relations;
  std::string label;
};

/// Monic rewrite rule `lead -> tail`; every tail word is smaller than lead.
template <Field F>
struct Rule {
  Word lead;
  NcPoly<F> tail;

  /// lead - tail, an element of the ideal.
  NcPoly<F> as_relation() const { return tail.ring()->monomial(lead) - tail; }
};

/// Inter-reduced rewrite system. `certified` means every overlap ambiguity
/// resolved to zero, i.e. the rules form a Groebner basis.
template <Field F>
class RewriteSystem {
public:
  RewriteSystem() = default;
  RewriteSystem(AlgebraPtr<F> ring, std::vector<Rule<F>> rules, std::size_t degree_bound,
                bool certified);

  const AlgebraPtr<F>& ring() const { return ring_; }
  const std::vector<Rule<F>>& rules() const { return rules_; }
  std::size_t degree_bound() const { return degree_bound_; }
  bool certified() const { return certified_; }
  std::size_t max_lead_degree() const;

  /// True when no lead word occurs as a factor of w.
  bool is_normal(const Word& w) const;
  /// True when no lead word is a suffix of w (w assumed normal without its last letter).
  bool is_normal_extension(const Word& w) const;
  /// Index of a rule whose lead occurs in w, with the leftmost position.
  std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& w) const;

  NcPoly<F> reduce(const NcPoly<F>& p) const;

  std::string to_string() const;

private:
  AlgebraPtr<F> ring_;
  std::vector<Rule<F>> rules_;
  std::size_t degree_bound_ = 0;
  bool certified_ = false;
  // rules indexed by first letter of the lead word
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::size_t> empty_leads_;
};

/// Thrown when completion exceeds the degree bound or rule budget. Carries the
/// uncertified partial system.
template <Field F>
class CompletionOverflow : public std::runtime_error {
public:
  CompletionOverflow(const std::string& what, RewriteSystem<F> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RewriteSystem<F>& partial() const { return partial_; }

private:
  RewriteSystem<F> partial_;
};

class GbasisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultDegreeBound = 12;
inline constexpr std::size_t kDefaultMaxRules = 200;

/// Noncommutative Buchberger completion under deglex. Overlaps are processed
/// by increasing degree; the system is inter-reduced after each new rule.
template <Field F>
RewriteSystem<F> complete(const Presentation<F>& p, std::size_t degree_bound = kDefaultDegreeBound,
                          std::size_t max_rules = kDefaultMaxRules);

template <Field F>
NcPoly<F> normal_form(const RewriteSystem<F>& rs, const NcPoly<F>& p);

/// Normal words up to max_degree, or all of them (requires finite dimension).
template <Field F>
std::vector<Word> normal_words(const RewriteSystem<F>& rs, std::optional<std::size_t> max_degree);

/// Acyclicity of the Ufnarovski graph on normal words of length l-1,
/// l the longest lead word.
template <Field F>
bool is_finite_dimensional(const RewriteSystem<F>& rs);

template <Field F>
std::vector<std::size_t> hilbert_series(const RewriteSystem<F>& rs, std::size_t max_degree);

template <Field F>
bool contains(const RewriteSystem<F>& rs, const NcPoly<F>& p);

/// S-polynomials of all overlap ambiguities among the rules.
template <Field F>
std::vector<NcPoly<F>> overlap_polynomials(const RewriteSystem<F>& rs);

}  // namespace ncforge

#endif  // NCFORGE_GBASIS_HPP
