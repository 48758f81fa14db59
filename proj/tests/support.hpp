#ifndef NCFORGE_TEST_SUPPORT_HPP
#define NCFORGE_TEST_SUPPORT_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ncforge/field.hpp"
#include "ncforge/freealg.hpp"
#include "ncforge/gbasis.hpp"
#include "ncforge/models.hpp"
#include "ncforge/parse.hpp"
#include "ncforge/structure.hpp"

namespace testing {

using namespace ncforge;

inline const PrimeField kFp{10009};

/// Polynomial from text in the ring of `ring`.
template <Field F>
NcPoly<F> P(const AlgebraPtr<F>& ring, std::string_view text) {
  return parse_polynomial(ring, text);
}

/// Coefficients of a product of integer polynomials, computed by hand-rolled
/// convolution so it shares nothing with the library.
inline std::vector<std::size_t> expand(const std::vector<std::vector<std::size_t>>& factors) {
  std::vector<std::size_t> acc{1};
  for (const auto& g : factors) {
    std::vector<std::size_t> next(acc.size() + g.size() - 1);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) next[i + j] += acc[i] * g[j];
    acc = next;
  }
  return acc;
}

inline std::set<std::string> word_set(const Alphabet& alphabet, const std::vector<Word>& ws) {
  std::set<std::string> s;
  for (const auto& w : ws) s.insert(alphabet.format(w));
  return s;
}

template <Field F>
ModelParams<F> params(const F& f, std::int64_t a1, std::int64_t a2, std::int64_t a3 = 0) {
  return ModelParams<F>::ints(f, a1, a2, a3);
}

}  // namespace testing

#endif
