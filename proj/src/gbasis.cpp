#include "ncforge/gbasis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace ncforge {
namespace {

struct RuleRef {
  const Word* lead;
  const void* tail;  // NcPoly<F>*, erased to keep the finder field-agnostic
  std::size_t pos;
};

/// Reduction to normal form. Terms are taken from the top down; replacing a
/// reducible word only introduces strictly smaller words, so each word is
/// finished once it is popped irreducible.
template <Field F, class Finder>
NcPoly<F> reduce_with(const NcPoly<F>& p, const Finder& find) {
  using Elem = typename F::Elem;
  const F& f = p.field();
  std::map<Word, Elem> todo = p.terms();
  std::map<Word, Elem> done;
  while (!todo.empty()) {
    auto it = std::prev(todo.end());
    Word w = it->first;
    Elem c = it->second;
    todo.erase(it);
    auto hit = find(w);
    if (!hit) {
      done.emplace_hint(done.begin(), std::move(w), std::move(c));
      continue;
    }
    const auto& tail = *static_cast<const NcPoly<F>*>(hit->tail);
    Word left = w.prefix(hit->pos);
    Word right = w.subword(hit->pos + hit->lead->size());
    for (const auto& [tw, tc] : tail.terms()) {
      Elem v = f.mul(c, tc);
      Word nw = left + tw + right;
      auto [jt, inserted] = todo.try_emplace(std::move(nw), v);
      if (!inserted) {
        jt->second = f.add(jt->second, v);
        if (f.is_zero(jt->second)) todo.erase(jt);
      }
    }
  }
  return NcPoly<F>(p.ring(), std::move(done));
}

/// Leftmost occurrence of any indexed lead word.
template <class Leads>
std::optional<std::pair<std::size_t, std::size_t>> leftmost_lead(
    const Word& w, const std::vector<std::vector<std::size_t>>& by_first,
    const std::vector<std::size_t>& empty_leads, const Leads& lead_of) {
  if (!empty_leads.empty()) return std::make_pair(empty_leads.front(), std::size_t{0});
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    Letter x = w[pos];
    if (x >= by_first.size()) continue;
    for (std::size_t r : by_first[x]) {
      const Word& lead = lead_of(r);
      if (lead.size() + pos <= w.size() &&
          w.key().compare(pos, lead.size(), lead.key()) == 0) {
        return std::make_pair(r, pos);
      }
    }
  }
  return std::nullopt;
}

template <Field F>
NcPoly<F> make_monic(NcPoly<F> p) {
  const F& f = p.field();
  auto inv = f.inv(p.leading_coeff());
  p *= inv;
  return p;
}

template <Field F>
Rule<F> rule_from(const NcPoly<F>& monic) {
  Rule<F> r;
  r.lead = monic.leading_word();
  r.tail = monic.ring()->monomial(r.lead) - monic;
  return r;
}

/// S-polynomial for the overlap lead_i = L * s, lead_j = s * R (|s| = k).
template <Field F>
NcPoly<F> s_polynomial(const Rule<F>& ri, const Rule<F>& rj, std::size_t k) {
  const auto& ring = ri.tail.ring();
  Word left = ri.lead.prefix(ri.lead.size() - k);
  Word right = rj.lead.subword(k);
  return ri.as_relation() * ring->monomial(right) - ring->monomial(left) * rj.as_relation();
}

std::vector<std::size_t> overlap_lengths(const Word& a, const Word& b) {
  std::vector<std::size_t> ks;
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < m; ++k) {
    if (a.key().compare(a.size() - k, k, b.key(), 0, k) == 0) ks.push_back(k);
  }
  return ks;
}

template <Field F>
class Completer {
public:
  Completer(const Presentation<F>& p, std::size_t bound, std::size_t max_rules)
      : ring_(p.ring), bound_(bound), max_rules_(max_rules), by_first_(p.ring->num_generators()) {}

  RewriteSystem<F> run(const Presentation<F>& p) {
    for (const auto& rel : p.relations) add_relation(rel);
    while (true) {
      while (!queue_.empty()) {
        auto [deg, word, i, j, k] = *queue_.begin();
        queue_.erase(queue_.begin());
        if (!rules_[i].alive || !rules_[j].alive) continue;
        add_relation(s_polynomial(rules_[i].rule, rules_[j].rule, k));
      }
      // Final sweep over every overlap of the surviving rules.
      bool changed = false;
      for (std::size_t i = 0; i < rules_.size() && !changed; ++i) {
        if (!rules_[i].alive) continue;
        for (std::size_t j = 0; j < rules_.size() && !changed; ++j) {
          if (!rules_[j].alive) continue;
          for (std::size_t k : overlap_lengths(rules_[i].rule.lead, rules_[j].rule.lead)) {
            if (!reduce(s_polynomial(rules_[i].rule, rules_[j].rule, k)).is_zero()) {
              add_relation(s_polynomial(rules_[i].rule, rules_[j].rule, k));
              changed = true;
              break;
            }
          }
        }
      }
      if (!changed && queue_.empty()) break;
    }
    return snapshot(true);
  }

private:
  struct Live {
    Rule<F> rule;
    bool alive = true;
  };
  using Pending = std::tuple<std::size_t, Word, std::size_t, std::size_t, std::size_t>;

  NcPoly<F> reduce(const NcPoly<F>& p) const {
    auto lead_of = [this](std::size_t r) -> const Word& { return rules_[r].rule.lead; };
    return reduce_with<F>(p, [&](const Word& w) -> std::optional<RuleRef> {
      auto hit = leftmost_lead(w, by_first_, empty_leads_, lead_of);
      if (!hit) return std::nullopt;
      return RuleRef{&rules_[hit->first].rule.lead, &rules_[hit->first].rule.tail, hit->second};
    });
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(
        std::count_if(rules_.begin(), rules_.end(), [](const Live& l) { return l.alive; }));
  }

  RewriteSystem<F> snapshot(bool certified) const {
    std::vector<Rule<F>> out;
    for (const auto& l : rules_) {
      if (l.alive) out.push_back(l.rule);
    }
    std::sort(out.begin(), out.end(), [](const Rule<F>& a, const Rule<F>& b) { return a.lead < b.lead; });
    return RewriteSystem<F>(ring_, std::move(out), bound_, certified);
  }

  void rebuild_index() {
    for (auto& v : by_first_) v.clear();
    empty_leads_.clear();
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (!rules_[r].alive) continue;
      const Word& lead = rules_[r].rule.lead;
      if (lead.empty()) {
        empty_leads_.push_back(r);
      } else {
        by_first_[lead[0]].push_back(r);
      }
    }
  }

  void schedule(std::size_t i, std::size_t j) {
    const Word& a = rules_[i].rule.lead;
    const Word& b = rules_[j].rule.lead;
    for (std::size_t k : overlap_lengths(a, b)) {
      Word w = a + b.subword(k);
      queue_.emplace(w.size(), std::move(w), i, j, k);
    }
  }

  void add_relation(const NcPoly<F>& rel) {
    std::vector<NcPoly<F>> stack{rel};
    while (!stack.empty()) {
      NcPoly<F> q = reduce(stack.back());
      stack.pop_back();
      if (q.is_zero()) continue;
      q = make_monic(std::move(q));
      Rule<F> rule = rule_from(q);
      if (rule.lead.size() > bound_) {
        throw CompletionOverflow<F>("completion overflow: rule of degree " +
                                        std::to_string(rule.lead.size()) + " exceeds bound " +
                                        std::to_string(bound_),
                                    snapshot(false));
      }
      std::size_t idx = rules_.size();
      // Rules whose lead contains the new lead are retired and re-inserted.
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (rules_[r].alive && rules_[r].rule.lead.contains(rule.lead)) {
          rules_[r].alive = false;
          stack.push_back(rules_[r].rule.as_relation());
        }
      }
      rules_.push_back(Live{std::move(rule), true});
      rebuild_index();
      if (alive_count() > max_rules_) {
        throw CompletionOverflow<F>("completion overflow: more than " + std::to_string(max_rules_) +
                                        " rules",
                                    snapshot(false));
      }
      const Word& lead = rules_[idx].rule.lead;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (!rules_[r].alive || r == idx) continue;
        auto& tail = rules_[r].rule.tail;
        bool touched = std::any_of(tail.terms().begin(), tail.terms().end(),
                                   [&](const auto& kv) { return kv.first.contains(lead); });
        if (touched) tail = reduce(tail);
      }
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (!rules_[r].alive) continue;
        schedule(idx, r);
        if (r != idx) schedule(r, idx);
      }
    }
  }

  AlgebraPtr<F> ring_;
  std::size_t bound_;
  std::size_t max_rules_;
  std::vector<Live> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::size_t> empty_leads_;
  std::set<Pending> queue_;
};

}  // namespace

template <Field F>
RewriteSystem<F>::RewriteSystem(AlgebraPtr<F> ring, std::vector<Rule<F>> rules,
                                std::size_t degree_bound, bool certified)
    : ring_(std::move(ring)),
      rules_(std::move(rules)),
      degree_bound_(degree_bound),
      certified_(certified),
      by_first_(ring_->num_generators()) {
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (rules_[r].lead.empty()) {
      empty_leads_.push_back(r);
    } else {
      by_first_[rules_[r].lead[0]].push_back(r);
    }
  }
}

template <Field F>
std::size_t RewriteSystem<F>::max_lead_degree() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.lead.size());
  return m;
}

template <Field F>
std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem<F>::find_reducer(const Word& w) const {
  return leftmost_lead(w, by_first_, empty_leads_,
                       [this](std::size_t r) -> const Word& { return rules_[r].lead; });
}

template <Field F>
bool RewriteSystem<F>::is_normal(const Word& w) const {
  return !find_reducer(w).has_value();
}

template <Field F>
bool RewriteSystem<F>::is_normal_extension(const Word& w) const {
  for (const auto& r : rules_) {
    if (w.has_suffix(r.lead)) return false;
  }
  return true;
}

template <Field F>
NcPoly<F> RewriteSystem<F>::reduce(const NcPoly<F>& p) const {
  if (!p.ring()->same_as(*ring_)) throw AlphabetMismatch("polynomial not in the system's algebra");
  return reduce_with<F>(p, [&](const Word& w) -> std::optional<RuleRef> {
    auto hit = find_reducer(w);
    if (!hit) return std::nullopt;
    return RuleRef{&rules_[hit->first].lead, &rules_[hit->first].tail, hit->second};
  });
}

template <Field F>
std::string RewriteSystem<F>::to_string() const {
  std::ostringstream out;
  for (const auto& r : rules_) {
    out << ring_->alphabet().format(r.lead) << " -> " << r.tail.to_string() << '\n';
  }
  return out.str();
}

template <Field F>
RewriteSystem<F> complete(const Presentation<F>& p, std::size_t degree_bound, std::size_t max_rules) {
  for (const auto& rel : p.relations) {
    if (!rel.ring()->same_as(*p.ring)) throw AlphabetMismatch("relation outside presentation algebra");
  }
  Completer<F> c(p, degree_bound, max_rules);
  return c.run(p);
}

template <Field F>
NcPoly<F> normal_form(const RewriteSystem<F>& rs, const NcPoly<F>& p) {
  return rs.reduce(p);
}

template <Field F>
std::vector<Word> normal_words(const RewriteSystem<F>& rs, std::optional<std::size_t> max_degree) {
  if (!max_degree && !is_finite_dimensional(rs)) {
    throw GbasisError("normal_words(all) on an infinite-dimensional algebra");
  }
  std::vector<Word> out;
  std::vector<Word> level;
  if (rs.is_normal(Word{})) level.push_back(Word{});
  const std::size_t n = rs.ring()->num_generators();
  for (std::size_t d = 0; !level.empty(); ++d) {
    out.insert(out.end(), level.begin(), level.end());
    if (max_degree && d == *max_degree) break;
    std::vector<Word> next;
    for (const Word& w : level) {
      for (std::size_t x = 0; x < n; ++x) {
        Word wx = w;
        wx.push_back(static_cast<Letter>(x));
        if (rs.is_normal_extension(wx)) next.push_back(std::move(wx));
      }
    }
    level = std::move(next);
  }
  return out;
}

template <Field F>
bool is_finite_dimensional(const RewriteSystem<F>& rs) {
  if (!rs.certified()) throw GbasisError("finiteness test needs a certified rewrite system");
  if (!rs.is_normal(Word{})) return true;  // unit ideal
  const std::size_t n = rs.ring()->num_generators();
  const std::size_t ell = std::max<std::size_t>(rs.max_lead_degree(), 1);
  std::vector<Word> vertices;
  for (Word& w : normal_words(rs, ell - 1)) {
    if (w.size() == ell - 1) vertices.push_back(std::move(w));
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].key(), i);

  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      Word ux = vertices[i];
      ux.push_back(static_cast<Letter>(x));
      if (!rs.is_normal_extension(ux)) continue;
      auto it = index.find(ux.subword(1).key());
      if (it != index.end()) adj[i].push_back(it->second);
    }
  }
  // iterative DFS cycle detection
  std::vector<int> color(vertices.size(), 0);
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (color[s] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, e] = stack.back();
      if (e < adj[v].size()) {
        std::size_t u = adj[v][e++];
        if (color[u] == 1) return false;
        if (color[u] == 0) {
          color[u] = 1;
          stack.emplace_back(u, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

template <Field F>
std::vector<std::size_t> hilbert_series(const RewriteSystem<F>& rs, std::size_t max_degree) {
  std::vector<std::size_t> h(max_degree + 1, 0);
  for (const Word& w : normal_words(rs, max_degree)) h[w.size()]++;
  return h;
}

template <Field F>
bool contains(const RewriteSystem<F>& rs, const NcPoly<F>& p) {
  return normal_form(rs, p).is_zero();
}

template <Field F>
std::vector<NcPoly<F>> overlap_polynomials(const RewriteSystem<F>& rs) {
  std::vector<NcPoly<F>> out;
  const auto& rules = rs.rules();
  for (const auto& ri : rules) {
    for (const auto& rj : rules) {
      for (std::size_t k : overlap_lengths(ri.lead, rj.lead)) out.push_back(s_polynomial(ri, rj, k));
    }
  }
  return out;
}

#define NCFORGE_INSTANTIATE(F)                                                                  \
  template class RewriteSystem<F>;                                                              \
  template RewriteSystem<F> complete(const Presentation<F>&, std::size_t, std::size_t);         \
  template NcPoly<F> normal_form(const RewriteSystem<F>&, const NcPoly<F>&);                    \
  template std::vector<Word> normal_words(const RewriteSystem<F>&, std::optional<std::size_t>); \
  template bool is_finite_dimensional(const RewriteSystem<F>&);                                 \
  template std::vector<std::size_t> hilbert_series(const RewriteSystem<F>&, std::size_t);       \
  template bool contains(const RewriteSystem<F>&, const NcPoly<F>&);                            \
  template std::vector<NcPoly<F>> overlap_polynomials(const RewriteSystem<F>&);

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
