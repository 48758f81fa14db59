#include "ncforge/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ncforge {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

template <Field F>
class ExprParser {
public:
  ExprParser(const AlgebraPtr<F>& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  NcPoly<F> parse() {
    NcPoly<F> lhs = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      lhs -= expr();
      skip_ws();
    }
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return lhs;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  NcPoly<F> expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    NcPoly<F> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char op = peek();
      if (op != '+' && op != '-') return acc;
      ++pos_;
      NcPoly<F> rhs = term();
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    char c = peek();
    if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) return true;
    return match_generator().has_value();
  }

  NcPoly<F> term() {
    NcPoly<F> acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  NcPoly<F> factor() {
    NcPoly<F> base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      auto e = integer();
      if (e > 4096) {
        pos_ = at;
        fail("exponent too large");
      }
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  std::uint64_t integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || v > static_cast<std::uint64_t>(INT64_MAX)) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  std::optional<std::pair<Letter, std::size_t>> match_generator() const {
    std::optional<std::pair<Letter, std::size_t>> best;
    const auto& names = ring_->alphabet().names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& n = names[i];
      if (text_.substr(pos_, n.size()) == n && (!best || n.size() > best->second)) {
        best = std::pair{static_cast<Letter>(i), n.size()};
      }
    }
    return best;
  }

  NcPoly<F> atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      NcPoly<F> inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = static_cast<std::int64_t>(integer());
      std::int64_t den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = static_cast<std::int64_t>(integer());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      try {
        return ring_->scalar(ring_->field().from_ratio(num, den));
      } catch (const FieldError& e) {
        fail(e.what());
      }
    }
    if (auto g = match_generator()) {
      pos_ += g->second;
      return ring_->gen(g->first);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  const AlgebraPtr<F>& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

template <Field F>
NcPoly<F> parse_polynomial(const AlgebraPtr<F>& ring, std::string_view text, std::size_t line) {
  return ExprParser<F>(ring, text, line).parse();
}

template <Field F>
Presentation<F> parse_presentation(const F& field, std::string_view text, std::string label) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto l = strip_comment(text.substr(start, end - start));
    if (!blank(l)) lines.emplace_back(number, l);
    start = end + 1;
    ++number;
  }
  if (lines.empty()) throw ParseError(1, 1, "missing 'generators:' line");

  auto [hline, header] = lines.front();
  constexpr std::string_view kKey = "generators:";
  auto key_at = header.find_first_not_of(" \t");
  if (header.substr(key_at, kKey.size()) != kKey) throw ParseError(hline, key_at + 1, "expected 'generators:'");
  std::vector<std::string> names;
  std::istringstream in{std::string(header.substr(key_at + kKey.size()))};
  for (std::string n; in >> n;) {
    for (char c : n) {
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_' && !std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(hline, header.find(n) + 1, "invalid generator name '" + n + "'");
      }
    }
    if (std::isdigit(static_cast<unsigned char>(n[0]))) {
      throw ParseError(hline, header.find(n) + 1, "generator name may not start with a digit");
    }
    names.push_back(n);
  }
  if (names.empty()) throw ParseError(hline, header.size() + 1, "no generators listed");
  if (names.size() > 255) throw ParseError(hline, 1, "too many generators");
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(hline, key_at + 1, e.what());
  }

  Presentation<F> p{FreeAlgebra<F>::make(field, std::move(alphabet)), {}, std::move(label)};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [n, l] = lines[i];
    auto poly = parse_polynomial(p.ring, l, n);
    if (poly.is_zero()) continue;
    p.relations.push_back(std::move(poly));
  }
  return p;
}

#define NCFORGE_INSTANTIATE(F)                                                           \
  template NcPoly<F> parse_polynomial(const AlgebraPtr<F>&, std::string_view, std::size_t); \
  template Presentation<F> parse_presentation(const F&, std::string_view, std::string);

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
