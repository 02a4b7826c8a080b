#include "ringforge/group_ring.hpp"

#include <cctype>
#include <utility>

namespace ringforge {

namespace {

constexpr std::size_t kCensusBound = 100000;

std::size_t census_size(const RingPtr& r) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < r->dimension(); ++k) {
    total *= r->field.p;
    if (total > kCensusBound)
      raise(errc::too_large, "ring has more than " + std::to_string(kCensusBound) +
                                 " elements; refusing exhaustive census");
  }
  return total;
}

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (!same_ring(x.ring, y.ring))
    raise(errc::ring_mismatch, "operands live in different group rings");
}

}  // namespace

RingPtr make_ring(unsigned p, GroupPtr group) {
  if (!group) raise(errc::unknown_preset, "null group");
  return std::make_shared<GroupRing>(PrimeField(p), std::move(group));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  return a->field == b->field && a->group->same_structure(*b->group);
}

bool RingElement::is_zero() const {
  for (scalar c : coeffs)
    if (c != 0) return false;
  return true;
}

bool RingElement::operator==(const RingElement& other) const {
  return same_ring(ring, other.ring) && coeffs == other.coeffs;
}

RingElement ring_zero(const RingPtr& r) {
  return RingElement{r, std::vector<scalar>(r->dimension(), 0)};
}

RingElement ring_one(const RingPtr& r) { return basis_element(r, r->group->identity()); }

RingElement basis_element(const RingPtr& r, std::size_t g) {
  if (g >= r->dimension()) raise(errc::dimension_mismatch, "basis index out of range");
  RingElement x = ring_zero(r);
  x.coeffs[g] = 1;
  return x;
}

RingElement from_coeffs(const RingPtr& r, std::vector<scalar> coeffs) {
  if (coeffs.size() != r->dimension())
    raise(errc::dimension_mismatch, "coefficient vector length does not match group order");
  for (scalar& c : coeffs) c = r->field.reduce(c);
  return RingElement{r, std::move(coeffs)};
}

RingElement group_sum(const RingPtr& r) {
  return RingElement{r, std::vector<scalar>(r->dimension(), 1)};
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  RingElement out = x;
  for (std::size_t g = 0; g < out.coeffs.size(); ++g)
    out.coeffs[g] = x.ring->field.add(x.coeffs[g], y.coeffs[g]);
  return out;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  RingElement out = x;
  for (std::size_t g = 0; g < out.coeffs.size(); ++g)
    out.coeffs[g] = x.ring->field.sub(x.coeffs[g], y.coeffs[g]);
  return out;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const PrimeField& f = x.ring->field;
  const FiniteGroup& g = *x.ring->group;
  RingElement out = ring_zero(x.ring);
  for (std::size_t u = 0; u < x.coeffs.size(); ++u) {
    const scalar xu = x.coeffs[u];
    if (xu == 0) continue;
    for (std::size_t v = 0; v < y.coeffs.size(); ++v) {
      const scalar yv = y.coeffs[v];
      if (yv == 0) continue;
      const std::size_t w = g.mul(u, v);
      out.coeffs[w] = f.add(out.coeffs[w], f.mul(xu, yv));
    }
  }
  return out;
}

RingElement operator*(scalar c, const RingElement& x) {
  const scalar r = x.ring->field.reduce(c);
  RingElement out = x;
  for (scalar& v : out.coeffs) v = x.ring->field.mul(r, v);
  return out;
}

RingElement power(const RingElement& x, unsigned long long k) {
  RingElement acc = ring_one(x.ring);
  RingElement base = x;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

RingElement left_translate(std::size_t g, const RingElement& x) {
  RingElement out = ring_zero(x.ring);
  for (std::size_t u = 0; u < x.coeffs.size(); ++u)
    out.coeffs[x.ring->group->mul(g, u)] = x.coeffs[u];
  return out;
}

RingElement right_translate(const RingElement& x, std::size_t g) {
  RingElement out = ring_zero(x.ring);
  for (std::size_t u = 0; u < x.coeffs.size(); ++u)
    out.coeffs[x.ring->group->mul(u, g)] = x.coeffs[u];
  return out;
}

scalar augmentation(const RingElement& x) {
  scalar s = 0;
  for (scalar c : x.coeffs) s = x.ring->field.add(s, c);
  return s;
}

std::string to_string(const RingElement& x) {
  std::string out;
  for (std::size_t g = 0; g < x.coeffs.size(); ++g) {
    const scalar c = x.coeffs[g];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += x.ring->group->name(g);
  }
  return out.empty() ? "0" : out;
}

Matrix left_regular_matrix(const RingElement& x) {
  const std::size_t n = x.ring->dimension();
  Matrix m(x.ring->field, n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (x.coeffs[u] == 0) continue;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t w = x.ring->group->mul(u, g);
      m.at(w, g) = m.field.add(m.at(w, g), x.coeffs[u]);
    }
  }
  return m;
}

Matrix right_regular_matrix(const RingElement& x) {
  const std::size_t n = x.ring->dimension();
  Matrix m(x.ring->field, n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (x.coeffs[v] == 0) continue;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t w = x.ring->group->mul(g, v);
      m.at(w, g) = m.field.add(m.at(w, g), x.coeffs[v]);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

enum class Tok { nat, sym, plus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  unsigned long long nat = 0;
  std::string text;
};

[[noreturn]] void syntax_fail(const std::string& what, std::size_t pos, const std::string& src) {
  raise(errc::syntax_error,
        what + " at position " + std::to_string(pos) + " in \"" + src + "\"");
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto word = [&](std::size_t start) {
    std::size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    std::string text = s.substr(start, j - start);
    i = j;
    return text;
  };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t pos = i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > 1000000000000ull) syntax_fail("integer literal too large", pos, s);
        v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
        ++i;
      }
      out.push_back({Tok::nat, pos, v, {}});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      out.push_back({Tok::sym, pos, 0, word(pos)});
    } else if (c == '-') {
      ++i;
      if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        syntax_fail("'-' is only valid as part of an element alias like \"-e\"", pos, s);
      out.push_back({Tok::sym, pos, 0, word(pos)});
    } else if (c == '+') {
      out.push_back({Tok::plus, pos, 0, {}});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::star, pos, 0, {}});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::caret, pos, 0, {}});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::lparen, pos, 0, {}});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, pos, 0, {}});
      ++i;
    } else {
      syntax_fail(std::string("unexpected character '") + c + "'", pos, s);
    }
  }
  out.push_back({Tok::end, s.size(), 0, {}});
  return out;
}

class Parser {
public:
  Parser(RingPtr ring, const std::string& src)
      : ring_(std::move(ring)), src_(src), toks_(tokenize(src)) {}

  RingElement run() {
    RingElement x = expr();
    if (peek().kind != Tok::end) syntax_fail("unexpected trailing input", peek().pos, src_);
    return x;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  RingElement expr() {
    RingElement x = term();
    while (peek().kind == Tok::plus) {
      take();
      x = x + term();
    }
    return x;
  }

  RingElement term() {
    RingElement x = factor();
    while (peek().kind == Tok::star) {
      take();
      x = x * factor();
    }
    return x;
  }

  RingElement factor() {
    RingElement x = primary();
    if (peek().kind == Tok::caret) {
      take();
      if (peek().kind != Tok::nat)
        syntax_fail("expected a nonnegative integer exponent", peek().pos, src_);
      x = power(x, take().nat);
    }
    return x;
  }

  RingElement primary() {
    switch (peek().kind) {
      case Tok::nat: {
        const Token t = take();
        return static_cast<scalar>(t.nat % ring_->field.p) * ring_one(ring_);
      }
      case Tok::sym: {
        const Token t = take();
        auto idx = ring_->group->index_of(t.text);
        if (!idx)
          raise(errc::unknown_symbol, "\"" + t.text + "\" is not an element of group \"" +
                                          ring_->group->group_name() + "\"");
        return basis_element(ring_, *idx);
      }
      case Tok::lparen: {
        take();
        RingElement x = expr();
        if (peek().kind != Tok::rparen) syntax_fail("expected ')'", peek().pos, src_);
        take();
        return x;
      }
      default:
        syntax_fail("expected a number, an element symbol or '('", peek().pos, src_);
    }
  }

  RingPtr ring_;
  const std::string& src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

RingElement parse_element(const RingPtr& r, const std::string& text) {
  return Parser(r, text).run();
}

// ---------------------------------------------------------------------------
// Classification and censuses

ElementClassification classify_element(const RingElement& x) {
  ElementClassification result;
  result.augmentation = augmentation(x);
  if (x.is_zero()) {
    result.cls = ElementClass::zero;
    return result;
  }
  const Matrix lx = left_regular_matrix(x);
  std::vector<scalar> e_id(x.ring->dimension(), 0);
  e_id[x.ring->group->identity()] = 1;
  if (auto inv = solve(lx, e_id)) {
    result.cls = ElementClass::unit;
    result.inverse = from_coeffs(x.ring, std::move(*inv));
    return result;
  }
  result.cls = ElementClass::zero_divisor;
  const Matrix k = kernel(lx);
  result.witness = from_coeffs(x.ring, k.row(0));
  return result;
}

UnitParityCensus unit_parity_census(const RingPtr& r) {
  UnitParityCensus c;
  c.total = census_size(r);
  const std::size_t n = r->dimension();
  std::vector<scalar> v(n, 0);
  bool parity_holds = true;
  do {
    const RingElement x = RingElement{r, v};
    if (x.is_zero()) {
      c.zero += 1;
      continue;
    }
    const bool unit = rank(left_regular_matrix(x)) == n;
    const bool aug_one = augmentation(x) == 1;
    if (unit)
      c.units += 1;
    else
      c.zero_divisors += 1;
    if (aug_one) c.augmentation_one += 1;
    if (unit != aug_one) parity_holds = false;
  } while (next_vector(v, r->field.p));
  c.units_are_exactly_augmentation_one = parity_holds;
  return c;
}

PowerCensus fourth_power_census(const RingPtr& r) {
  PowerCensus c;
  c.total = census_size(r);
  std::vector<scalar> v(r->dimension(), 0);
  do {
    const RingElement x = RingElement{r, v};
    if (power(x, 4) == augmentation(x) * ring_one(r)) c.matches += 1;
  } while (next_vector(v, r->field.p));
  c.all_match = c.matches == c.total;
  return c;
}

}  // namespace ringforge
