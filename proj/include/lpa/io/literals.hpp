#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/generators.hpp"
#include "lpa/laurent_ideal.hpp"
#include "lpa/pair_lattice.hpp"

namespace lpa::io {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, pos_ + 1, msg + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Scalar scan_unsigned_scalar(Scanner& s) {
  std::string num = s.digits();
  if (s.accept('/')) {
    mpz_class den(s.digits());
    if (den == 0) s.fail("zero denominator");
    Scalar q(mpz_class(num), den);
    q.canonicalize();
    return q;
  }
  return Scalar(mpz_class(num));
}

inline std::int64_t scan_exponent(Scanner& s) {
  bool paren = s.accept('(');
  bool negative = s.accept('-');
  if (!negative) s.accept('+');
  std::string d = s.digits();
  if (d.size() > 9) s.fail("exponent too large");
  if (paren) s.expect(')');
  std::int64_t e = std::stoll(d);
  return negative ? -e : e;
}

inline LaurentPoly scan_poly(Scanner& s) {
  LaurentPoly out;
  bool first = true;
  for (;;) {
    Scalar sign = 1;
    if (s.accept('-')) {
      sign = -1;
    } else if (!s.accept('+')) {
      if (!first) break;
    }
    first = false;
    Scalar coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      coeff = scan_unsigned_scalar(s);
      have_coeff = true;
      s.accept('*');
    }
    std::int64_t e = 0;
    if (s.accept('x')) {
      e = 1;
      if (s.accept('^')) e = scan_exponent(s);
    } else if (!have_coeff) {
      s.fail("expected a term");
    }
    out.add_term(e, sign * coeff);
  }
  return out;
}

}  // namespace detail

/// `3`, `-2`, `1/2`.
inline Scalar parse_scalar(std::string_view text) {
  detail::Scanner s(text);
  Scalar sign = s.accept('-') ? -1 : 1;
  Scalar out = detail::scan_unsigned_scalar(s);
  if (!s.at_end()) s.fail("trailing characters");
  return sign * out;
}

/// `3x^-2 + 1 - x`, `2*x^3`, `x^(-1)`.
inline LaurentPoly parse_poly(std::string_view text) {
  detail::Scanner s(text);
  LaurentPoly p = detail::scan_poly(s);
  if (!s.at_end()) s.fail("trailing characters");
  return p;
}

/// `(n)` (parentheses optional).
inline RingIdeal parse_ring_ideal(const RingSpec& r, std::string_view text) {
  detail::Scanner s(text);
  bool paren = s.accept('(');
  Scalar sign = s.accept('-') ? -1 : 1;
  Scalar g = detail::scan_unsigned_scalar(s);
  if (paren) s.expect(')');
  if (!s.at_end()) s.fail("trailing characters");
  return RingIdeal(r, sign * g);
}

/// `<p1, p2, ...>`.
inline LaurentIdeal parse_laurent_ideal(const RingSpec& r, std::string_view text) {
  detail::Scanner s(text);
  s.expect('<');
  std::vector<LaurentPoly> gens;
  if (!s.accept('>')) {
    for (;;) {
      gens.push_back(detail::scan_poly(s));
      if (s.accept(',')) continue;
      s.expect('>');
      break;
    }
  }
  if (!s.at_end()) s.fail("trailing characters");
  return LaurentIdeal::generated(r, gens);
}

/// Laurent ideal text where the unique generator of a field-coefficient
/// ideal is rescaled to constant term 1.
inline std::string constant_term_one(const LaurentIdeal& i) {
  if (!i.ring().uses_field_engine() || i.basis().empty()) return i.to_string();
  const LaurentPoly& p = i.basis().front();
  Scalar c0 = p.coefficient(0);
  Scalar inv = i.ring().kind() == RingSpec::Kind::Rationals ? Scalar(1 / c0) : i.ring().normalize(Scalar(1) / c0);
  return "<" + p.scaled(inv).reduced(i.ring()).to_string() + ">";
}

/// Vertex list such as `{u,v}`; also accepts bare `u,v`.
inline VertexSet parse_vertex_set(const Graph& g, std::string_view text) {
  std::string t(text);
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  t = trim(t);
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw ParseError(1, t.size(), "unterminated vertex set '" + t + "'");
    t = t.substr(1, t.size() - 2);
  }
  VertexSet out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos) comma = t.size();
    std::string id = trim(t.substr(pos, comma - pos));
    if (!id.empty()) out.insert(g.require_vertex(id));
    pos = comma + 1;
  }
  return out;
}

/// `{u,v}` or `{u,v|w}`.
inline AdmissiblePair parse_pair(const Graph& g, std::string_view text) {
  std::string t(text);
  auto bar = t.find('|');
  if (bar == std::string::npos) return {parse_vertex_set(g, t), {}};
  std::string left = t.substr(0, bar);
  std::string right = t.substr(bar + 1);
  auto lb = left.find('{');
  auto rb = right.rfind('}');
  if (lb == std::string::npos || rb == std::string::npos) {
    throw ParseError(1, 1, "pair literal '" + t + "' must look like {H|S}");
  }
  return {parse_vertex_set(g, left.substr(lb + 1)), parse_vertex_set(g, right.substr(0, rb))};
}

inline std::string generator_to_string(const Graph& g, const Generator& gen) {
  auto coeff = [](const Scalar& r) { return r == 1 ? std::string() : r.get_str() + "*"; };
  if (const auto* sv = std::get_if<ScaledVertex>(&gen)) return coeff(sv->r) + g.vertex_id(sv->v);
  if (const auto* sb = std::get_if<ScaledBreaking>(&gen)) {
    return coeff(sb->r) + g.vertex_id(sb->w) + "^" + g.label(sb->H);
  }
  const auto& cp = std::get<CyclePoly>(gen);
  return cp.p.to_string() + " @ " + cp.c.label(g);
}

/// `2*v`, `v`, `3*w^{a,b}`, `x - 1 @ e`.
inline Generator parse_generator(const Graph& g, std::string_view text) {
  std::string t(text);
  if (auto at = t.find('@'); at != std::string::npos) {
    std::string label = t.substr(at + 1);
    auto b = label.find_first_not_of(" \t");
    auto e = label.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(1, at + 2, "missing cycle after '@'");
    return CyclePoly{parse_poly(t.substr(0, at)), parse_cycle(g, label.substr(b, e - b + 1))};
  }
  std::string head = t;
  std::string set_text;
  if (auto caret = t.find('^'); caret != std::string::npos) {
    head = t.substr(0, caret);
    set_text = t.substr(caret + 1);
  }
  Scalar r = 1;
  std::string id = head;
  if (auto star = head.rfind('*'); star != std::string::npos) {
    r = parse_scalar(head.substr(0, star));
    id = head.substr(star + 1);
  }
  auto b = id.find_first_not_of(" \t");
  auto e = id.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError(1, 1, "missing vertex in generator '" + t + "'");
  std::size_t v = g.require_vertex(id.substr(b, e - b + 1));
  if (set_text.empty()) return ScaledVertex{r, v};
  return ScaledBreaking{r, v, parse_vertex_set(g, set_text)};
}

}  // namespace lpa::io
