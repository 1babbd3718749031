#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::io {

namespace detail {

struct Token {
  enum class Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize_graph(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      bool digits = true;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) digits = false;
        ++j;
      }
      out.push_back({digits ? Token::Kind::Number : Token::Kind::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::Symbol, "->", tl, tc});
      advance(2);
      continue;
    }
    if (c == ';' || c == ',' || c == ':' || c == '*') {
      out.push_back({Token::Kind::Symbol, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class GraphParser {
 public:
  explicit GraphParser(std::string_view text) : tokens_(tokenize_graph(text)) {}

  Graph parse() {
    Graph g;
    while (peek().kind != Token::Kind::End) {
      const Token& kw = next();
      if (kw.kind != Token::Kind::Ident) fail(kw, "expected 'vertices', 'edge' or 'bundle'");
      if (kw.text == "vertices") {
        if (!is_symbol(peek(), ";")) {
          for (;;) {
            const Token& id = expect_ident("vertex id");
            wrap(id, [&] { g.add_vertex(id.text); });
            if (is_symbol(peek(), ",")) {
              next();
              continue;
            }
            break;
          }
        }
        expect_symbol(";");
      } else if (kw.text == "edge" || kw.text == "bundle") {
        const Token& id = expect_ident("bundle id");
        expect_symbol(":");
        const Token& src = expect_ident("source vertex");
        expect_symbol("->");
        const Token& dst = expect_ident("target vertex");
        Multiplicity m = Multiplicity::finite(1);
        if (kw.text == "bundle") {
          expect_symbol("*");
          const Token& mult = next();
          if (mult.kind == Token::Kind::Ident && mult.text == "inf") {
            m = Multiplicity::omega();
          } else if (mult.kind == Token::Kind::Number) {
            unsigned long k = 0;
            try {
              k = std::stoul(mult.text);
            } catch (const std::exception&) {
              fail(mult, "multiplicity out of range");
            }
            if (k == 0 || k > 1000000) fail(mult, "multiplicity must be between 1 and 1000000");
            m = Multiplicity::finite(static_cast<std::uint32_t>(k));
          } else {
            fail(mult, "expected a positive integer or 'inf'");
          }
        }
        expect_symbol(";");
        if (!g.find_vertex(src.text)) fail(src, "unknown vertex '" + src.text + "'");
        if (!g.find_vertex(dst.text)) fail(dst, "unknown vertex '" + dst.text + "'");
        wrap(id, [&] { g.add_bundle(id.text, src.text, dst.text, m); });
      } else {
        fail(kw, "expected 'vertices', 'edge' or 'bundle', got '" + kw.text + "'");
      }
    }
    return g;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End) ++pos_;
    return t;
  }
  static bool is_symbol(const Token& t, std::string_view s) { return t.kind == Token::Kind::Symbol && t.text == s; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  const Token& expect_ident(const char* what) {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::Number) fail(t, std::string("expected ") + what);
    return t;
  }
  void expect_symbol(std::string_view s) {
    const Token& t = next();
    if (!is_symbol(t, s)) fail(t, "expected '" + std::string(s) + "'");
  }
  template <class F>
  static void wrap(const Token& t, F&& f) {
    try {
      f();
    } catch (const DomainError& e) {
      fail(t, e.what());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// `vertices u, v;  edge e: u->u;  bundle g: w->a * inf;` with `#` comments.
inline Graph parse_graph(std::string_view text) { return detail::GraphParser(text).parse(); }

/// Canonical text: one `vertices` line, then bundles in declaration order.
inline std::string print_graph(const Graph& g) {
  std::string out = "vertices";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out += (v == 0 ? " " : ", ") + g.vertex_id(v);
  out += ";\n";
  for (const Bundle& b : g.bundles()) {
    bool single = !b.multiplicity.is_omega() && b.multiplicity.count() == 1;
    out += single ? "edge " : "bundle ";
    out += b.id + ": " + g.vertex_id(b.source) + "->" + g.vertex_id(b.target);
    if (!single) out += " * " + (b.multiplicity.is_omega() ? std::string("inf") : std::to_string(b.multiplicity.count()));
    out += ";\n";
  }
  return out;
}

}  // namespace lpa::io
