#pragma once

// Text front end for rings, polynomials and ideal files. The grammar is
// documented in docs/grammar.md.

#include "qgor/polynomial.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgor {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

enum class Tok { Ident, Integer, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Integer, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      out.push_back({Tok::Symbol, "..", line, col});
      advance(2);
    } else if (std::string_view(";,=+-*/^():").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool accept(std::string_view s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  const Token& expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail("expected '" + std::string(s) + "'", peek());
    return next();
  }
  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what), peek());
    return next();
  }

  [[noreturn]] static void fail(const std::string& message, const Token& at) {
    std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
    throw ParseError(message + " (found " + found + ")", at.line, at.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Recursive-descent polynomial expressions:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ['^' integer]
///   atom   := integer | variable | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(TokenStream& ts, const RingPtr& ring) : ts_(ts), ring_(ring) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (ts_.accept("-")) {
      negate = true;
    } else {
      ts_.accept("+");
    }
    acc = term();
    if (negate) acc = -acc;
    while (ts_.is_symbol("+") || ts_.is_symbol("-")) {
      bool minus = ts_.next().text == "-";
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (ts_.is_symbol("*") || ts_.is_symbol("/")) {
      const Token& op = ts_.next();
      const Token& at = ts_.peek();
      Polynomial f = factor();
      if (op.text == "*") {
        acc *= f;
      } else {
        if (!f.is_constant()) TokenStream::fail("division is only allowed by constants", at);
        if (f.is_zero()) TokenStream::fail("division by zero", at);
        acc = f.leading_coefficient().inverse() * acc;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (ts_.accept("^")) {
      const Token& e = ts_.expect(Tok::Integer, "exponent");
      unsigned long power = std::stoul(e.text);
      if (power > UINT16_MAX) TokenStream::fail("exponent too large", e);
      base = base.pow(static_cast<unsigned>(power));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = ts_.peek();
    if (t.kind == Tok::Integer) {
      ts_.next();
      mpz_class v(t.text);
      try {
        return Polynomial::constant(ring_, Scalar::from_rational(ring_->field(), v, 1));
      } catch (const std::exception& e) {
        TokenStream::fail(e.what(), t);
      }
    }
    if (t.kind == Tok::Ident) {
      ts_.next();
      auto idx = ring_->index_of(t.text);
      if (!idx) TokenStream::fail("unknown variable " + t.text, t);
      return Polynomial::variable(ring_, *idx);
    }
    if (ts_.accept("(")) {
      Polynomial inner = expression();
      ts_.expect_symbol(")");
      return inner;
    }
    TokenStream::fail("expected a number, variable or '('", t);
  }

  TokenStream& ts_;
  const RingPtr& ring_;
};

/// Collects field/vars/weights/order statements into a ring.
class RingBuilder {
 public:
  bool try_statement(TokenStream& ts) {
    const Token& kw = ts.peek();
    if (kw.kind != Tok::Ident) return false;
    if (kw.text == "field") {
      ts.next();
      field_statement(ts);
    } else if (kw.text == "vars") {
      ts.next();
      vars_statement(ts);
    } else if (kw.text == "weights") {
      ts.next();
      weights_ = {};
      weights_token_ = ts.peek();
      do {
        const Token& w = ts.expect(Tok::Integer, "weight");
        weights_.push_back(static_cast<std::uint32_t>(std::stoul(w.text)));
      } while (ts.accept(","));
    } else if (kw.text == "order") {
      ts.next();
      const Token& o = ts.expect(Tok::Ident, "order name");
      if (o.text == "grevlex") {
        order_kind_ = "grevlex";
      } else if (o.text == "lex") {
        order_kind_ = "lex";
      } else if (o.text == "elim") {
        order_kind_ = "elim";
        elim_count_ = std::stoul(ts.expect(Tok::Integer, "block size").text);
      } else {
        TokenStream::fail("unknown monomial order " + o.text, o);
      }
      order_token_ = o;
    } else {
      return false;
    }
    return true;
  }

  void override_field(Field f) { override_ = f; }
  const Field& field() const { return field_; }

  RingPtr build(const Token& at_end) const {
    if (names_.empty()) TokenStream::fail("ring declares no variables", at_end);
    std::vector<std::uint32_t> weights = weights_;
    if (weights.empty()) {
      weights.assign(names_.size(), 1);
    } else if (weights.size() != names_.size()) {
      throw ParseError("expected " + std::to_string(names_.size()) + " weights, got " +
                           std::to_string(weights.size()),
                       weights_token_.line, weights_token_.column);
    }
    MonomialOrder order = MonomialOrder::grevlex(names_.size());
    if (order_kind_ == "lex") {
      order = MonomialOrder::lex(names_.size());
    } else if (order_kind_ == "elim") {
      if (elim_count_ == 0 || elim_count_ >= names_.size()) {
        throw ParseError("elimination block must be a proper nonempty prefix", order_token_.line,
                         order_token_.column);
      }
      order = MonomialOrder::elimination(MonomialOrder::all(elim_count_), order);
    }
    return Ring::make(override_ ? *override_ : field_, names_, weights, order);
  }

 private:
  void field_statement(TokenStream& ts) {
    const Token& f = ts.expect(Tok::Ident, "field name");
    std::uint64_t p = 0;
    if (f.text == "Q" || f.text == "QQ") {
      field_ = Field::rationals();
      return;
    }
    if (f.text == "Fp" || f.text == "ZZ") {
      if (!ts.accept(":")) ts.expect_symbol("/");
      p = std::stoull(ts.expect(Tok::Integer, "modulus").text);
    } else if (f.text.size() > 1 && f.text[0] == 'F' &&
               f.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      p = std::stoull(f.text.substr(1));
    } else {
      TokenStream::fail("unknown field " + f.text + " (use Q, F<p> or Fp:<p>)", f);
    }
    if (p > UINT32_MAX || !Field::is_prime(p)) {
      TokenStream::fail("field modulus " + std::to_string(p) + " is not prime", f);
    }
    field_ = Field::prime(static_cast<std::uint32_t>(p));
  }

  void vars_statement(TokenStream& ts) {
    do {
      const Token first = ts.expect(Tok::Ident, "variable name");
      if (ts.accept("..")) {
        const Token last = ts.expect(Tok::Ident, "variable name");
        auto [prefix_a, from] = split_index(first);
        auto [prefix_b, to] = split_index(last);
        if (prefix_a != prefix_b || to < from) TokenStream::fail("malformed variable range", last);
        for (unsigned long k = from; k <= to; ++k) add_name(prefix_a + std::to_string(k), first);
      } else {
        add_name(first.text, first);
      }
    } while (ts.accept(","));
  }

  static std::pair<std::string, unsigned long> split_index(const Token& t) {
    std::size_t cut = t.text.find_last_not_of("0123456789");
    if (cut == std::string::npos || cut + 1 == t.text.size()) {
      TokenStream::fail("range endpoints need a numeric suffix", t);
    }
    return {t.text.substr(0, cut + 1), std::stoul(t.text.substr(cut + 1))};
  }

  void add_name(const std::string& name, const Token& at) {
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
      TokenStream::fail("duplicate variable " + name, at);
    }
    if (names_.size() == kMaxVariables) TokenStream::fail("too many variables", at);
    names_.push_back(name);
  }

  Field field_ = Field::rationals();
  std::optional<Field> override_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  Token weights_token_;
  std::string order_kind_ = "grevlex";
  std::size_t elim_count_ = 0;
  Token order_token_;
};

}  // namespace detail

/// Parses "field Q; vars Z1..Z9,Y; weights 1,...,0; order grevlex".
inline RingPtr parse_ring(std::string_view text) {
  detail::TokenStream ts(text);
  detail::RingBuilder builder;
  while (!ts.at_end()) {
    if (ts.accept(";")) continue;
    if (!builder.try_statement(ts)) detail::TokenStream::fail("expected a ring statement", ts.peek());
    if (!ts.at_end()) ts.expect_symbol(";");
  }
  return builder.build(ts.peek());
}

/// "Q", "F2", "Fp:7", "ZZ/7": the same names the `field` statement accepts.
inline Field parse_field(std::string_view text) {
  const std::string statement = "field " + std::string(text);
  detail::TokenStream ts(statement);
  detail::RingBuilder builder;
  builder.try_statement(ts);
  if (!ts.at_end()) detail::TokenStream::fail("unexpected trailing input", ts.peek());
  return builder.field();
}

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  detail::TokenStream ts(text);
  detail::PolynomialParser parser(ts, ring);
  Polynomial p = parser.expression();
  if (!ts.at_end()) detail::TokenStream::fail("unexpected trailing input", ts.peek());
  return p;
}

inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  detail::TokenStream ts(text);
  detail::PolynomialParser parser(ts, ring);
  std::vector<Polynomial> out;
  if (ts.at_end()) return out;
  do {
    out.push_back(parser.expression());
  } while (ts.accept(","));
  if (!ts.at_end()) detail::TokenStream::fail("unexpected trailing input", ts.peek());
  return out;
}

/// A ring declaration followed by named ideals:
///   field Q; vars x,y; ideal I = x^2, x*y;
struct IdealFile {
  RingPtr ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;

  const std::vector<Polynomial>& find(const std::string& name) const {
    for (const auto& [n, gens] : ideals) {
      if (n == name) return gens;
    }
    throw std::out_of_range("no ideal named " + name);
  }
};

/// `field_override`, when given, replaces the file's field declaration so one
/// source drives several coefficient fields.
inline IdealFile parse_ideal_file(std::string_view text, std::optional<Field> field_override = std::nullopt) {
  detail::TokenStream ts(text);
  detail::RingBuilder builder;
  if (field_override) builder.override_field(*field_override);
  IdealFile out;
  while (!ts.at_end()) {
    if (ts.accept(";")) continue;
    const detail::Token& kw = ts.peek();
    if (kw.kind == detail::Tok::Ident && kw.text == "ideal") {
      ts.next();
      if (!out.ring) out.ring = builder.build(kw);
      const detail::Token name = ts.expect(detail::Tok::Ident, "ideal name");
      for (const auto& entry : out.ideals) {
        if (entry.first == name.text) detail::TokenStream::fail("duplicate ideal " + name.text, name);
      }
      ts.expect_symbol("=");
      detail::PolynomialParser parser(ts, out.ring);
      std::vector<Polynomial> gens;
      do {
        gens.push_back(parser.expression());
      } while (ts.accept(","));
      out.ideals.emplace_back(name.text, std::move(gens));
    } else if (out.ring) {
      detail::TokenStream::fail("ring statements must precede the first ideal", kw);
    } else if (!builder.try_statement(ts)) {
      detail::TokenStream::fail("expected a ring or ideal statement", kw);
    }
    if (!ts.at_end()) ts.expect_symbol(";");
  }
  if (!out.ring) out.ring = builder.build(ts.peek());
  return out;
}

}  // namespace qgor
