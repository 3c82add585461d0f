#include "dimjump/parse.hpp"

#include <cctype>

#include "dimjump/errors.hpp"

namespace dimjump {

namespace {
constexpr int kMaxNesting = 64;
constexpr long long kMaxParsedExponent = 1000;
constexpr std::size_t kMaxTerms = 20000;
constexpr std::size_t kMaxCoefficientBits = 4096;
}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.kind = TokenKind::ident;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokenKind::integer;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (std::string_view("+-*/^()[],:=;").find(char(c)) != std::string_view::npos) {
      tok.kind = TokenKind::punct;
      tok.text = std::string(1, char(c));
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + char(c) + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t p = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[p];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::is_punct(char c) const {
  return peek().kind == TokenKind::punct && peek().text[0] == c;
}

bool TokenStream::is_word(std::string_view w) const { return peek().kind == TokenKind::ident && peek().text == w; }

bool TokenStream::accept_punct(char c) {
  if (!is_punct(c)) return false;
  next();
  return true;
}

bool TokenStream::accept_word(std::string_view w) {
  if (!is_word(w)) return false;
  next();
  return true;
}

void TokenStream::expect_punct(char c) {
  if (!accept_punct(c)) fail(std::string("'") + c + "'");
}

void TokenStream::expect_word(std::string_view w) {
  if (!accept_word(w)) fail("'" + std::string(w) + "'");
}

std::string TokenStream::expect_ident() {
  if (peek().kind != TokenKind::ident) fail("identifier");
  return next().text;
}

long long TokenStream::expect_int(bool allow_sign) {
  bool neg = false;
  if (allow_sign && is_punct('-')) {
    next();
    neg = true;
  }
  if (peek().kind != TokenKind::integer) fail("integer");
  const Token& t = peek();
  if (t.text.size() > 9) fail_at(t, "integer too large");
  long long v = std::stoll(next().text);
  return neg ? -v : v;
}

void TokenStream::fail(const std::string& expected) const {
  const Token& t = peek();
  std::string found = t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
  throw ParseError(t.line, t.column, "expected " + expected + ", found " + found);
}

void TokenStream::fail_at(const Token& tok, const std::string& message) const {
  throw ParseError(tok.line, tok.column, message);
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, TokenStream& ts) : ring_(ring), ts_(ts) {}

  Polynomial poly() {
    if (++depth_ > kMaxNesting) ts_.fail_at(ts_.peek(), "expression nested too deeply");
    bool neg = ts_.accept_punct('-');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (ts_.is_punct('+') || ts_.is_punct('-')) {
      bool minus = ts_.next().text[0] == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    --depth_;
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = Polynomial::constant(ring_, 1);
    if (ts_.peek().kind == TokenKind::integer) {
      acc = Polynomial::constant(ring_, coef());
    } else {
      acc = factor();
    }
    while (ts_.is_punct('*')) {
      const Token& at = ts_.next();
      Polynomial f = factor();
      acc = product(at, acc, f);
    }
    return acc;
  }

  Scalar coef() {
    const Token& start = ts_.peek();
    mpz_class num(ts_.next().text);
    mpz_class den(1);
    if (ts_.accept_punct('/')) {
      if (ts_.peek().kind != TokenKind::integer) ts_.fail("natural number");
      den = mpz_class(ts_.next().text);
      if (den == 0) ts_.fail_at(start, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    try {
      return ring_->field().from_rational(q);
    } catch (const AlgebraError& e) {
      ts_.fail_at(start, e.what());
    }
  }

  unsigned exponent() {
    if (!ts_.accept_punct('^')) return 1;
    const Token& t = ts_.peek();
    if (t.kind != TokenKind::integer) ts_.fail("natural number");
    if (t.text.size() > 6 || std::stoll(t.text) > kMaxParsedExponent) ts_.fail_at(t, "exponent too large");
    return static_cast<unsigned>(std::stoll(ts_.next().text));
  }

  Polynomial factor() {
    if (ts_.is_punct('(')) {
      const Token& open = ts_.next();
      Polynomial inner = poly();
      ts_.expect_punct(')');
      unsigned e = exponent();
      Polynomial r = Polynomial::constant(ring_, 1);
      for (unsigned i = 0; i < e; ++i) r = product(open, r, inner);
      return r;
    }
    if (ts_.peek().kind != TokenKind::ident) ts_.fail("variable, integer or '('");
    const Token& t = ts_.peek();
    std::size_t idx = ring_->find(t.text);
    if (idx == ring_->num_vars()) ts_.fail_at(t, "unknown identifier '" + t.text + "'");
    ts_.next();
    unsigned e = exponent();
    return Polynomial::variable(ring_, idx, e);
  }

  // Products are capped so that a short input cannot expand without bound.
  Polynomial product(const Token& at, const Polynomial& a, const Polynomial& b) {
    Polynomial r(ring_);
    try {
      r = a * b;
    } catch (const AlgebraError& e) {
      ts_.fail_at(at, e.what());
    }
    if (r.size() > kMaxTerms) ts_.fail_at(at, "expression too large");
    for (const auto& t : r.terms())
      if (mpz_sizeinbase(t.coef.get_num_mpz_t(), 2) > kMaxCoefficientBits ||
          mpz_sizeinbase(t.coef.get_den_mpz_t(), 2) > kMaxCoefficientBits)
        ts_.fail_at(at, "coefficient too large");
    return r;
  }

  const RingPtr& ring_;
  TokenStream& ts_;
  int depth_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, TokenStream& ts) { return PolyParser(ring, ts).poly(); }

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  TokenStream ts(tokenize(text));
  Polynomial p = parse_polynomial(ring, ts);
  if (!ts.at_end()) ts.fail("end of input");
  return p;
}

}  // namespace dimjump
