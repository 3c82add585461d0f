#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dimjump/polynomial.hpp"

namespace dimjump {

enum class TokenKind { ident, integer, punct, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

// Splits text into identifiers, unsigned integers and single-character
// punctuation. '#' starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

// Cursor over a token vector with diagnostics that carry line/column.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::end; }
  bool is_punct(char c) const;
  bool is_word(std::string_view w) const;
  bool accept_punct(char c);
  bool accept_word(std::string_view w);
  void expect_punct(char c);
  void expect_word(std::string_view w);
  std::string expect_ident();
  long long expect_int(bool allow_sign = false);
  [[noreturn]] void fail(const std::string& expected) const;
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// poly := ['-'] term (('+'|'-') term)*
// term := coef ('*' factor)* | factor ('*' factor)*
// factor := ident ('^' nat)? | '(' poly ')' ('^' nat)?
// coef := int ('/' nat)?
Polynomial parse_polynomial(const RingPtr& ring, TokenStream& ts);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace dimjump
