#include "projindex/poly_parse.hpp"

#include <cctype>
#include <string>

#include "projindex/error.hpp"

namespace projindex {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarScheme& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    skip_blanks();
    if (at_end()) fail("empty polynomial");
    MultiPoly p = expr();
    skip_blanks();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly constant(const Scalar& c) const { return MultiPoly(vars_.count, c); }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_blanks();
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail_at("division by a non-constant or zero", at);
        Scalar inv = 1 / d.constant_term();
        acc *= inv;
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_blanks();
      std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a nonnegative integer");
      Integer k = digits();
      if (k > 1000) fail_at("exponent too large", at);
      base = base.pow(static_cast<unsigned>(k.get_ui()));
    }
    return base;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  MultiPoly primary() {
    skip_blanks();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Scalar(digits()));
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  MultiPoly variable() {
    std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    bool well_formed = name.size() >= 2 && name[0] == vars_.prefix;
    for (std::size_t i = 1; well_formed && i < name.size(); ++i)
      well_formed = std::isdigit(static_cast<unsigned char>(name[i])) != 0;
    if (well_formed && name.size() < 9) {
      unsigned long idx = std::stoul(name.substr(1));
      if (idx >= vars_.first && idx - vars_.first < vars_.count)
        return MultiPoly::variable(vars_.count, idx - vars_.first);
    }
    std::string expected = std::string(1, vars_.prefix) + std::to_string(vars_.first) + ".." +
                           vars_.prefix + std::to_string(vars_.first + vars_.count - 1);
    if (vars_.count == 0) expected = "no variables";
    fail_at("unknown variable '" + name + "' (expected " + expected + ")", start);
  }

  std::string_view text_;
  VarScheme vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarScheme& vars) {
  return Parser(text, vars).parse();
}

bool mentions_prefix(std::string_view text, char prefix) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    bool starts_word = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    if (starts_word && text[i] == prefix && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      return true;
  }
  return false;
}

}  // namespace projindex
