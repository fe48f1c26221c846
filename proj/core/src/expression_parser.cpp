#include <cctype>

#include "germlab/errors.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarListPtr vars) : text_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t at = pos_;
    std::string e = digits();
    if (e.empty()) throw SyntaxError(at, "expected exponent");
    if (e.size() > 4 || std::stoul(e) > 4096) throw SyntaxError(at, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        std::string den = digits();
        if (den.empty()) throw SyntaxError(at, "expected denominator");
        if (Integer(den) == 0) throw SyntaxError(at, "zero denominator");
        Rational q{Integer(num), Integer(den)};
        q.canonicalize();
        return Polynomial::constant(vars_, q);
      }
      pos_ = save;
      return Polynomial::constant(vars_, Rational(Integer(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_->index_of(name);
      if (!idx)
        throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(name) +
                                                      "' at position " + std::to_string(start));
      return Polynomial::variable(vars_, *idx);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  VarListPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarListPtr& vars) {
  return Parser(text, vars).parse();
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::vector<std::string>& params) {
  return parse_polynomial(text, make_vars(vars, params));
}

Rational parse_rational(std::string_view text) {
  Polynomial p = parse_polynomial(text, make_vars({}));
  if (!p.is_constant()) throw SyntaxError(0, "expected a rational number");
  return p.constant_term();
}

}  // namespace germlab
