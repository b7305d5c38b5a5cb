#include "vfalg/parse.hpp"

#include <cctype>
#include <optional>

namespace vfalg {

namespace {

// Either a polynomial or a vector field; fields only arise from D(x) and
// products whose rightmost factor is a field.
struct Value {
  std::optional<SuperPolynomial> poly;
  std::optional<SuperVectorField> field;
};

class Parser {
 public:
  Parser(const Coords& coords, std::string_view text) : coords_(coords), text_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Value add(Value a, const Value& b, bool negate) {
    if (a.field.has_value() != b.field.has_value()) fail("cannot add a function and a vector field");
    if (a.field) {
      if (negate) *a.field -= *b.field; else *a.field += *b.field;
    } else {
      if (negate) *a.poly -= *b.poly; else *a.poly += *b.poly;
    }
    return a;
  }

  Value mul(const Value& a, const Value& b) {
    if (a.field) fail("derivative must be the rightmost factor");
    if (b.field) return {std::nullopt, *a.poly * *b.field};
    return {*a.poly * *b.poly, std::nullopt};
  }

  Value expr() {
    Value v;
    if (eat('-')) {
      v = term();
      v = negate(v);
    } else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+')) {
        v = add(std::move(v), term(), false);
      } else if (eat('-')) {
        v = add(std::move(v), term(), true);
      } else {
        return v;
      }
    }
  }

  static Value negate(Value v) {
    if (v.field) *v.field *= Rational(-1); else *v.poly *= Rational(-1);
    return v;
  }

  Value term() {
    Value v = power();
    for (;;) {
      if (eat('*')) {
        v = mul(v, power());
      } else if (eat('/')) {
        Value d = power();
        if (d.field || d.poly->size() > 1) fail("division only by a nonzero rational");
        Rational c = d.poly->coefficient(Monomial(coords_->size()));
        if (d.poly->is_zero() || c == 0) fail("division by zero or by a non-constant");
        v = mul(v, {SuperPolynomial::constant(coords_, 1 / c), std::nullopt});
      } else {
        return v;
      }
    }
  }

  Value power() {
    Value base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (base.field) fail("cannot raise a vector field to a power");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    SuperPolynomial r = SuperPolynomial::constant(coords_, 1);
    for (int i = 0; i < e; ++i) r = r * *base.poly;
    return {r, std::nullopt};
  }

  Value atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return negate(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q(std::string(text_.substr(start, pos_ - start)));
      return {SuperPolynomial::constant(coords_, q), std::nullopt};
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "D" && eat('(')) {
        skip();
        std::size_t s2 = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        std::string var(text_.substr(s2, pos_ - s2));
        if (!eat(')')) fail("expected ')' after D(" + var);
        auto idx = coords_->find(var);
        if (!idx) fail("unknown variable '" + var + "'");
        return {std::nullopt, SuperVectorField::partial(coords_, *idx)};
      }
      auto idx = coords_->find(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return {SuperPolynomial::variable(coords_, *idx), std::nullopt};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Coords& coords_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPolynomial parse_polynomial(const Coords& coords, std::string_view text) {
  Value v = Parser(coords, text).parse();
  if (v.field) throw Error("expected a polynomial, got a vector field");
  return *v.poly;
}

SuperVectorField parse_field(const Coords& coords, std::string_view text) {
  Value v = Parser(coords, text).parse();
  if (v.poly) {
    if (v.poly->is_zero()) return SuperVectorField(coords);
    throw Error("expected a vector field, got a polynomial");
  }
  return *v.field;
}

}  // namespace vfalg
