#include "qsw/parse.hpp"

#include <cctype>
#include <vector>

namespace qsw {

namespace {

// Exponent as a count of half steps, e.g. ^(1/2) -> 1, ^-1 -> -2.
struct Exponent {
  int halfsteps;
  std::size_t pos;
};

class Parser {
 public:
  Parser(std::string_view text, int n, bool allow_tensors) : s_(text), n_(n), allow_tensors_(allow_tensors) {}

  Value parse_all() {
    skip();
    if (at_end()) fail("empty expression");
    Value v = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char peek_at(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return v;
  }

  Integer big_integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    return Integer(digits);
  }

  int letter(std::size_t at) {
    const long v = integer();
    if (v < 1 || v > n_)
      throw DimensionError("at position " + std::to_string(at) + ": index " + std::to_string(v) + " out of range 1.." +
                           std::to_string(n_));
    return static_cast<int>(v);
  }

  bool starts_primary() {
    skip();
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q' || c == 'v' || c == 't' || c == 'K' ||
           c == 'e' || c == 'R' || c == 'I';
  }

  // ---- values

  XTensorElement as_element(const Value& v, std::size_t at) const {
    if (auto* e = std::get_if<XTensorElement>(&v)) return *e;
    if (auto* c = std::get_if<RationalScalar>(&v)) {
      XTensorElement x(n_);
      x.add_raw(Permutation(), MultiIndex{}, *c);
      return x;
    }
    fail_at(at, "expected an element, found an operator");
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) const {
    if (auto* sa = std::get_if<RationalScalar>(&a)) {
      if (auto* sb = std::get_if<RationalScalar>(&b)) return *sa * *sb;
      if (auto* eb = std::get_if<XTensorElement>(&b)) return *sa * *eb;
      return OperatorExpr::scale(*sa, std::get<OperatorExpr>(b));
    }
    if (auto* ea = std::get_if<XTensorElement>(&a)) {
      if (auto* sb = std::get_if<RationalScalar>(&b)) return *sb * *ea;
      if (auto* eb = std::get_if<XTensorElement>(&b)) return product(*ea, *eb);
      fail_at(at, "an element cannot be multiplied by an operator on its right");
    }
    const auto& oa = std::get<OperatorExpr>(a);
    if (auto* sb = std::get_if<RationalScalar>(&b)) return OperatorExpr::scale(*sb, oa);
    if (auto* eb = std::get_if<XTensorElement>(&b)) return oa(*eb);
    return oa * std::get<OperatorExpr>(b);
  }

  Value add(const Value& a, const Value& b, bool subtract, std::size_t at) const {
    const RationalScalar sign = subtract ? -1 : 1;
    const bool a_op = std::holds_alternative<OperatorExpr>(a), b_op = std::holds_alternative<OperatorExpr>(b);
    if (a_op || b_op) {
      auto as_op = [&](const Value& v) {
        if (auto* o = std::get_if<OperatorExpr>(&v)) return *o;
        if (auto* c = std::get_if<RationalScalar>(&v)) return OperatorExpr::scale(*c, OperatorExpr::identity());
        fail_at(at, "cannot add an element and an operator");
      };
      return as_op(a) + OperatorExpr::scale(sign, as_op(b));
    }
    if (std::holds_alternative<RationalScalar>(a) && std::holds_alternative<RationalScalar>(b))
      return std::get<RationalScalar>(a) + sign * std::get<RationalScalar>(b);
    return as_element(a, at) + sign * as_element(b, at);
  }

  Value power_of(const Value& base, const Exponent& e, std::size_t at) const {
    if (e.halfsteps % 2 != 0) fail_at(e.pos, "half-integer exponents apply only to q and K_i");
    const int k = e.halfsteps / 2;
    if (auto* c = std::get_if<RationalScalar>(&base)) {
      if (k < 0 && c->is_zero()) fail_at(at, "zero to a negative power");
      RationalScalar r = 1;
      const RationalScalar b = k < 0 ? c->inverse() : *c;
      for (int j = 0; j < (k < 0 ? -k : k); ++j) r *= b;
      return r;
    }
    if (k < 0) fail_at(e.pos, "negative powers apply only to scalars, q, t_r and K_i");
    Value r = std::holds_alternative<OperatorExpr>(base) ? Value(OperatorExpr::identity()) : Value(RationalScalar(1));
    for (int j = 0; j < k; ++j) r = multiply(r, base, at);
    return r;
  }

  // ---- grammar

  Value expr() {
    const std::size_t start = (skip(), pos_);
    const bool negate = accept('-');
    Value v = term();
    if (negate) v = multiply(RationalScalar(-1), v, start);
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('+'))
        v = add(v, term(), false, at);
      else if (accept('-'))
        v = add(v, term(), true, at);
      else
        return v;
    }
  }

  Value term() {
    std::vector<std::pair<Value, std::size_t>> factors;
    skip();
    factors.emplace_back(power(), pos_);
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        factors.emplace_back(power(), at);
      } else if (accept('/')) {
        Value d = power();
        auto* c = std::get_if<RationalScalar>(&d);
        if (!c) fail_at(at, "only scalars can be divided by");
        if (c->is_zero()) fail_at(at, "division by zero");
        factors.emplace_back(c->inverse(), at);
      } else if (starts_primary()) {
        factors.emplace_back(power(), at);
      } else {
        break;
      }
    }
    Value acc = factors.back().first;
    for (std::size_t k = factors.size() - 1; k-- > 0;) acc = multiply(factors[k].first, acc, factors[k + 1].second);
    return acc;
  }

  Exponent exponent() {
    skip();
    const std::size_t at = pos_;
    if (accept('(')) {
      const bool neg = accept('-');
      const long a = integer();
      int half = static_cast<int>(2 * a);
      if (accept('/')) {
        const long b = integer();
        if (b == 2)
          half = static_cast<int>(a);
        else if (b == 1)
          half = static_cast<int>(2 * a);
        else
          fail_at(at, "exponent denominators other than 2 are not supported");
      }
      expect(')');
      return {neg ? -half : half, at};
    }
    const bool neg = accept('-');
    if (!neg) accept('+');
    const long a = integer();
    return {static_cast<int>(neg ? -2 * a : 2 * a), at};
  }

  Value power() {
    skip();
    const std::size_t at = pos_;
    const char c = peek();
    // Primaries whose exponents get special meaning.
    if (c == 'q' || c == 'v') {
      ++pos_;
      const int unit = c == 'q' ? 2 : 1;
      if (accept('^')) {
        const Exponent e = exponent();
        if (c == 'v' && e.halfsteps % 2 != 0) fail_at(e.pos, "v takes integer exponents");
        return RationalScalar::v_power(c == 'q' ? e.halfsteps : e.halfsteps / 2);
      }
      return RationalScalar::v_power(unit);
    }
    if (c == 'K') {
      ++pos_;
      const int i = letter(at);
      int half = 2;
      if (accept('^')) half = exponent().halfsteps;
      return OperatorExpr::k_power(i, half);
    }
    if (c == 't') {
      ++pos_;
      const long r = integer();
      if (r < 1 || r > 200) fail_at(at, "generator index out of range");
      int k = 1;
      if (accept('^')) {
        const Exponent e = exponent();
        if (e.halfsteps % 2 != 0) fail_at(e.pos, "t_r takes integer exponents");
        k = e.halfsteps / 2;
      }
      HeckeElement h = HeckeElement::identity();
      const HeckeElement g = k < 0 ? HeckeElement::generator_inverse(static_cast<int>(r))
                                   : HeckeElement::generator(static_cast<int>(r));
      for (int j = 0; j < (k < 0 ? -k : k); ++j) h = h * g;
      return embed(h, at);
    }
    Value base = primary();
    if (accept('^')) return power_of(base, exponent(), at);
    return base;
  }

  XTensorElement embed(const HeckeElement& h, std::size_t) const {
    XTensorElement x(n_);
    for (const auto& [w, c] : h.terms()) x.add_raw(w, MultiIndex{}, c);
    return x;
  }

  XTensorElement tensor(const MultiIndex& J, std::size_t at) const {
    if (!allow_tensors_) fail_at(at, "tensors are not allowed here");
    XTensorElement x(n_);
    x.add_raw(Permutation(), J, 1);
    return x;
  }

  Value primary() {
    skip();
    const std::size_t at = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalScalar(Rational(big_integer()));
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (c == 'I' && peek_at(1) == 'd') {
      pos_ += 2;
      return OperatorExpr::identity();
    }
    if (c == 'e') {
      ++pos_;
      if (accept('[')) {
        MultiIndex J;
        skip();
        if (!accept(']')) {
          do {
            skip();
            J.push_back(static_cast<std::uint8_t>(letter(pos_)));
          } while (accept(','));
          expect(']');
        }
        return tensor(J, at);
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) return tensor(MultiIndex{static_cast<std::uint8_t>(letter(at))}, at);
      fail_at(at, "expected e[...] or e<index>");
    }
    if (c == 'R') {
      ++pos_;
      expect('(');
      skip();
      if (peek() == 'e' && peek_at(1) == '*') {
        pos_ += 2;
        const int i = letter(at);
        expect(')');
        return OperatorExpr::derivation(i);
      }
      const std::size_t inner_at = pos_;
      Value inner = expr();
      expect(')');
      return right_multiplication(inner, inner_at);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  OperatorExpr right_multiplication(const Value& v, std::size_t at) const {
    const XTensorElement x = as_element(v, at);
    if (x.is_zero()) return OperatorExpr::scale(0, OperatorExpr::identity());
    const int d = x.homogeneous_degree();
    if (d == 0) {
      HeckeElement h;
      for (const auto& [k, c] : x.terms()) h.add_term(k.w, c);
      return OperatorExpr::mul_hecke(h);
    }
    if (d == 1 && x.is_plain()) {
      OperatorExpr sum;
      bool first = true;
      for (const auto& [k, c] : x.terms()) {
        OperatorExpr term = OperatorExpr::mul_vector(k.J[0]);
        if (!c.is_one()) term = OperatorExpr::scale(c, term);
        sum = first ? term : sum + term;
        first = false;
      }
      return sum;
    }
    fail_at(at, "R(...) takes a vector, a dual basis vector e*<i>, or a Hecke element");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  bool allow_tensors_;
};

}  // namespace

Value parse_value(std::string_view text, int n) {
  if (n < 1 || n > 255) throw DimensionError("dimension must be in 1..255");
  return Parser(text, n, true).parse_all();
}

XTensorElement parse_element(std::string_view text, int n) {
  Value v = parse_value(text, n);
  if (auto* e = std::get_if<XTensorElement>(&v)) return *e;
  if (auto* c = std::get_if<RationalScalar>(&v)) {
    XTensorElement x(n);
    x.add_raw(Permutation(), MultiIndex{}, *c);
    return x;
  }
  throw ParseError(0, "expression is an operator, not an element");
}

HeckeElement parse_hecke(std::string_view text) {
  Value v = Parser(text, 1, false).parse_all();
  if (auto* c = std::get_if<RationalScalar>(&v)) return HeckeElement(*c);
  if (auto* e = std::get_if<XTensorElement>(&v)) {
    HeckeElement h;
    for (const auto& [k, c] : e->terms()) h.add_term(k.w, c);
    return h;
  }
  throw ParseError(0, "expression is an operator, not a Hecke element");
}

OperatorExpr parse_operator(std::string_view text, int n) {
  Value v = parse_value(text, n);
  if (auto* o = std::get_if<OperatorExpr>(&v)) return *o;
  throw ParseError(0, "expression is not an operator");
}

std::string eval_expression(std::string_view text, int n) {
  const Value v = parse_value(text, n);
  if (auto* c = std::get_if<RationalScalar>(&v)) return c->to_string();
  if (auto* e = std::get_if<XTensorElement>(&v)) return e->to_string();
  return std::get<OperatorExpr>(v).to_string();
}

RationalScalar RationalScalar::parse(std::string_view text) {
  Value v = Parser(text, 1, false).parse_all();
  if (auto* c = std::get_if<RationalScalar>(&v)) return *c;
  if (auto* e = std::get_if<XTensorElement>(&v)) {
    if (e->is_zero()) return {};
    if (e->terms().size() == 1 && e->terms().begin()->first.w.is_identity() && e->terms().begin()->first.J.empty())
      return e->terms().begin()->second;
  }
  throw ParseError(0, "expression is not a scalar");
}

}  // namespace qsw
