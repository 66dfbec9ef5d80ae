#include "qdyn/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qdyn/error.hpp"

namespace qdyn {

namespace {

struct Token {
  enum class Type { Number, Radical, Ident, Op, End };
  Type type;
  std::size_t pos;
  std::string text;
  Rational number;
  long radicand = 0;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t p = 0;
  auto read_digits = [&](std::size_t from) {
    std::size_t q = from;
    while (q < s.size() && is_digit(s[q])) ++q;
    return q;
  };
  while (p < s.size()) {
    char c = s[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (is_digit(c)) {
      std::size_t end = read_digits(p);
      Integer num(std::string(s.substr(p, end - p)));
      Integer den = 1;
      if (end + 1 < s.size() && s[end] == '/' && is_digit(s[end + 1])) {
        std::size_t dend = read_digits(end + 1);
        den = Integer(std::string(s.substr(end + 1, dend - end - 1)));
        if (sgn(den) == 0) throw ParseError("zero denominator", end + 1);
        end = dend;
      }
      Token t{Token::Type::Number, p, std::string(s.substr(p, end - p)), Rational(num, den), 0};
      t.number.canonicalize();
      out.push_back(std::move(t));
      p = end;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t end = p;
      while (end < s.size() && is_alpha(s[end])) ++end;
      std::string word(s.substr(p, end - p));
      if (word == "s") {
        std::size_t q = end;
        bool negative = q < s.size() && s[q] == '-';
        if (negative) ++q;
        if (q < s.size() && is_digit(s[q])) {
          std::size_t dend = read_digits(q);
          long d = std::stol(std::string(s.substr(q, dend - q)));
          out.push_back({Token::Type::Radical, p, std::string(s.substr(p, dend - p)), 0,
                         negative ? -d : d});
          p = dend;
          continue;
        }
      }
      if (end < s.size() && is_digit(s[end])) {
        throw ParseError("unknown symbol '" + word + std::string(1, s[end]) + "'", p);
      }
      out.push_back({Token::Type::Ident, p, word, 0, 0});
      p = end;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
      out.push_back({Token::Type::Op, p, std::string(1, c), 0, 0});
      ++p;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", p);
  }
  out.push_back({Token::Type::End, s.size(), "", 0, 0});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(lex(s)) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    if (peek().type != Token::Type::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is_op(const char* op) const {
    return peek().type == Token::Type::Op && peek().text == op;
  }

  static std::unique_ptr<Expr> node(Expr::Kind kind, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->pos = pos;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (is_op("+") || is_op("-")) {
      auto op = node(peek().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, peek().pos);
      ++at_;
      op->lhs = std::move(lhs);
      op->rhs = term();
      lhs = std::move(op);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (is_op("*")) {
      auto op = node(Expr::Kind::Mul, peek().pos);
      ++at_;
      op->lhs = std::move(lhs);
      op->rhs = unary();
      lhs = std::move(op);
    }
    return lhs;
  }

  std::unique_ptr<Expr> unary() {
    if (is_op("-")) {
      auto op = node(Expr::Kind::Neg, peek().pos);
      ++at_;
      op->lhs = unary();
      return op;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    if (!is_op("^")) return base;
    auto op = node(Expr::Kind::Pow, peek().pos);
    ++at_;
    const Token& t = peek();
    if (t.type != Token::Type::Number || t.number.get_den() != 1 || !t.number.get_num().fits_uint_p()) {
      throw ParseError("exponent must be a nonnegative integer", t.pos);
    }
    op->exponent = static_cast<unsigned>(t.number.get_num().get_ui());
    ++at_;
    op->lhs = std::move(base);
    return op;
  }

  std::unique_ptr<Expr> atom() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Number: {
        auto e = node(Expr::Kind::Number, t.pos);
        e->number = t.number;
        ++at_;
        return e;
      }
      case Token::Type::Radical: {
        auto e = node(Expr::Kind::Radical, t.pos);
        e->radicand = t.radicand;
        e->name = t.text;
        ++at_;
        return e;
      }
      case Token::Type::Ident: {
        auto e = node(t.text == "x" ? Expr::Kind::Var : Expr::Kind::Basis, t.pos);
        e->name = t.text;
        ++at_;
        return e;
      }
      case Token::Type::Op:
        if (t.text == "(") {
          ++at_;
          auto e = expr();
          if (!is_op(")")) throw ParseError("expected ')'", peek().pos);
          ++at_;
          return e;
        }
        throw ParseError("unexpected '" + t.text + "'", t.pos);
      case Token::Type::End:
        throw ParseError("unexpected end of input", t.pos);
    }
    throw ParseError("unexpected token", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

Scalar radical(const Expr& e, const FieldSpec& field) {
  if (field.is_rationals() || field.d() != e.radicand) {
    throw ParseError("radical '" + e.name + "' does not belong to the field " + field.name(),
                     e.pos);
  }
  return Scalar(field, 0, 1);
}

Scalar eval_scalar(const Expr& e, const FieldSpec& field) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Scalar(field, e.number);
    case Expr::Kind::Radical:
      return radical(e, field);
    case Expr::Kind::Basis:
    case Expr::Kind::Var:
      throw ParseError("expected a scalar, found '" + e.name + "'", e.pos);
    case Expr::Kind::Neg:
      return -eval_scalar(*e.lhs, field);
    case Expr::Kind::Add:
      return eval_scalar(*e.lhs, field) + eval_scalar(*e.rhs, field);
    case Expr::Kind::Sub:
      return eval_scalar(*e.lhs, field) - eval_scalar(*e.rhs, field);
    case Expr::Kind::Mul:
      return eval_scalar(*e.lhs, field) * eval_scalar(*e.rhs, field);
    case Expr::Kind::Pow: {
      Scalar base = eval_scalar(*e.lhs, field);
      Scalar acc(field, 1);
      for (unsigned n = 0; n < e.exponent; ++n) acc *= base;
      return acc;
    }
  }
  throw ParseError("bad expression", e.pos);
}

Quaternion quat_basis(const Expr& e, const QuatSpecPtr& spec) {
  if (e.name == "i") return Quaternion::i(spec);
  if (e.name == "j") return Quaternion::j(spec);
  if (e.name == "k") return Quaternion::k(spec);
  if (e.name == "l" || e.name == "il" || e.name == "jl" || e.name == "kl") {
    throw ParseError("symbol '" + e.name + "' needs an octonion algebra", e.pos);
  }
  throw ParseError("unknown symbol '" + e.name + "'", e.pos);
}

Octonion oct_basis(const Expr& e, const OctSpecPtr& spec) {
  const auto& q = spec->quat;
  auto zero = Quaternion(q);
  if (e.name == "l") return Octonion(spec, zero, Quaternion::one(q));
  if (e.name == "il") return Octonion(spec, zero, Quaternion::i(q));
  if (e.name == "jl") return Octonion(spec, zero, Quaternion::j(q));
  if (e.name == "kl") return Octonion(spec, zero, Quaternion::k(q));
  return Octonion::from_quaternion(spec, quat_basis(e, q));
}

template <class E>
Poly<E> eval_poly(const Expr& e, const typename E::SpecPtr& spec) {
  using P = Poly<E>;
  const FieldSpec& field = E::zero(spec).field();
  switch (e.kind) {
    case Expr::Kind::Number:
      return P::constant(E(spec, Scalar(field, e.number)));
    case Expr::Kind::Radical:
      return P::constant(E(spec, radical(e, field)));
    case Expr::Kind::Basis:
      if constexpr (std::is_same_v<E, Quaternion>) {
        return P::constant(quat_basis(e, spec));
      } else {
        return P::constant(oct_basis(e, spec));
      }
    case Expr::Kind::Var:
      return P::x(spec);
    case Expr::Kind::Neg:
      return -eval_poly<E>(*e.lhs, spec);
    case Expr::Kind::Add:
      return eval_poly<E>(*e.lhs, spec) + eval_poly<E>(*e.rhs, spec);
    case Expr::Kind::Sub:
      return eval_poly<E>(*e.lhs, spec) - eval_poly<E>(*e.rhs, spec);
    case Expr::Kind::Mul:
      return eval_poly<E>(*e.lhs, spec) * eval_poly<E>(*e.rhs, spec);
    case Expr::Kind::Pow: {
      P base = eval_poly<E>(*e.lhs, spec);
      return e.exponent == 0 ? P::one(spec) : ppow(base, e.exponent);
    }
  }
  throw ParseError("bad expression", e.pos);
}

template <class E>
E eval_point(std::string_view source, const typename E::SpecPtr& spec) {
  auto ast = parse_ast(source);
  Poly<E> p = eval_poly<E>(*ast, spec);
  if (p.degree() > 0) throw ParseError("a point must not depend on x", 0);
  return p.coeff(0);
}

FieldSpec parse_field(std::string_view text, std::size_t offset) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 4 && text.substr(0, 3) == "Q(s" && text.back() == ')') {
    std::string_view digits = text.substr(3, text.size() - 4);
    try {
      std::size_t used = 0;
      long d = std::stol(std::string(digits), &used);
      if (used == digits.size()) return FieldSpec::quadratic(d);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad field: ") + e.what(), offset);
    } catch (const std::out_of_range&) {
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Q(s<d>))", offset);
}

}  // namespace

std::unique_ptr<Expr> parse_ast(std::string_view source) { return Parser(source).parse(); }

Scalar parse_scalar(std::string_view source, FieldSpec field) {
  return eval_scalar(*parse_ast(source), field);
}

QuatPoly parse_quat_poly(std::string_view source, const QuatSpecPtr& spec) {
  return eval_poly<Quaternion>(*parse_ast(source), spec);
}

OctPoly parse_oct_poly(std::string_view source, const OctSpecPtr& spec) {
  return eval_poly<Octonion>(*parse_ast(source), spec);
}

Quaternion parse_quaternion(std::string_view source, const QuatSpecPtr& spec) {
  return eval_point<Quaternion>(source, spec);
}

Octonion parse_octonion(std::string_view source, const OctSpecPtr& spec) {
  return eval_point<Octonion>(source, spec);
}

AlgebraDecl AlgebraDecl::hamilton(FieldSpec field) {
  AlgebraDecl d;
  d.kind = Kind::Quat;
  d.field = field;
  d.quat = QuatSpec::hamilton(field);
  return d;
}

AlgebraDecl AlgebraDecl::classical_octonions(FieldSpec field) {
  AlgebraDecl d;
  d.kind = Kind::Oct;
  d.field = field;
  d.oct = OctSpec::classical(field);
  d.quat = d.oct->quat;
  return d;
}

AlgebraDecl AlgebraDecl::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  std::size_t at = text.rfind('@');
  if (colon == std::string_view::npos || at == std::string_view::npos || at < colon) {
    throw ParseError("algebra must look like quat:<a>,<b>@<field> or oct:<a>,<b>,<c>@<field>", 0);
  }
  std::string_view kind = text.substr(0, colon);
  AlgebraDecl d;
  if (kind == "quat") {
    d.kind = Kind::Quat;
  } else if (kind == "oct") {
    d.kind = Kind::Oct;
  } else {
    throw ParseError("unknown algebra kind '" + std::string(kind) + "'", 0);
  }
  d.field = parse_field(text.substr(at + 1), at + 1);

  std::vector<Scalar> params;
  std::size_t start = colon + 1;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::size_t end = (comma == std::string_view::npos || comma > at) ? at : comma;
    try {
      params.push_back(parse_scalar(text.substr(start, end - start), d.field));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad algebra parameter: ") + e.what(), start + e.position());
    }
    if (end == at) break;
    start = end + 1;
  }
  const std::size_t want = d.is_oct() ? 3 : 2;
  if (params.size() != want) {
    throw ParseError("expected " + std::to_string(want) + " algebra parameters, got " +
                         std::to_string(params.size()),
                     colon + 1);
  }
  try {
    d.quat = QuatSpec::make(params[0], params[1]);
    if (d.is_oct()) d.oct = OctSpec::make(d.quat, params[2]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), colon + 1);
  }
  return d;
}

}  // namespace qdyn
