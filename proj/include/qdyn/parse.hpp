#pragma once

// Expression grammar for polynomials and points:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' uint)?
//   atom   := rational | radical | basis | 'x' | '(' expr ')'
//
// rational is `p` or `p/q`; radical is `s<d>` naming sqrt(d) of the ambient
// field; basis is one of i j k (k = ij) and, for octonions, l il jl kl.
// Products keep their written order.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qdyn/octonion.hpp"
#include "qdyn/poly.hpp"
#include "qdyn/quaternion.hpp"

namespace qdyn {

struct Expr {
  enum class Kind { Number, Radical, Basis, Var, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  std::size_t pos = 0;
  Rational number;
  long radicand = 0;
  std::string name;
  unsigned exponent = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

/// Syntax only; symbols are checked against an algebra on evaluation.
std::unique_ptr<Expr> parse_ast(std::string_view source);

/// `quat:<alpha>,<beta>@<field>` or `oct:<alpha>,<beta>,<gamma>@<field>`,
/// field `Q` or `Q(s<d>)`.
struct AlgebraDecl {
  enum class Kind { Quat, Oct };
  Kind kind = Kind::Quat;
  FieldSpec field;
  QuatSpecPtr quat;
  OctSpecPtr oct;

  static AlgebraDecl parse(std::string_view text);
  static AlgebraDecl hamilton(FieldSpec field = FieldSpec::rationals());
  static AlgebraDecl classical_octonions(FieldSpec field = FieldSpec::rationals());
  bool is_oct() const { return kind == Kind::Oct; }
  std::string str() const { return is_oct() ? oct->name() : quat->name(); }
};

Scalar parse_scalar(std::string_view source, FieldSpec field);
QuatPoly parse_quat_poly(std::string_view source, const QuatSpecPtr& spec);
OctPoly parse_oct_poly(std::string_view source, const OctSpecPtr& spec);
/// Degree-0 expressions; x is rejected.
Quaternion parse_quaternion(std::string_view source, const QuatSpecPtr& spec);
Octonion parse_octonion(std::string_view source, const OctSpecPtr& spec);

}  // namespace qdyn
