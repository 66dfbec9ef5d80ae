#pragma once

// Exact arithmetic in the ground field F, which is either Q or a single
// quadratic extension Q(sqrt d).

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <string>

namespace qdyn {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = boost::multiprecision::mpfr_float;

class FieldSpec {
 public:
  enum class Kind { Rationals, QuadExt };

  /// Q.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Q(sqrt d). Throws std::invalid_argument unless d is squarefree and d != 0, 1.
  static FieldSpec quadratic(long d);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  /// Radicand; 1 for Q so that formulas stay uniform.
  long d() const { return d_; }
  bool has_real_embedding() const { return is_rationals() || d_ > 0; }

  /// "Q" or "Q(s5)".
  std::string name() const;
  /// Radical token for expressions, e.g. "s5"; empty for Q.
  std::string radical_token() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, long d) : kind_(kind), d_(d) {}
  Kind kind_ = Kind::Rationals;
  long d_ = 1;
};

/// a + b*sqrt(d). Always normalized: rationals are canonical and b == 0 over Q.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldSpec field) : field_(field) {}
  Scalar(FieldSpec field, Rational a, Rational b = 0);
  Scalar(FieldSpec field, long value) : Scalar(field, Rational(value)) {}

  const FieldSpec& field() const { return field_; }
  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Galois conjugate a - b*sqrt(d).
  Scalar galois_conj() const { return Scalar(field_, a_, -b_); }
  /// Field norm a^2 - d*b^2 down to Q.
  Rational field_norm() const { return a_ * a_ - d_rational() * b_ * b_; }
  Scalar inv() const;

  /// Sign under the principal real embedding, decided exactly.
  int sign() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Total order under the real embedding; requires d > 0.
  friend int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

  /// Text form accepted by the expression parser: "3/4", "s5", "-1/2 + 3*s5".
  std::string str() const;
  /// True when str() is a single signed term and needs no parentheses as a factor.
  bool is_monomial() const { return sgn(a_) == 0 || sgn(b_) == 0; }

 private:
  Rational d_rational() const { return Rational(field_.d()); }
  void check_field(const Scalar& y) const;

  FieldSpec field_;
  Rational a_;
  Rational b_;
};

/// Value under the principal real embedding, correctly rounded to `bits`.
/// Throws MathError if the field has no real embedding.
Real to_real(const Scalar& x, unsigned bits);
double to_double(const Scalar& x);

std::string rational_str(const Rational& q);

}  // namespace qdyn
