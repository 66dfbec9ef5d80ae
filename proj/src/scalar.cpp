#include "qdyn/scalar.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>

#include "qdyn/error.hpp"

namespace qdyn {

namespace {

bool is_squarefree(long d) {
  unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::quadratic(long d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw std::invalid_argument("radicand must be squarefree and not 0 or 1, got " +
                                std::to_string(d));
  }
  return FieldSpec(Kind::QuadExt, d);
}

std::string FieldSpec::name() const {
  return is_rationals() ? "Q" : "Q(" + radical_token() + ")";
}

std::string FieldSpec::radical_token() const {
  return is_rationals() ? std::string{} : "s" + std::to_string(d_);
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Scalar::Scalar(FieldSpec field, Rational a, Rational b)
    : field_(field), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rationals() && sgn(b_) != 0) {
    throw SpecMismatch("radical part is nonzero over Q");
  }
}

void Scalar::check_field(const Scalar& y) const {
  if (!(field_ == y.field_)) {
    throw SpecMismatch("scalars from different fields: " + field_.name() + " vs " +
                       y.field_.name());
  }
}

Scalar Scalar::operator-() const { return Scalar(field_, -a_, -b_); }

Scalar& Scalar::operator+=(const Scalar& y) {
  check_field(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  check_field(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  check_field(y);
  Rational a = a_ * y.a_ + d_rational() * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw MathError("division by zero in " + field_.name());
  // The norm of a nonzero element is nonzero because d is not a square.
  Rational n = field_norm();
  return Scalar(field_, a_ / n, -b_ / n);
}

Scalar& Scalar::operator/=(const Scalar& y) {
  check_field(y);
  return *this *= y.inv();
}

int Scalar::sign() const {
  int s = sgn(a_);
  int t = sgn(b_);
  if (t == 0) return s;
  if (field_.d() < 0) throw MathError("no ordering on " + field_.name());
  if (s == 0 || s == t) return t;
  // Opposite signs: whichever of a^2 and d*b^2 dominates decides.
  return cmp(a_ * a_, d_rational() * b_ * b_) > 0 ? s : t;
}

std::string Scalar::str() const {
  const std::string rad = field_.radical_token();
  auto radical_term = [&](const Rational& b) -> std::string {
    if (b == 1) return rad;
    if (b == -1) return "-" + rad;
    return rational_str(b) + "*" + rad;
  };
  if (sgn(b_) == 0) return rational_str(a_);
  if (sgn(a_) == 0) return radical_term(b_);
  if (sgn(b_) > 0) return rational_str(a_) + " + " + radical_term(b_);
  return rational_str(a_) + " - " + radical_term(-b_);
}

Real to_real(const Scalar& x, unsigned bits) {
  const FieldSpec& f = x.field();
  if (!f.has_real_embedding()) {
    throw MathError("field " + f.name() + " has no real embedding");
  }
  Real out;
  out.precision(bits);
  mpfr_ptr res = out.backend().data();
  mpfr_set_prec(res, bits);
  if (x.is_rational()) {
    mpfr_set_q(res, x.rational_part().get_mpq_t(), MPFR_RNDN);
    return out;
  }
  // Irrational values never sit on a rounding boundary, so the bracket
  // eventually rounds to a single representable value.
  const bool positive = sgn(x.radical_part()) > 0;
  for (mpfr_prec_t work = bits + 32;; work *= 2) {
    mpfr_t root_lo, root_hi, lo, hi, r_lo, r_hi;
    mpfr_inits2(work, root_lo, root_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_inits2(bits, r_lo, r_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_sqrt_ui(root_lo, static_cast<unsigned long>(f.d()), MPFR_RNDD);
    mpfr_sqrt_ui(root_hi, static_cast<unsigned long>(f.d()), MPFR_RNDU);
    mpq_srcptr b = x.radical_part().get_mpq_t();
    mpfr_mul_q(lo, positive ? root_lo : root_hi, b, MPFR_RNDD);
    mpfr_mul_q(hi, positive ? root_hi : root_lo, b, MPFR_RNDU);
    mpfr_add_q(lo, lo, x.rational_part().get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi, hi, x.rational_part().get_mpq_t(), MPFR_RNDU);
    mpfr_set(r_lo, lo, MPFR_RNDN);
    mpfr_set(r_hi, hi, MPFR_RNDN);
    const bool done = mpfr_equal_p(r_lo, r_hi) != 0;
    if (done) mpfr_set(res, r_lo, MPFR_RNDN);
    mpfr_clears(root_lo, root_hi, lo, hi, r_lo, r_hi, static_cast<mpfr_ptr>(nullptr));
    if (done) return out;
  }
}

double to_double(const Scalar& x) { return to_real(x, 53).convert_to<double>(); }

}  // namespace qdyn
