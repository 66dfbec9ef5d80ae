#include "qdyn/quaternion.hpp"

#include <stdexcept>

#include "qdyn/error.hpp"

namespace qdyn {

std::shared_ptr<const QuatSpec> QuatSpec::make(const Scalar& alpha, const Scalar& beta) {
  if (!(alpha.field() == beta.field())) {
    throw std::invalid_argument("alpha and beta must lie in the same field");
  }
  if (alpha.is_zero() || beta.is_zero()) {
    throw std::invalid_argument("quaternion parameters must be nonzero");
  }
  return std::make_shared<const QuatSpec>(QuatSpec{alpha.field(), alpha, beta});
}

std::shared_ptr<const QuatSpec> QuatSpec::hamilton(FieldSpec field) {
  return make(Scalar(field, -1), Scalar(field, -1));
}

std::string QuatSpec::name() const {
  return "quat:" + alpha.str() + "," + beta.str() + "@" + field.name();
}

bool same_spec(const QuatSpec& a, const QuatSpec& b) { return &a == &b || a == b; }

void require_same_spec(const QuatSpecPtr& a, const QuatSpecPtr& b) {
  if (!same_spec(*a, *b)) {
    throw SpecMismatch("quaternions from different algebras: " + a->name() + " vs " +
                       b->name());
  }
}

Quaternion::Quaternion(SpecPtr spec)
    : spec_(std::move(spec)),
      x_{Scalar(spec_->field), Scalar(spec_->field), Scalar(spec_->field),
         Scalar(spec_->field)} {}

Quaternion::Quaternion(SpecPtr spec, Scalar a, Scalar b, Scalar c, Scalar e)
    : spec_(std::move(spec)), x_{std::move(a), std::move(b), std::move(c), std::move(e)} {
  for (const auto& s : x_) {
    if (!(s.field() == spec_->field)) throw SpecMismatch("coordinate outside " + spec_->name());
  }
}

Quaternion::Quaternion(SpecPtr spec, const Scalar& s) : Quaternion(std::move(spec)) {
  if (!(s.field() == spec_->field)) throw SpecMismatch("scalar outside " + spec_->name());
  x_[0] = s;
}

Quaternion Quaternion::one(const SpecPtr& spec) {
  return Quaternion(spec, Scalar(spec->field, 1));
}

Quaternion Quaternion::i(const SpecPtr& spec) {
  Quaternion q(spec);
  q.x_[1] = Scalar(spec->field, 1);
  return q;
}

Quaternion Quaternion::j(const SpecPtr& spec) {
  Quaternion q(spec);
  q.x_[2] = Scalar(spec->field, 1);
  return q;
}

Quaternion Quaternion::k(const SpecPtr& spec) {
  Quaternion q(spec);
  q.x_[3] = Scalar(spec->field, 1);
  return q;
}

bool Quaternion::is_zero() const {
  return x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero();
}

bool Quaternion::is_central() const {
  return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero();
}

Quaternion Quaternion::operator-() const {
  return Quaternion(spec_, -x_[0], -x_[1], -x_[2], -x_[3]);
}

Quaternion& Quaternion::operator+=(const Quaternion& y) {
  require_same_spec(spec_, y.spec_);
  for (int n = 0; n < 4; ++n) x_[n] += y.x_[n];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& y) {
  require_same_spec(spec_, y.spec_);
  for (int n = 0; n < 4; ++n) x_[n] -= y.x_[n];
  return *this;
}

Quaternion& Quaternion::operator*=(const Scalar& s) {
  for (auto& c : x_) c *= s;
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  require_same_spec(x.spec_, y.spec_);
  const Scalar& al = x.spec_->alpha;
  const Scalar& be = x.spec_->beta;
  const auto& [a1, b1, c1, e1] = x.x_;
  const auto& [a2, b2, c2, e2] = y.x_;
  // jk = -beta*i, kj = beta*i, ik = alpha*j, ki = -alpha*j, k^2 = -alpha*beta.
  return Quaternion(x.spec_,
                    a1 * a2 + al * b1 * b2 + be * c1 * c2 - al * be * e1 * e2,
                    a1 * b2 + b1 * a2 - be * (c1 * e2 - e1 * c2),
                    a1 * c2 + c1 * a2 + al * (b1 * e2 - e1 * b2),
                    a1 * e2 + e1 * a2 + b1 * c2 - c1 * b2);
}

bool operator==(const Quaternion& x, const Quaternion& y) {
  return same_spec(*x.spec_, *y.spec_) && x.x_ == y.x_;
}

Quaternion Quaternion::conj() const {
  return Quaternion(spec_, x_[0], -x_[1], -x_[2], -x_[3]);
}

Scalar Quaternion::trace() const { return x_[0] + x_[0]; }

Scalar Quaternion::norm() const {
  const Scalar& al = spec_->alpha;
  const Scalar& be = spec_->beta;
  return x_[0] * x_[0] - al * x_[1] * x_[1] - be * x_[2] * x_[2] + al * be * x_[3] * x_[3];
}

Quaternion Quaternion::inv() const {
  if (is_zero()) throw MathError("inverse of zero quaternion");
  Scalar n = norm();
  if (n.is_zero()) {
    throw SplitError("algebra is split at this element; " + spec_->name() +
                     " is not a division ring (norm of " + str() + " is 0)");
  }
  return conj() * n.inv();
}

std::string render_terms(const Scalar* coords, const std::string* basis, int count) {
  std::string out;
  for (int n = 0; n < count; ++n) {
    const Scalar& c = coords[n];
    if (c.is_zero()) continue;
    std::string term;
    if (basis[n].empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = basis[n];
    } else if ((-c).is_one()) {
      term = "-" + basis[n];
    } else if (c.is_monomial()) {
      term = c.str() + "*" + basis[n];
    } else {
      term = "(" + c.str() + ")*" + basis[n];
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string Quaternion::str() const {
  static const std::string basis[4] = {"", "i", "j", "k"};
  return render_terms(x_.data(), basis, 4);
}

bool commutes(const Quaternion& x, const Quaternion& y) { return x * y == y * x; }

bool char_class_member(const Quaternion& z, const Scalar& trace, const Scalar& norm) {
  Quaternion lhs = z * z - z * trace + Quaternion(z.spec(), norm);
  return lhs.is_zero();
}

}  // namespace qdyn
