#include "qdyn/octonion.hpp"

#include <stdexcept>

#include "qdyn/error.hpp"

namespace qdyn {

std::shared_ptr<const OctSpec> OctSpec::make(QuatSpecPtr quat, const Scalar& gamma) {
  if (!(gamma.field() == quat->field)) {
    throw std::invalid_argument("gamma must lie in the field of the quaternion algebra");
  }
  if (gamma.is_zero()) throw std::invalid_argument("octonion parameter gamma must be nonzero");
  return std::make_shared<const OctSpec>(OctSpec{std::move(quat), gamma});
}

std::shared_ptr<const OctSpec> OctSpec::classical(FieldSpec field) {
  return make(QuatSpec::hamilton(field), Scalar(field, -1));
}

std::string OctSpec::name() const {
  return "oct:" + quat->alpha.str() + "," + quat->beta.str() + "," + gamma.str() + "@" +
         field().name();
}

bool same_spec(const OctSpec& a, const OctSpec& b) {
  return &a == &b || (same_spec(*a.quat, *b.quat) && a.gamma == b.gamma);
}

Octonion::Octonion(SpecPtr spec)
    : spec_(std::move(spec)), q_(spec_->quat), r_(spec_->quat) {}

Octonion::Octonion(SpecPtr spec, Quaternion q, Quaternion r)
    : spec_(std::move(spec)), q_(std::move(q)), r_(std::move(r)) {
  require_same_spec(spec_->quat, q_.spec());
  require_same_spec(spec_->quat, r_.spec());
}

Octonion::Octonion(SpecPtr spec, const Scalar& s)
    : spec_(std::move(spec)), q_(spec_->quat, s), r_(spec_->quat) {}

Octonion Octonion::one(const SpecPtr& spec) { return Octonion(spec, Scalar(spec->field(), 1)); }

Octonion Octonion::from_quaternion(const SpecPtr& spec, const Quaternion& q) {
  return Octonion(spec, q, Quaternion(spec->quat));
}

Octonion Octonion::l(const SpecPtr& spec) {
  return Octonion(spec, Quaternion(spec->quat), Quaternion::one(spec->quat));
}

std::array<Scalar, 8> Octonion::coords() const {
  const auto& a = q_.coords();
  const auto& b = r_.coords();
  return {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
}

void Octonion::check(const Octonion& y) const {
  if (!same_spec(*spec_, *y.spec_)) {
    throw SpecMismatch("octonions from different algebras: " + spec_->name() + " vs " +
                       y.spec_->name());
  }
}

Octonion& Octonion::operator+=(const Octonion& y) {
  check(y);
  q_ += y.q_;
  r_ += y.r_;
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& y) {
  check(y);
  q_ -= y.q_;
  r_ -= y.r_;
  return *this;
}

Octonion& Octonion::operator*=(const Scalar& s) {
  q_ *= s;
  r_ *= s;
  return *this;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  x.check(y);
  const Quaternion& q = x.q_;
  const Quaternion& r = x.r_;
  const Quaternion& s = y.q_;
  const Quaternion& t = y.r_;
  return Octonion(x.spec_, q * s + x.spec_->gamma * (t.conj() * r), t * q + r * s.conj());
}

bool operator==(const Octonion& x, const Octonion& y) {
  return same_spec(*x.spec_, *y.spec_) && x.q_ == y.q_ && x.r_ == y.r_;
}

Octonion Octonion::inv() const {
  if (is_zero()) throw MathError("inverse of zero octonion");
  Scalar n = norm();
  if (n.is_zero()) {
    throw SplitError("algebra is split at this element; " + spec_->name() +
                     " is not a division algebra (norm of " + str() + " is 0)");
  }
  return conj() * n.inv();
}

std::string Octonion::str() const {
  static const std::string basis[8] = {"", "i", "j", "k", "l", "il", "jl", "kl"};
  auto c = coords();
  return render_terms(c.data(), basis, 8);
}

bool commutes(const Octonion& x, const Octonion& y) { return x * y == y * x; }

Octonion power_left(const Octonion& x, unsigned n) {
  Octonion acc = Octonion::one(x.spec());
  for (unsigned m = 0; m < n; ++m) acc = acc * x;
  return acc;
}

Octonion power_right(const Octonion& x, unsigned n) {
  Octonion acc = Octonion::one(x.spec());
  for (unsigned m = 0; m < n; ++m) acc = x * acc;
  return acc;
}

}  // namespace qdyn
