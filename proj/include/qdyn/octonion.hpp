#pragma once

// Octonion algebra A = Q + Q*l obtained from a quaternion algebra Q by
// Cayley-Dickson doubling with l^2 = gamma.

#include <memory>
#include <string>

#include "qdyn/quaternion.hpp"

namespace qdyn {

struct OctSpec {
  QuatSpecPtr quat;
  Scalar gamma;

  static std::shared_ptr<const OctSpec> make(QuatSpecPtr quat, const Scalar& gamma);
  /// The classical octonions over `field`: (-1, -1 / field) doubled with gamma = -1.
  static std::shared_ptr<const OctSpec> classical(FieldSpec field = FieldSpec::rationals());

  const FieldSpec& field() const { return quat->field; }
  /// "oct:-1,-1,-1@Q".
  std::string name() const;
};

using OctSpecPtr = std::shared_ptr<const OctSpec>;

bool same_spec(const OctSpec& a, const OctSpec& b);

class Octonion {
 public:
  using Spec = OctSpec;
  using SpecPtr = OctSpecPtr;
  static constexpr int kDim = 8;

  explicit Octonion(SpecPtr spec);
  /// q + r*l.
  Octonion(SpecPtr spec, Quaternion q, Quaternion r);
  Octonion(SpecPtr spec, const Scalar& s);

  static Octonion zero(const SpecPtr& spec) { return Octonion(spec); }
  static Octonion one(const SpecPtr& spec);
  /// Embeds a quaternion of the underlying algebra as q + 0*l.
  static Octonion from_quaternion(const SpecPtr& spec, const Quaternion& q);
  static Octonion l(const SpecPtr& spec);

  const SpecPtr& spec() const { return spec_; }
  const FieldSpec& field() const { return spec_->field(); }
  const Quaternion& q() const { return q_; }
  const Quaternion& r() const { return r_; }
  /// Coordinates over 1, i, j, k, l, il, jl, kl.
  std::array<Scalar, 8> coords() const;

  bool is_zero() const { return q_.is_zero() && r_.is_zero(); }
  bool is_central() const { return q_.is_central() && r_.is_zero(); }

  Octonion operator-() const { return Octonion(spec_, -q_, -r_); }
  Octonion& operator+=(const Octonion& y);
  Octonion& operator-=(const Octonion& y);
  Octonion& operator*=(const Scalar& s);
  friend Octonion operator+(Octonion x, const Octonion& y) { return x += y; }
  friend Octonion operator-(Octonion x, const Octonion& y) { return x -= y; }
  friend Octonion operator*(Octonion x, const Scalar& s) { return x *= s; }
  friend Octonion operator*(const Scalar& s, Octonion x) { return x *= s; }
  /// (q + r l)(s + t l) = qs + gamma*conj(t)*r + (tq + r*conj(s)) l. Not associative.
  friend Octonion operator*(const Octonion& x, const Octonion& y);

  friend bool operator==(const Octonion& x, const Octonion& y);

  Octonion conj() const { return Octonion(spec_, q_.conj(), -r_); }
  /// x + conj(x), central.
  Scalar trace() const { return q_.trace(); }
  Scalar norm() const { return q_.norm() - spec_->gamma * r_.norm(); }
  Octonion inv() const;

  std::string str() const;

 private:
  void check(const Octonion& y) const;

  SpecPtr spec_;
  Quaternion q_;
  Quaternion r_;
};

bool commutes(const Octonion& x, const Octonion& y);

/// x^n with left-nested products ((x*x)*x)*...; n >= 0.
Octonion power_left(const Octonion& x, unsigned n);
/// x^n with right-nested products x*(x*(...)).
Octonion power_right(const Octonion& x, unsigned n);

}  // namespace qdyn
