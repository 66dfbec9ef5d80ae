#pragma once

// Generalized quaternion algebra (alpha, beta / F): basis 1, i, j, k = ij with
// i^2 = alpha, j^2 = beta, ji = -ij.

#include <array>
#include <memory>
#include <string>

#include "qdyn/scalar.hpp"

namespace qdyn {

struct QuatSpec {
  FieldSpec field;
  Scalar alpha;
  Scalar beta;

  /// Throws std::invalid_argument for zero or foreign-field parameters.
  static std::shared_ptr<const QuatSpec> make(const Scalar& alpha, const Scalar& beta);
  /// Hamilton's quaternions (-1, -1 / field).
  static std::shared_ptr<const QuatSpec> hamilton(FieldSpec field = FieldSpec::rationals());

  /// "quat:-1,-1@Q".
  std::string name() const;
  friend bool operator==(const QuatSpec&, const QuatSpec&) = default;
};

using QuatSpecPtr = std::shared_ptr<const QuatSpec>;

class Quaternion {
 public:
  using Spec = QuatSpec;
  using SpecPtr = QuatSpecPtr;
  static constexpr int kDim = 4;

  explicit Quaternion(SpecPtr spec);
  Quaternion(SpecPtr spec, Scalar a, Scalar b, Scalar c, Scalar e);
  Quaternion(SpecPtr spec, const Scalar& s);

  static Quaternion zero(const SpecPtr& spec) { return Quaternion(spec); }
  static Quaternion one(const SpecPtr& spec);
  static Quaternion i(const SpecPtr& spec);
  static Quaternion j(const SpecPtr& spec);
  static Quaternion k(const SpecPtr& spec);

  const SpecPtr& spec() const { return spec_; }
  const FieldSpec& field() const { return spec_->field; }
  /// Coordinates over 1, i, j, k.
  const std::array<Scalar, 4>& coords() const { return x_; }
  const Scalar& real() const { return x_[0]; }

  bool is_zero() const;
  /// Lies in F.
  bool is_central() const;

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& y);
  Quaternion& operator-=(const Quaternion& y);
  Quaternion& operator*=(const Scalar& s);
  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const Scalar& s) { return x *= s; }
  friend Quaternion operator*(const Scalar& s, Quaternion x) { return x *= s; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);

  friend bool operator==(const Quaternion& x, const Quaternion& y);

  Quaternion conj() const;
  Scalar trace() const;
  Scalar norm() const;
  /// conj(z) / Norm(z). Throws MathError for z = 0 and SplitError when the
  /// norm of a nonzero z vanishes.
  Quaternion inv() const;

  /// Terms over 1, i, j, k, e.g. "1 - 2*j + (1/2 + s5)*k"; "0" for zero.
  std::string str() const;

 private:
  SpecPtr spec_;
  std::array<Scalar, 4> x_;
};

bool same_spec(const QuatSpec& a, const QuatSpec& b);
void require_same_spec(const QuatSpecPtr& a, const QuatSpecPtr& b);

/// xy == yx, decided exactly.
bool commutes(const Quaternion& x, const Quaternion& y);

/// z^2 - T z + N == 0.
bool char_class_member(const Quaternion& z, const Scalar& trace, const Scalar& norm);

/// Renders c_0*1 + c_1*e_1 + ... with the given basis names ("" for the unit).
std::string render_terms(const Scalar* coords, const std::string* basis, int count);

}  // namespace qdyn
