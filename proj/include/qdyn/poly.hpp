#pragma once

// Left polynomials sum c_i x^i over a quaternion or octonion algebra. The
// variable x is central, so a polynomial is just its dense coefficient list.

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qdyn/error.hpp"
#include "qdyn/octonion.hpp"
#include "qdyn/quaternion.hpp"

namespace qdyn {

inline constexpr std::size_t kDefaultDegreeCap = 4096;

template <class E>
class Poly {
 public:
  using Elem = E;
  using SpecPtr = typename E::SpecPtr;

  explicit Poly(SpecPtr spec) : spec_(std::move(spec)) {}
  Poly(SpecPtr spec, std::vector<E> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
    for (const E& e : c_) check_elem(e);
    normalize();
  }

  static Poly constant(const E& c) { return Poly(c.spec(), {c}); }
  static Poly monomial(const E& c, std::size_t n) {
    std::vector<E> cs(n + 1, E::zero(c.spec()));
    cs[n] = c;
    return Poly(c.spec(), std::move(cs));
  }
  static Poly x(const SpecPtr& spec) { return monomial(E::one(spec), 1); }
  static Poly one(const SpecPtr& spec) { return constant(E::one(spec)); }

  const SpecPtr& spec() const { return spec_; }
  const std::vector<E>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  E coeff(std::size_t n) const { return n < c_.size() ? c_[n] : E::zero(spec_); }
  const E& leading() const { return c_.back(); }

  Poly operator-() const {
    Poly out(spec_);
    out.c_.reserve(c_.size());
    for (const E& e : c_) out.c_.push_back(-e);
    return out;
  }

  Poly& operator+=(const Poly& g) {
    g.check_poly(*this);
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), E::zero(spec_));
    for (std::size_t n = 0; n < g.c_.size(); ++n) c_[n] += g.c_[n];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& g) { return *this += -g; }

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }

  /// Convolution with coefficient products c_i * d_j in that order.
  friend Poly operator*(const Poly& f, const Poly& g) {
    f.check_poly(g);
    if (f.is_zero() || g.is_zero()) return Poly(f.spec_);
    std::vector<E> out(f.c_.size() + g.c_.size() - 1, E::zero(f.spec_));
    for (std::size_t a = 0; a < f.c_.size(); ++a) {
      if (f.c_[a].is_zero()) continue;
      for (std::size_t b = 0; b < g.c_.size(); ++b) out[a + b] += f.c_[a] * g.c_[b];
    }
    return Poly(f.spec_, std::move(out));
  }

  /// c * f: every coefficient multiplied on the left.
  friend Poly operator*(const E& c, const Poly& f) {
    f.check_elem(c);
    std::vector<E> out;
    out.reserve(f.c_.size());
    for (const E& e : f.c_) out.push_back(c * e);
    return Poly(f.spec_, std::move(out));
  }

  friend bool operator==(const Poly& f, const Poly& g) {
    return same_spec(*f.spec_, *g.spec_) && f.c_ == g.c_;
  }

  /// "(1)*x^2 + (1 + i)*x + (1 + k)"; "0" for the zero polynomial.
  std::string str() const {
    std::string out;
    for (std::size_t n = c_.size(); n-- > 0;) {
      if (c_[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[n].str() + ")";
      if (n == 1) out += "*x";
      if (n > 1) out += "*x^" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check_elem(const E& e) const {
    if (!same_spec(*spec_, *e.spec())) {
      throw SpecMismatch("coefficient from " + e.spec()->name() + " in a polynomial over " +
                         spec_->name());
    }
  }
  void check_poly(const Poly& g) const {
    if (!same_spec(*spec_, *g.spec_)) {
      throw SpecMismatch("polynomials over different algebras: " + spec_->name() + " vs " +
                         g.spec_->name());
    }
  }

  SpecPtr spec_;
  std::vector<E> c_;
};

using QuatPoly = Poly<Quaternion>;
using OctPoly = Poly<Octonion>;

/// sum c_i * lambda^i with lambda^i left-nested. Not a ring homomorphism.
template <class E>
E peval(const Poly<E>& f, const E& lambda) {
  E acc = E::zero(f.spec());
  E pw = E::one(f.spec());
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (n > 0) pw = pw * lambda;
    acc += f.coeffs()[n] * pw;
  }
  return acc;
}

/// f^t as a product in the polynomial ring, left-nested; t >= 1.
template <class E>
Poly<E> ppow(const Poly<E>& f, unsigned t) {
  if (t == 0) throw std::invalid_argument("ppow exponent must be positive");
  Poly<E> acc = f;
  for (unsigned n = 1; n < t; ++n) acc = acc * f;
  return acc;
}

/// f(g(x)) = sum c_i * g^i.
template <class E>
Poly<E> pcompose(const Poly<E>& f, const Poly<E>& g) {
  Poly<E> acc(f.spec());
  if (f.is_zero()) return acc;
  acc += Poly<E>::constant(f.coeffs()[0]);
  Poly<E> gi = Poly<E>::one(f.spec());
  for (std::size_t n = 1; n < f.coeffs().size(); ++n) {
    gi = gi * g;
    if (!f.coeffs()[n].is_zero()) acc += f.coeffs()[n] * gi;
  }
  return acc;
}

/// deg(f)^n, saturating just past `cap`.
inline std::size_t iterated_degree(long deg, unsigned n, std::size_t cap) {
  if (deg <= 1) return deg < 0 ? 0 : static_cast<std::size_t>(deg);
  std::size_t d = 1;
  for (unsigned m = 0; m < n; ++m) {
    d *= static_cast<std::size_t>(deg);
    if (d > cap) return cap + 1;
  }
  return d;
}

/// One outer composition step of the iteration: f(prev).
template <class E>
Poly<E> compose_step(const Poly<E>& f, const Poly<E>& prev, std::size_t degree_cap) {
  long d = f.degree() * prev.degree();
  if (f.degree() > 0 && prev.degree() > 0 && static_cast<std::size_t>(d) > degree_cap) {
    throw DegreeCapError("composition would have degree " + std::to_string(d) +
                         ", above the cap of " + std::to_string(degree_cap));
  }
  return pcompose(f, prev);
}

/// f^{o n}: f^{o 1} = f, f^{o n} = f(f^{o (n-1)}).
template <class E>
Poly<E> iterate_compose(const Poly<E>& f, unsigned n, std::size_t degree_cap = kDefaultDegreeCap) {
  if (n == 0) throw std::invalid_argument("iteration count must be positive");
  std::size_t d = iterated_degree(f.degree(), n, degree_cap);
  if (d > degree_cap) {
    throw DegreeCapError("f^o" + std::to_string(n) + " exceeds the degree cap of " +
                         std::to_string(degree_cap));
  }
  Poly<E> acc = f;
  for (unsigned m = 1; m < n; ++m) acc = pcompose(f, acc);
  return acc;
}

/// f(f(...f(lambda))), n evaluations.
template <class E>
E star_eval(const Poly<E>& f, const E& lambda, unsigned n) {
  if (n == 0) throw std::invalid_argument("iteration count must be positive");
  E v = lambda;
  for (unsigned m = 0; m < n; ++m) v = peval(f, v);
  return v;
}

template <class E>
struct LinearDivision {
  Poly<E> quotient;
  E remainder;
};

/// f = quotient * (x - lambda) + remainder, remainder == peval(f, lambda).
/// Needs associativity, so only quaternion polynomials are accepted.
template <class E>
LinearDivision<E> right_divide_linear(const Poly<E>& f, const E& lambda) {
  if constexpr (!std::is_same_v<E, Quaternion>) {
    throw MathError("right division by x - lambda is only supported over quaternion algebras");
  } else {
    const auto& c = f.coeffs();
    if (c.empty()) return {Poly<E>(f.spec()), E::zero(f.spec())};
    // b_{m-1} = c_m, b_{n-1} = c_n + b_n * lambda, remainder = c_0 + b_0 * lambda.
    std::vector<E> b(c.size() - 1, E::zero(f.spec()));
    E carry = c.back();
    for (std::size_t n = c.size() - 1; n > 0; --n) {
      b[n - 1] = carry;
      carry = c[n - 1] + carry * lambda;
    }
    return {Poly<E>(f.spec(), std::move(b)), carry};
  }
}

/// Product of linear factors (x - r_0)(x - r_1)...(x - r_{n-1}), left to right.
template <class E>
Poly<E> from_right_roots(const typename E::SpecPtr& spec, const std::vector<E>& roots) {
  Poly<E> acc = Poly<E>::one(spec);
  for (const E& r : roots) acc = acc * (Poly<E>::x(spec) - Poly<E>::constant(r));
  return acc;
}

}  // namespace qdyn
