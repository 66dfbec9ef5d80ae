#pragma once

// Shared generators and independent oracles for the test suites.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "qdyn/octonion.hpp"
#include "qdyn/poly.hpp"
#include "qdyn/quaternion.hpp"

namespace qdyn::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x5eed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  Rational rational(int range = 3, int max_den = 3) {
    Rational q(uniform(-range, range), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  Scalar scalar(const FieldSpec& f, int range = 3, int max_den = 3) {
    if (f.is_rationals()) return Scalar(f, rational(range, max_den));
    return Scalar(f, rational(range, max_den), coin() ? rational(range, max_den) : Rational(0));
  }

  /// Sparse-ish small coordinates.
  Quaternion quat(const QuatSpecPtr& spec, int range = 3, int max_den = 2) {
    std::array<Scalar, 4> c;
    for (auto& s : c) s = coin(0.75) ? scalar(spec->field, range, max_den) : Scalar(spec->field);
    return Quaternion(spec, c[0], c[1], c[2], c[3]);
  }

  Quaternion nonzero_quat(const QuatSpecPtr& spec, int range = 3, int max_den = 2) {
    for (;;) {
      Quaternion q = quat(spec, range, max_den);
      if (!q.is_zero()) return q;
    }
  }

  /// Integer coordinates in [-range, range].
  Quaternion int_quat(const QuatSpecPtr& spec, int range) {
    const FieldSpec& f = spec->field;
    return Quaternion(spec, Scalar(f, uniform(-range, range)), Scalar(f, uniform(-range, range)),
                      Scalar(f, uniform(-range, range)), Scalar(f, uniform(-range, range)));
  }

  Octonion oct(const OctSpecPtr& spec, int range = 3, int max_den = 2) {
    return Octonion(spec, quat(spec->quat, range, max_den), quat(spec->quat, range, max_den));
  }

  QuatPoly quat_poly(const QuatSpecPtr& spec, int degree, int range = 2, int max_den = 1) {
    std::vector<Quaternion> cs;
    for (int n = 0; n < degree; ++n) cs.push_back(quat(spec, range, max_den));
    cs.push_back(nonzero_quat(spec, range, max_den));
    return QuatPoly(spec, std::move(cs));
  }

  OctPoly oct_poly(const OctSpecPtr& spec, int degree, int range = 2, int max_den = 1) {
    std::vector<Octonion> cs;
    for (int n = 0; n <= degree; ++n) cs.push_back(oct(spec, range, max_den));
    return OctPoly(spec, std::move(cs));
  }

  /// Random pure quaternion u; the subfield F(u) is commutative.
  Quaternion pure(const QuatSpecPtr& spec, int range = 2) {
    for (;;) {
      Quaternion q = int_quat(spec, range);
      Quaternion u(spec, Scalar(spec->field), q.coords()[1], q.coords()[2], q.coords()[3]);
      if (!u.is_zero()) return u;
    }
  }

  /// a + b u with small rationals a, b.
  Quaternion in_subfield(const Quaternion& u, int range = 2, int max_den = 2) {
    const FieldSpec& f = u.field();
    return Quaternion(u.spec(), scalar(f, range, max_den)) + u * scalar(f, range, max_den);
  }

  QuatPoly subfield_poly(const Quaternion& u, int degree) {
    std::vector<Quaternion> cs;
    for (int n = 0; n <= degree; ++n) cs.push_back(in_subfield(u));
    return QuatPoly(u.spec(), std::move(cs));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Oracle: quaternion products by summing the 16 basis products of a table,
// independent of the closed-form product in the library.

struct BasisProduct {
  int index;
  Scalar coef;
};

inline BasisProduct basis_product(const QuatSpec& spec, int a, int b) {
  const FieldSpec& f = spec.field;
  const Scalar one(f, 1);
  const Scalar& al = spec.alpha;
  const Scalar& be = spec.beta;
  if (a == 0) return {b, one};
  if (b == 0) return {a, one};
  // rows i, j, k; columns i, j, k
  static const int idx[3][3] = {{0, 3, 2}, {3, 0, 1}, {2, 1, 0}};
  const Scalar coef[3][3] = {
      {al, one, al},
      {-one, be, -be},
      {-al, be, -(al * be)},
  };
  return {idx[a - 1][b - 1], coef[a - 1][b - 1]};
}

using Coords4 = std::array<Scalar, 4>;

inline Coords4 table_mul(const QuatSpec& spec, const Coords4& x, const Coords4& y) {
  Coords4 out{Scalar(spec.field), Scalar(spec.field), Scalar(spec.field), Scalar(spec.field)};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      BasisProduct p = basis_product(spec, a, b);
      out[p.index] += p.coef * x[a] * y[b];
    }
  }
  return out;
}

inline Quaternion table_mul(const Quaternion& x, const Quaternion& y) {
  Coords4 c = table_mul(*x.spec(), x.coords(), y.coords());
  return Quaternion(x.spec(), c[0], c[1], c[2], c[3]);
}

/// Oracle polynomial product: plain convolution over coordinate arrays using
/// the table product.
inline std::vector<Coords4> oracle_poly_mul(const QuatSpec& spec, const std::vector<Coords4>& f,
                                            const std::vector<Coords4>& g) {
  const Scalar zero(spec.field);
  std::vector<Coords4> out(f.size() + g.size() - 1, Coords4{zero, zero, zero, zero});
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      Coords4 p = table_mul(spec, f[a], g[b]);
      for (int n = 0; n < 4; ++n) out[a + b][n] += p[n];
    }
  }
  return out;
}

inline std::vector<Coords4> coords_of(const QuatPoly& f) {
  std::vector<Coords4> out;
  for (const Quaternion& q : f.coeffs()) out.push_back(q.coords());
  return out;
}

inline QuatPoly poly_of(const QuatSpecPtr& spec, const std::vector<Coords4>& cs) {
  std::vector<Quaternion> qs;
  for (const Coords4& c : cs) qs.emplace_back(spec, c[0], c[1], c[2], c[3]);
  return QuatPoly(spec, std::move(qs));
}

/// Oracle composition sum c_i g^i with table-based products.
inline QuatPoly oracle_compose(const QuatPoly& f, const QuatPoly& g) {
  const QuatSpec& spec = *f.spec();
  const Scalar zero(spec.field);
  std::vector<Coords4> acc{Coords4{zero, zero, zero, zero}};
  std::vector<Coords4> power{Quaternion::one(f.spec()).coords()};
  const auto gc = coords_of(g);
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (n > 0) power = oracle_poly_mul(spec, power, gc);
    auto term = oracle_poly_mul(spec, {f.coeffs()[n].coords()}, power);
    if (term.size() > acc.size()) acc.resize(term.size(), Coords4{zero, zero, zero, zero});
    for (std::size_t m = 0; m < term.size(); ++m) {
      for (int c = 0; c < 4; ++c) acc[m][c] += term[m][c];
    }
  }
  return poly_of(f.spec(), acc);
}

// ---------------------------------------------------------------------------
// Oracle: octonion products over raw coordinates, doubling the table product
// (q + r l)(s + t l) = qs + gamma conj(t) r + (t q + r conj(s)) l.

using Coords8 = std::array<Scalar, 8>;

inline Coords4 table_conj(const Coords4& x) { return {x[0], -x[1], -x[2], -x[3]}; }

inline Coords8 oct_table_mul(const OctSpec& spec, const Coords8& x, const Coords8& y) {
  const QuatSpec& h = *spec.quat;
  Coords4 q{x[0], x[1], x[2], x[3]}, r{x[4], x[5], x[6], x[7]};
  Coords4 s{y[0], y[1], y[2], y[3]}, t{y[4], y[5], y[6], y[7]};
  Coords4 a = table_mul(h, q, s), b = table_mul(h, table_conj(t), r);
  Coords4 c = table_mul(h, t, q), d = table_mul(h, r, table_conj(s));
  Coords8 out;
  for (int n = 0; n < 4; ++n) {
    out[n] = a[n] + spec.gamma * b[n];
    out[n + 4] = c[n] + d[n];
  }
  return out;
}

inline std::vector<Coords8> oct_coords_of(const OctPoly& f) {
  std::vector<Coords8> out;
  for (const Octonion& o : f.coeffs()) out.push_back(o.coords());
  return out;
}

inline std::vector<Coords8> oracle_oct_poly_mul(const OctSpec& spec, const std::vector<Coords8>& f,
                                                const std::vector<Coords8>& g) {
  const Scalar zero(spec.field());
  Coords8 z;
  z.fill(zero);
  std::vector<Coords8> out(f.size() + g.size() - 1, z);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      Coords8 p = oct_table_mul(spec, f[a], g[b]);
      for (int n = 0; n < 8; ++n) out[a + b][n] += p[n];
    }
  }
  return out;
}

/// Oracle composition for octonion polynomials, returned as coordinates.
inline std::vector<Coords8> oracle_oct_compose(const OctPoly& f, const OctPoly& g) {
  const OctSpec& spec = *f.spec();
  Coords8 z;
  z.fill(Scalar(spec.field()));
  std::vector<Coords8> acc{z};
  std::vector<Coords8> power{Octonion::one(f.spec()).coords()};
  const auto gc = oct_coords_of(g);
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
    if (n > 0) power = oracle_oct_poly_mul(spec, power, gc);
    auto term = oracle_oct_poly_mul(spec, {f.coeffs()[n].coords()}, power);
    if (term.size() > acc.size()) acc.resize(term.size(), z);
    for (std::size_t m = 0; m < term.size(); ++m) {
      for (int c = 0; c < 8; ++c) acc[m][c] += term[m][c];
    }
  }
  while (acc.size() > 1) {
    bool zero = true;
    for (const Scalar& c : acc.back()) zero = zero && c.is_zero();
    if (!zero) break;
    acc.pop_back();
  }
  return acc;
}

}  // namespace qdyn::testing
