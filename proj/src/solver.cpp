#include "qdyn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/constants/constants.hpp>
#include <stdexcept>

#include "qdyn/error.hpp"

namespace qdyn {

namespace {

// ---------------------------------------------------------------------------
// Working precision for Real temporaries.

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real pow2(int e) { return boost::multiprecision::ldexp(Real(1), e); }

// ---------------------------------------------------------------------------
// Integer polynomials for the exact factor search (ascending coefficients).

using IntPoly = std::vector<Integer>;


Integer ieval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t n = p.size(); n-- > 0;) acc = acc * x + p[n];
  return acc;
}

/// p == q * d with integer q; returns false when d does not divide p over Z.
bool divide_exact(const IntPoly& p, const IntPoly& d, IntPoly& q) {
  if (d.size() > p.size()) return false;
  IntPoly rem = p;
  q.assign(p.size() - d.size() + 1, Integer(0));
  const Integer& lead = d.back();
  for (std::size_t n = q.size(); n-- > 0;) {
    const Integer& top = rem[n + d.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    Integer f = top / lead;
    q[n] = f;
    for (std::size_t m = 0; m < d.size(); ++m) rem[n + m] -= f * d[m];
  }
  for (const Integer& r : rem) {
    if (sgn(r) != 0) return false;
  }
  return true;
}

constexpr double kDivisorSearchLimit = 1e15;

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n.get_d() > kDivisorSearchLimit) {
    throw MathError("bounded factor search limit exceeded (|" + n.get_str() +
                    "| too large); use numeric mode");
  }
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer e = n / d;
      if (e != d) large.push_back(e);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly primitive_integer_poly(const CentralPoly& c) {
  Integer den = 1;
  for (const Scalar& s : c.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational_part().get_den_mpz_t());
  }
  IntPoly p;
  Integer g = 0;
  for (const Scalar& s : c.coeffs()) {
    Rational v = s.rational_part() * den;
    p.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.back().get_mpz_t());
  }
  if (sgn(p.back()) < 0) g = -g;
  for (Integer& v : p) v /= g;
  return p;
}

/// 1 + max |a_i / a_n|, an upper bound on root moduli.
Rational cauchy_bound(const IntPoly& p) {
  Rational best = 0;
  for (std::size_t n = 0; n + 1 < p.size(); ++n) {
    Rational r(abs(p[n]), abs(p.back()));
    r.canonicalize();
    if (r > best) best = r;
  }
  return best + 1;
}

struct ExactFactors {
  std::vector<Rational> linear_roots;
  /// a x^2 + b x + c, irreducible over Q.
  std::vector<std::array<Integer, 3>> quadratics;
  IntPoly rest;
};

void strip_rational_roots(IntPoly& p, ExactFactors& out) {
  // Roots at zero first so that the constant term is nonzero afterwards.
  if (p.size() > 1 && sgn(p[0]) == 0) {
    out.linear_roots.push_back(0);
    while (p.size() > 1 && sgn(p[0]) == 0) p.erase(p.begin());
  }
  if (p.size() <= 1) return;
  for (const Integer& num : positive_divisors(p[0])) {
    for (const Integer& den : positive_divisors(p.back())) {
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (gcd != 1) continue;
      for (int s : {1, -1}) {
        if (p.size() <= 1) return;
        IntPoly lin = {-s * num, den};
        IntPoly q;
        bool found = false;
        while (p.size() > 1 && divide_exact(p, lin, q)) {
          p = q;
          found = true;
        }
        if (found) out.linear_roots.push_back(Rational(s * num, den));
      }
    }
  }
}

/// Kronecker-style search for a quadratic factor of p, which has no rational roots.
bool find_quadratic(const IntPoly& p, std::array<Integer, 3>& factor) {
  const Integer p0 = p[0];
  const Integer p1 = ieval(p, 1);
  const Integer pm1 = ieval(p, -1);
  const Integer p2 = ieval(p, 2);
  const Rational bound = cauchy_bound(p);
  const Rational bound2 = bound * bound;
  const auto lead_divs = positive_divisors(p.back());
  const auto c_divs = positive_divisors(p0);
  const auto v_divs = positive_divisors(p1);
  for (const Integer& a : lead_divs) {
    for (const Integer& cabs : c_divs) {
      for (int cs : {1, -1}) {
        Integer c = cs * cabs;
        if (Rational(abs(c), a) > bound2) continue;
        for (const Integer& vabs : v_divs) {
          for (int vs : {1, -1}) {
            Integer b = vs * vabs - a - c;
            if (Rational(abs(b), a) > 2 * bound) continue;
            Integer qm1 = a - b + c;
            Integer q2 = 4 * a + 2 * b + c;
            if (sgn(qm1) == 0 || sgn(q2) == 0) continue;
            if (!mpz_divisible_p(pm1.get_mpz_t(), qm1.get_mpz_t())) continue;
            if (!mpz_divisible_p(p2.get_mpz_t(), q2.get_mpz_t())) continue;
            IntPoly quot;
            if (divide_exact(p, {c, b, a}, quot)) {
              factor = {a, b, c};
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

ExactFactors factor_low_degree(IntPoly p) {
  ExactFactors out;
  strip_rational_roots(p, out);
  while (p.size() >= 3) {
    std::array<Integer, 3> q;
    if (p.size() == 3) {
      q = {p[2], p[1], p[0]};
    } else if (!find_quadratic(p, q)) {
      break;
    }
    IntPoly d = {q[2], q[1], q[0]};
    IntPoly quot;
    while (p.size() >= 3 && divide_exact(p, d, quot)) p = quot;
    out.quadratics.push_back(q);
  }
  out.rest = p;
  return out;
}

// ---------------------------------------------------------------------------
// Numeric quaternions with real coordinates.

struct RQuat {
  std::array<Real, 4> x;
};

struct RAlgebra {
  Real alpha;
  Real beta;
};

RQuat rquat(const Quaternion& q, unsigned bits) {
  RQuat out;
  for (int n = 0; n < 4; ++n) out.x[n] = to_real(q.coords()[n], bits);
  return out;
}

RQuat radd(const RQuat& a, const RQuat& b) {
  RQuat out;
  for (int n = 0; n < 4; ++n) out.x[n] = a.x[n] + b.x[n];
  return out;
}

RQuat rscale(const RQuat& a, const Real& s) {
  RQuat out;
  for (int n = 0; n < 4; ++n) out.x[n] = a.x[n] * s;
  return out;
}

RQuat rmul(const RAlgebra& alg, const RQuat& p, const RQuat& q) {
  const Real& al = alg.alpha;
  const Real& be = alg.beta;
  const auto& [a1, b1, c1, e1] = p.x;
  const auto& [a2, b2, c2, e2] = q.x;
  RQuat out;
  out.x[0] = a1 * a2 + al * b1 * b2 + be * c1 * c2 - al * be * e1 * e2;
  out.x[1] = a1 * b2 + b1 * a2 - be * (c1 * e2 - e1 * c2);
  out.x[2] = a1 * c2 + c1 * a2 + al * (b1 * e2 - e1 * b2);
  out.x[3] = a1 * e2 + e1 * a2 + b1 * c2 - c1 * b2;
  return out;
}

Real rnorm_form(const RAlgebra& alg, const RQuat& q) {
  return q.x[0] * q.x[0] - alg.alpha * q.x[1] * q.x[1] - alg.beta * q.x[2] * q.x[2] +
         alg.alpha * alg.beta * q.x[3] * q.x[3];
}

/// Euclidean size of the coordinate vector.
Real rmag(const RQuat& q) {
  Real s = 0;
  for (const Real& v : q.x) s += v * v;
  return sqrt(s);
}

RQuat reval(const RAlgebra& alg, const std::vector<RQuat>& coeffs, const RQuat& lambda) {
  RQuat acc{{Real(0), Real(0), Real(0), Real(0)}};
  RQuat pw{{Real(1), Real(0), Real(0), Real(0)}};
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) pw = rmul(alg, pw, lambda);
    acc = radd(acc, rmul(alg, coeffs[n], pw));
  }
  return acc;
}

ApproxQuaternion to_approx(const RQuat& q) { return ApproxQuaternion{q.x}; }

// ---------------------------------------------------------------------------
// Complex arithmetic on Real for the root iteration.

struct Cx {
  Real re;
  Real im;
};

Cx cadd(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx csub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx cmul(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx cdiv(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real cabs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

/// p(z) and p'(z) by Horner.
void horner(const std::vector<Real>& p, const Cx& z, Cx& value, Cx& deriv) {
  value = {Real(0), Real(0)};
  deriv = {Real(0), Real(0)};
  for (std::size_t n = p.size(); n-- > 0;) {
    deriv = cadd(cmul(deriv, z), value);
    value = cadd(cmul(value, z), Cx{p[n], Real(0)});
  }
}

Real real_eval(const std::vector<Real>& p, const Real& x) {
  Real acc = 0;
  for (std::size_t n = p.size(); n-- > 0;) acc = acc * x + p[n];
  return acc;
}

std::vector<Real> derivative(const std::vector<Real>& p) {
  std::vector<Real> d;
  for (std::size_t n = 1; n < p.size(); ++n) d.push_back(p[n] * Real(static_cast<unsigned>(n)));
  return d;
}

bool class_less(const ConjClass& a, const ConjClass& b) {
  if (a.exact && b.exact) {
    int t = compare(a.trace, b.trace);
    if (t != 0) return t < 0;
    return compare(a.norm, b.norm) < 0;
  }
  if (a.trace_approx != b.trace_approx) return a.trace_approx < b.trace_approx;
  return a.norm_approx < b.norm_approx;
}

/// Definite algebras over the real embedding (alpha, beta < 0) have no
/// non-central elements whose minimal polynomial splits over R.
bool empty_in_definite_algebra(const QuatSpec& spec, const ConjClass& cls) {
  if (cls.central || !spec.field.has_real_embedding()) return false;
  if (spec.alpha.sign() >= 0 || spec.beta.sign() >= 0) return false;
  if (cls.exact) return (cls.trace * cls.trace - Scalar(spec.field, 4) * cls.norm).sign() > 0;
  return cls.trace_approx * cls.trace_approx - 4 * cls.norm_approx > 0;
}

ClassSolution solve_exact(const QuatPoly& g, const ConjClass& cls) {
  ClassSolution out;
  out.cls = cls;
  const auto& spec = g.spec();
  if (cls.central) {
    Quaternion mu(spec, cls.center);
    if (peval(g, mu).is_zero()) {
      out.kind = ClassSolution::Kind::Point;
      out.point = mu;
    } else {
      out.kind = ClassSolution::Kind::Anomaly;
      out.report = "central candidate " + cls.center.str() + " is not a root";
    }
    return out;
  }
  if (empty_in_definite_algebra(*spec, cls)) {
    out.kind = ClassSolution::Kind::None;
    out.report = "class has no elements in a definite algebra";
    return out;
  }
  // lambda^k = p_k lambda + q_k on the class, so g(lambda) = A lambda + B.
  const FieldSpec& field = spec->field;
  Scalar p(field, 0), q(field, 1);
  Quaternion a_sum(spec), b_sum(spec);
  for (const Quaternion& c : g.coeffs()) {
    a_sum += c * p;
    b_sum += c * q;
    Scalar p_next = cls.trace * p + q;
    Scalar q_next = -cls.norm * p;
    p = std::move(p_next);
    q = std::move(q_next);
  }
  if (a_sum.is_zero()) {
    if (b_sum.is_zero()) {
      out.kind = ClassSolution::Kind::Sphere;
    } else {
      out.kind = ClassSolution::Kind::Anomaly;
      out.report = "reduced equation 0 = " + b_sum.str() + " has no solution";
    }
    return out;
  }
  Quaternion lambda = -(a_sum.inv() * b_sum);
  if (!char_class_member(lambda, cls.trace, cls.norm)) {
    out.kind = ClassSolution::Kind::Anomaly;
    out.report = "solution " + lambda.str() + " of the reduced equation lies outside the class";
    return out;
  }
  if (!peval(g, lambda).is_zero()) {
    out.kind = ClassSolution::Kind::Anomaly;
    out.report = "solution " + lambda.str() + " does not satisfy g";
    return out;
  }
  out.kind = ClassSolution::Kind::Point;
  out.point = lambda;
  return out;
}

ClassSolution solve_numeric(const QuatPoly& g, const ConjClass& cls, const NumericOptions& opt) {
  PrecisionScope scope(opt.precision_bits);
  const unsigned bits = opt.precision_bits;
  ClassSolution out;
  out.cls = cls;
  const auto& spec = g.spec();
  RAlgebra alg{to_real(spec->alpha, bits), to_real(spec->beta, bits)};
  std::vector<RQuat> coeffs;
  Real cmax = 0;
  for (const Quaternion& c : g.coeffs()) {
    coeffs.push_back(rquat(c, bits));
    cmax = std::max(cmax, rmag(coeffs.back()));
  }
  const Real tol = Real(opt.tolerance) * (1 + cmax);

  auto accept = [&](const RQuat& lambda) {
    Real res = rmag(reval(alg, coeffs, lambda));
    out.residual = res.convert_to<double>();
    if (res <= tol) {
      out.kind = ClassSolution::Kind::Point;
      out.approx_point = to_approx(lambda);
    } else {
      out.kind = ClassSolution::Kind::Anomaly;
      out.report = "residual " + res.str(6) + " above tolerance";
    }
  };

  if (cls.central) {
    accept(RQuat{{cls.center_approx, Real(0), Real(0), Real(0)}});
    return out;
  }
  if (empty_in_definite_algebra(*spec, cls)) {
    out.kind = ClassSolution::Kind::None;
    out.report = "class has no elements in a definite algebra";
    return out;
  }
  const Real& t = cls.trace_approx;
  const Real& n = cls.norm_approx;
  Real p = 0, q = 1;
  RQuat a_sum{{Real(0), Real(0), Real(0), Real(0)}};
  RQuat b_sum = a_sum;
  for (const RQuat& c : coeffs) {
    a_sum = radd(a_sum, rscale(c, p));
    b_sum = radd(b_sum, rscale(c, q));
    Real p_next = t * p + q;
    Real q_next = -n * p;
    p = p_next;
    q = q_next;
  }
  if (rmag(a_sum) <= tol) {
    if (rmag(b_sum) <= tol) {
      out.kind = ClassSolution::Kind::Sphere;
    } else {
      out.kind = ClassSolution::Kind::Anomaly;
      out.report = "reduced equation degenerate with |B| = " + rmag(b_sum).str(6);
    }
    return out;
  }
  Real a_norm = rnorm_form(alg, a_sum);
  if (abs(a_norm) <= tol * tol) {
    out.kind = ClassSolution::Kind::Anomaly;
    out.report = "leading coefficient of the reduced equation is (numerically) singular";
    return out;
  }
  RQuat a_inv{{a_sum.x[0] / a_norm, -a_sum.x[1] / a_norm, -a_sum.x[2] / a_norm,
               -a_sum.x[3] / a_norm}};
  RQuat lambda = rscale(rmul(alg, a_inv, b_sum), Real(-1));
  RQuat member = radd(radd(rmul(alg, lambda, lambda), rscale(lambda, -t)),
                      RQuat{{n, Real(0), Real(0), Real(0)}});
  if (rmag(member) > tol * (1 + abs(t) + abs(n))) {
    out.kind = ClassSolution::Kind::Anomaly;
    out.report = "solution of the reduced equation lies outside the class";
    return out;
  }
  accept(lambda);
  return out;
}

bool same_approx_point(const ApproxQuaternion& a, const ApproxQuaternion& b, double tol) {
  Real d = 0;
  for (int n = 0; n < 4; ++n) d += (a.coords[n] - b.coords[n]) * (a.coords[n] - b.coords[n]);
  return sqrt(d) <= Real(tol);
}

ClassExtraction extract_exact(const CentralPoly& c) {
  if (!c.field().is_rationals()) {
    throw MathError("exact class extraction requires F = Q (got " + c.field().name() +
                    "); use numeric mode");
  }
  const FieldSpec field = c.field();
  ClassExtraction out{{}, CentralPoly(field)};
  if (c.is_constant()) {
    out.unresolved = c;
    return out;
  }
  ExactFactors f = factor_low_degree(primitive_integer_poly(c));
  for (const Rational& mu : f.linear_roots) {
    ConjClass cls;
    cls.exact = true;
    cls.central = true;
    cls.center = Scalar(field, mu);
    cls.trace = Scalar(field, 2 * mu);
    cls.norm = Scalar(field, mu * mu);
    out.classes.push_back(cls);
  }
  for (const auto& [a, b, cc] : f.quadratics) {
    ConjClass cls;
    cls.exact = true;
    cls.trace = Scalar(field, Rational(-b, a));
    cls.norm = Scalar(field, Rational(cc, a));
    cls.center = Scalar(field);
    out.classes.push_back(cls);
  }
  for (ConjClass& cls : out.classes) {
    cls.trace_approx = to_real(cls.trace, 64);
    cls.norm_approx = to_real(cls.norm, 64);
  }
  std::sort(out.classes.begin(), out.classes.end(), class_less);
  std::vector<Scalar> rest;
  for (const Integer& v : f.rest) rest.emplace_back(field, Rational(v));
  out.unresolved = CentralPoly(field, std::move(rest));
  return out;
}

ClassExtraction extract_numeric(const CentralPoly& c, const NumericOptions& opt) {
  if (!c.field().has_real_embedding()) {
    throw MathError("numeric class extraction needs a real embedding of " + c.field().name());
  }
  PrecisionScope scope(opt.precision_bits);
  const unsigned bits = opt.precision_bits;
  ClassExtraction out{{}, CentralPoly(c.field(), {Scalar(c.field(), 1)})};
  if (c.is_constant()) {
    out.unresolved = c;
    return out;
  }
  std::vector<Real> p;
  for (const Scalar& s : c.coeffs()) p.push_back(to_real(s, bits));
  std::vector<ComplexRoot> zs = aberth_roots(p, bits, opt.max_iterations);

  const Real cluster = pow2(-static_cast<int>(bits) / 5);
  const std::vector<Real> dp = derivative(p);
  std::vector<ConjClass> found;
  for (const ComplexRoot& z : zs) {
    Real mag = sqrt(z.re * z.re + z.im * z.im);
    ConjClass cls;
    cls.exact = false;
    cls.precision = bits;
    if (abs(z.im) <= cluster * (1 + mag)) {
      // Real roots of C_g are even-multiplicity in definite algebras; polish
      // them as roots of C_g'.
      Real mu = z.re;
      for (int it = 0; it < 50 && dp.size() > 1; ++it) {
        Real d2 = real_eval(derivative(dp), mu);
        if (d2 == 0) break;
        Real step = real_eval(dp, mu) / d2;
        if (abs(step) > cluster * (1 + abs(mu))) break;
        mu -= step;
        if (abs(step) <= pow2(-static_cast<int>(bits) + 4) * (1 + abs(mu))) break;
      }
      if (abs(real_eval(p, mu)) > abs(real_eval(p, z.re))) mu = z.re;
      cls.central = true;
      cls.center_approx = mu;
      cls.trace_approx = 2 * mu;
      cls.norm_approx = mu * mu;
    } else if (z.im > 0) {
      cls.trace_approx = 2 * z.re;
      cls.norm_approx = z.re * z.re + z.im * z.im;
    } else {
      continue;
    }
    found.push_back(cls);
  }
  std::sort(found.begin(), found.end(), class_less);
  for (const ConjClass& cls : found) {
    if (!out.classes.empty()) {
      const ConjClass& last = out.classes.back();
      Real scale = 1 + abs(cls.trace_approx) + abs(cls.norm_approx);
      if (last.central == cls.central &&
          abs(last.trace_approx - cls.trace_approx) <= cluster * scale &&
          abs(last.norm_approx - cls.norm_approx) <= cluster * scale) {
        continue;
      }
    }
    out.classes.push_back(cls);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CentralPoly::CentralPoly(FieldSpec field, std::vector<Scalar> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (const Scalar& s : c_) {
    if (!(s.field() == field_)) throw SpecMismatch("central coefficient outside " + field_.name());
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string CentralPoly::str() const {
  std::string out;
  for (std::size_t n = c_.size(); n-- > 0;) {
    const Scalar& s = c_[n];
    if (s.is_zero()) continue;
    std::string mono = n == 0 ? "" : (n == 1 ? "x" : "x^" + std::to_string(n));
    std::string term;
    if (mono.empty()) {
      term = s.str();
    } else if (s.is_one()) {
      term = mono;
    } else if ((-s).is_one()) {
      term = "-" + mono;
    } else if (s.is_monomial()) {
      term = s.str() + "*" + mono;
    } else {
      term = "(" + s.str() + ")*" + mono;
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

std::string ConjClass::trace_str() const {
  return exact ? trace.str() : trace_approx.str(std::max(6u, precision * 3 / 10 - 2));
}

std::string ConjClass::norm_str() const {
  return exact ? norm.str() : norm_approx.str(std::max(6u, precision * 3 / 10 - 2));
}

std::array<std::string, 4> ApproxQuaternion::coord_strs(int digits) const {
  std::array<std::string, 4> out;
  for (int n = 0; n < 4; ++n) out[n] = coords[n].str(digits);
  return out;
}

std::string ApproxQuaternion::str(int digits) const {
  static const char* basis[4] = {"", "*i", "*j", "*k"};
  std::string out;
  for (int n = 0; n < 4; ++n) {
    if (coords[n] == 0) continue;
    std::string v = coords[n].str(digits);
    if (out.empty()) {
      out = v + basis[n];
    } else if (v.front() == '-') {
      out += " - " + v.substr(1) + basis[n];
    } else {
      out += " + " + v + basis[n];
    }
  }
  return out.empty() ? "0" : out;
}

const char* kind_name(ClassSolution::Kind kind) {
  switch (kind) {
    case ClassSolution::Kind::Point:
      return "point";
    case ClassSolution::Kind::Sphere:
      return "sphere";
    case ClassSolution::Kind::None:
      return "none";
    case ClassSolution::Kind::Anomaly:
      return "anomaly";
  }
  return "?";
}

QuatPoly conj_poly(const QuatPoly& g) {
  std::vector<Quaternion> cs;
  cs.reserve(g.coeffs().size());
  for (const Quaternion& c : g.coeffs()) cs.push_back(c.conj());
  return QuatPoly(g.spec(), std::move(cs));
}

CentralPoly companion(const QuatPoly& g) {
  if (g.is_zero()) throw MathError("companion polynomial of the zero polynomial");
  QuatPoly c = conj_poly(g) * g;
  std::vector<Scalar> out;
  for (const Quaternion& q : c.coeffs()) {
    if (!q.is_central()) {
      throw std::logic_error("companion polynomial has a non-central coefficient " + q.str());
    }
    out.push_back(q.real());
  }
  return CentralPoly(g.spec()->field, std::move(out));
}

ClassExtraction extract_classes(const CentralPoly& c, SolveMode mode,
                                const NumericOptions& options) {
  return mode == SolveMode::Exact ? extract_exact(c) : extract_numeric(c, options);
}

ClassSolution solve_in_class(const QuatPoly& g, const ConjClass& cls,
                             const NumericOptions& options) {
  return cls.exact ? solve_exact(g, cls) : solve_numeric(g, cls, options);
}

std::vector<ClassSolution> RootsResult::points() const {
  std::vector<ClassSolution> out;
  for (const ClassSolution& s : solutions) {
    if (s.kind == ClassSolution::Kind::Point) out.push_back(s);
  }
  return out;
}

RootsResult roots(const QuatPoly& g, SolveMode mode, const NumericOptions& options) {
  if (g.degree() < 1) throw MathError("root finding needs a polynomial of degree >= 1");
  RootsResult out{companion(g), ClassExtraction{{}, CentralPoly(g.spec()->field)}, {}};
  out.extraction = extract_classes(out.companion, mode, options);
  for (const ConjClass& cls : out.extraction.classes) {
    ClassSolution s = solve_in_class(g, cls, options);
    if (s.kind == ClassSolution::Kind::Point) {
      bool duplicate = false;
      for (const ClassSolution& prev : out.solutions) {
        if (prev.kind != ClassSolution::Kind::Point) continue;
        if (s.point && prev.point && *s.point == *prev.point) duplicate = true;
        if (s.approx_point && prev.approx_point &&
            same_approx_point(*s.approx_point, *prev.approx_point, options.tolerance)) {
          duplicate = true;
        }
      }
      if (duplicate) continue;
    }
    out.solutions.push_back(std::move(s));
  }
  return out;
}

std::vector<ComplexRoot> aberth_roots(const std::vector<Real>& coeffs_in, unsigned bits,
                                      unsigned max_iterations) {
  PrecisionScope scope(bits);
  std::vector<Real> p = coeffs_in;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() <= 1) return {};
  std::vector<ComplexRoot> out;
  // Exact zero roots.
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  for (std::size_t n = 0; n < zeros; ++n) out.push_back({Real(0), Real(0)});
  p.erase(p.begin(), p.begin() + static_cast<long>(zeros));
  const std::size_t deg = p.size() - 1;
  if (deg == 0) return out;

  // Starting points on a circle of the geometric-mean root radius.
  Real radius = pow(abs(p[0] / p[deg]), Real(1) / Real(static_cast<unsigned>(deg)));
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Cx> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    Real angle = 2 * Real(pi) * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(deg)) +
                 Real(0.4);
    z[k] = {radius * cos(angle), radius * sin(angle)};
  }

  const Real eps = pow2(-static_cast<int>(bits) + 8);
  const Real accept = pow2(-static_cast<int>(bits) / 8);
  Real best = -1;
  unsigned stalled = 0;
  Real last = 0;
  for (unsigned it = 0; it < max_iterations; ++it) {
    Real worst = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      Cx value, deriv;
      horner(p, z[k], value, deriv);
      if (value.re == 0 && value.im == 0) continue;
      Cx w = cdiv(value, deriv);
      Cx s{Real(0), Real(0)};
      for (std::size_t m = 0; m < deg; ++m) {
        if (m == k) continue;
        Cx diff = csub(z[k], z[m]);
        if (diff.re == 0 && diff.im == 0) diff.re = eps;
        s = cadd(s, cdiv(Cx{Real(1), Real(0)}, diff));
      }
      Cx denom = csub(Cx{Real(1), Real(0)}, cmul(w, s));
      Cx delta = (denom.re == 0 && denom.im == 0) ? w : cdiv(w, denom);
      z[k] = csub(z[k], delta);
      Real rel = cabs(delta) / (1 + cabs(z[k]));
      if (rel > worst) worst = rel;
    }
    last = worst;
    if (worst <= eps) break;
    // Clustered roots converge only linearly; stop once progress stalls in the tail.
    if (worst > accept) continue;
    if (best < 0 || worst < best / 2) {
      best = worst;
      stalled = 0;
    } else if (++stalled > 25) {
      break;
    }
  }
  if (last > accept) {
    throw MathError("root iteration did not converge (last relative step " + last.str(6) + ")");
  }
  for (const Cx& r : z) out.push_back({r.re, r.im});
  return out;
}

}  // namespace qdyn
