#pragma once

// Roots of quaternion left polynomials through the companion polynomial
// C_g = conj(g) * g. Its roots determine the conjugacy classes that can hold
// roots of g; inside each class g(x) = 0 collapses to a linear equation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qdyn/poly.hpp"
#include "qdyn/quaternion.hpp"
#include "qdyn/scalar.hpp"

namespace qdyn {

/// Polynomial with coefficients in the center F, ascending order.
class CentralPoly {
 public:
  explicit CentralPoly(FieldSpec field) : field_(field) {}
  CentralPoly(FieldSpec field, std::vector<Scalar> coeffs);

  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  /// "x^4 + 3*x^2 + 2".
  std::string str() const;
  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

 private:
  FieldSpec field_;
  std::vector<Scalar> c_;
};

enum class SolveMode { Exact, Numeric };

struct NumericOptions {
  unsigned precision_bits = 128;
  /// Accept a numeric point when |g(lambda)| <= tolerance * (1 + max |c_i|).
  double tolerance = 1e-9;
  unsigned max_iterations = 2000;
};

/// A conjugacy class {t : t^2 - T t + N = 0}. `central` marks the candidate
/// (2 mu, mu^2) coming from a root mu of C_g in F (or in R, numerically).
struct ConjClass {
  bool exact = true;
  bool central = false;
  Scalar trace;
  Scalar norm;
  /// Exact mode: the central root mu itself.
  Scalar center;
  Real trace_approx;
  Real norm_approx;
  Real center_approx;
  unsigned precision = 0;

  std::string trace_str() const;
  std::string norm_str() const;
};

/// Numeric quaternion over 1, i, j, k.
struct ApproxQuaternion {
  std::array<Real, 4> coords;
  std::array<std::string, 4> coord_strs(int digits = 20) const;
  std::string str(int digits = 20) const;
};

struct ClassSolution {
  enum class Kind { Point, Sphere, None, Anomaly };

  Kind kind = Kind::None;
  ConjClass cls;
  std::optional<Quaternion> point;
  std::optional<ApproxQuaternion> approx_point;
  /// Numeric mode: |g(lambda)| for points.
  double residual = 0.0;
  std::string report;
};

const char* kind_name(ClassSolution::Kind kind);

struct ClassExtraction {
  std::vector<ConjClass> classes;
  /// Exact mode: product of the irreducible factors of degree >= 3 left over by
  /// the bounded factor search. Their roots are not in F, so they hold no roots
  /// of g over the exact algebra; a numeric run over R can still resolve them.
  CentralPoly unresolved;
};

QuatPoly conj_poly(const QuatPoly& g);

/// conj(g) * g with its coefficients coerced into F.
CentralPoly companion(const QuatPoly& g);

/// Exact mode requires F = Q; numeric mode requires a real embedding.
ClassExtraction extract_classes(const CentralPoly& c, SolveMode mode,
                                const NumericOptions& options = {});

ClassSolution solve_in_class(const QuatPoly& g, const ConjClass& cls,
                             const NumericOptions& options = {});

struct RootsResult {
  CentralPoly companion;
  ClassExtraction extraction;
  /// One entry per class, in class order. Duplicate points are dropped.
  std::vector<ClassSolution> solutions;

  std::vector<ClassSolution> points() const;
};

RootsResult roots(const QuatPoly& g, SolveMode mode, const NumericOptions& options = {});

/// Roots of a real polynomial (ascending coefficients) by Aberth-Ehrlich
/// iteration at `bits` of precision. Throws MathError on non-convergence.
struct ComplexRoot {
  Real re;
  Real im;
};
std::vector<ComplexRoot> aberth_roots(const std::vector<Real>& coeffs, unsigned bits,
                                      unsigned max_iterations);

}  // namespace qdyn
