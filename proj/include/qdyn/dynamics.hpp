#pragma once

// Orbits, fixed points and periodic points of left polynomials.
//
// f^{o n}(lambda) evaluates the n-fold composed polynomial; f^{*n}(lambda)
// evaluates f n times in a row. The two agree when lambda commutes with the
// earlier iterates, which is what certification relies on.

#include <optional>
#include <string>
#include <vector>

#include "qdyn/poly.hpp"
#include "qdyn/solver.hpp"

namespace qdyn {

enum class Semantics { Compose, Eval };

template <class E>
struct OrbitReport {
  Semantics semantics;
  /// points[n] is f^{o(n+1)}(lambda) or f^{*(n+1)}(lambda).
  std::vector<E> points;
  std::vector<bool> commutes_with_start;
};

template <class E>
OrbitReport<E> orbit(const Poly<E>& f, const E& lambda, unsigned n_max, Semantics semantics,
                     std::size_t degree_cap = kDefaultDegreeCap);

/// Roots of f - x; every exact point is re-checked against f(lambda) = lambda.
/// Throws MathError when f == x.
RootsResult fixed_points(const QuatPoly& f, SolveMode mode, const NumericOptions& options = {});

struct PeriodicVerdict {
  enum class Status { CertifiedPeriodic, FixedPoint, RefutedAt, Inconclusive };

  unsigned r = 1;
  Status status = Status::Inconclusive;
  /// For RefutedAt: f^{o(n r)}(lambda) != lambda at this n.
  unsigned refuted_at = 0;

  bool r_fixed = false;
  /// f^{o r}(lambda), rendered.
  std::string value_at_r;
  /// First t < r with lambda not commuting with f^{*t}(lambda).
  std::optional<unsigned> non_commuting_t;
  /// (n, f^{o(n r)}(lambda) == lambda) for each n checked during refutation.
  std::vector<std::pair<unsigned, bool>> checks;
  std::string note;
};

const char* status_name(PeriodicVerdict::Status status);

/// Commutation-based certification (quaternions) followed by bounded exact
/// refutation for n = 2..n_max. Over octonions the certification step does not
/// apply and only refutation is attempted.
template <class E>
PeriodicVerdict certify_periodic(const Poly<E>& f, const E& lambda, unsigned r, unsigned n_max,
                                 std::size_t degree_cap = kDefaultDegreeCap);

struct OctonionFixedReport {
  bool fixed = false;
  /// (n, f^{o n}(lambda) == lambda) for n = 2..n_max.
  std::vector<std::pair<unsigned, bool>> checks;
  std::vector<std::string> values;
  std::optional<unsigned> first_failure;
  std::string note;
};

OctonionFixedReport octonion_fixed_check(const OctPoly& f, const Octonion& lambda, unsigned n_max,
                                         std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace qdyn
