#include "qdyn/dynamics.hpp"

#include <stdexcept>
#include <type_traits>

namespace qdyn {

template <class E>
OrbitReport<E> orbit(const Poly<E>& f, const E& lambda, unsigned n_max, Semantics semantics,
                     std::size_t degree_cap) {
  OrbitReport<E> out{semantics, {}, {}};
  if (semantics == Semantics::Eval) {
    E v = lambda;
    for (unsigned n = 0; n < n_max; ++n) {
      v = peval(f, v);
      out.points.push_back(v);
    }
  } else {
    Poly<E> iterate = f;
    for (unsigned n = 0; n < n_max; ++n) {
      if (n > 0) iterate = compose_step(f, iterate, degree_cap);
      out.points.push_back(peval(iterate, lambda));
    }
  }
  for (const E& p : out.points) out.commutes_with_start.push_back(commutes(lambda, p));
  return out;
}

template OrbitReport<Quaternion> orbit(const QuatPoly&, const Quaternion&, unsigned, Semantics,
                                       std::size_t);
template OrbitReport<Octonion> orbit(const OctPoly&, const Octonion&, unsigned, Semantics,
                                     std::size_t);

RootsResult fixed_points(const QuatPoly& f, SolveMode mode, const NumericOptions& options) {
  QuatPoly g = f - QuatPoly::x(f.spec());
  if (g.is_zero()) throw MathError("f - x is identically zero: every point is fixed");
  RootsResult result = roots(g, mode, options);
  for (const ClassSolution& s : result.solutions) {
    if (s.point && !(peval(f, *s.point) == *s.point)) {
      throw std::logic_error("fixed point " + s.point->str() + " fails f(lambda) = lambda");
    }
  }
  return result;
}

const char* status_name(PeriodicVerdict::Status status) {
  switch (status) {
    case PeriodicVerdict::Status::CertifiedPeriodic:
      return "CertifiedPeriodic";
    case PeriodicVerdict::Status::FixedPoint:
      return "FixedPoint";
    case PeriodicVerdict::Status::RefutedAt:
      return "RefutedAt";
    case PeriodicVerdict::Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

template <class E>
PeriodicVerdict certify_periodic(const Poly<E>& f, const E& lambda, unsigned r, unsigned n_max,
                                 std::size_t degree_cap) {
  if (r == 0) throw std::invalid_argument("period must be positive");
  constexpr bool associative = std::is_same_v<E, Quaternion>;
  PeriodicVerdict v;
  v.r = r;

  // Composition iterates f^{o k}, built one outer step at a time.
  Poly<E> iterate = f;
  unsigned k = 1;
  auto advance_to = [&](unsigned target) {
    for (; k < target; ++k) iterate = compose_step(f, iterate, degree_cap);
  };

  try {
    advance_to(r);
  } catch (const DegreeCapError& e) {
    v.note = std::string("could not form f^o") + std::to_string(r) + ": " + e.what();
    return v;
  }
  E at_r = peval(iterate, lambda);
  v.value_at_r = at_r.str();
  v.r_fixed = at_r == lambda;
  if (!v.r_fixed) {
    v.note = "not r-fixed: f^o" + std::to_string(r) + "(lambda) != lambda";
    return v;
  }

  if constexpr (associative) {
    if (r == 1) {
      v.status = PeriodicVerdict::Status::FixedPoint;
      v.note = "f(lambda) = lambda; commutation hypothesis is vacuous for r = 1";
      return v;
    }
    E star = lambda;
    for (unsigned t = 1; t < r; ++t) {
      star = peval(f, star);
      if (!commutes(lambda, star)) {
        v.non_commuting_t = t;
        break;
      }
    }
    if (!v.non_commuting_t) {
      v.status = PeriodicVerdict::Status::CertifiedPeriodic;
      v.note = "lambda commutes with f^*t(lambda) for all t < r";
      return v;
    }
  }

  for (unsigned n = 2; n <= n_max; ++n) {
    try {
      advance_to(n * r);
    } catch (const DegreeCapError& e) {
      v.note = "degree cap reached before n = " + std::to_string(n) + ": " + e.what();
      return v;
    }
    bool holds = peval(iterate, lambda) == lambda;
    v.checks.emplace_back(n, holds);
    if (!holds) {
      v.status = PeriodicVerdict::Status::RefutedAt;
      v.refuted_at = n;
      v.note = "f^o" + std::to_string(n * r) + "(lambda) != lambda";
      return v;
    }
  }
  v.note = associative ? "no counterexample up to n_max"
                       : "no counterexample up to n_max; certification does not apply over "
                         "octonions";
  return v;
}

template PeriodicVerdict certify_periodic(const QuatPoly&, const Quaternion&, unsigned, unsigned,
                                          std::size_t);
template PeriodicVerdict certify_periodic(const OctPoly&, const Octonion&, unsigned, unsigned,
                                          std::size_t);

OctonionFixedReport octonion_fixed_check(const OctPoly& f, const Octonion& lambda, unsigned n_max,
                                         std::size_t degree_cap) {
  OctonionFixedReport out;
  Octonion first = peval(f, lambda);
  out.values.push_back(first.str());
  out.fixed = first == lambda;
  if (!out.fixed) {
    out.note = "f(lambda) != lambda";
    return out;
  }
  OctPoly iterate = f;
  for (unsigned n = 2; n <= n_max; ++n) {
    try {
      iterate = compose_step(f, iterate, degree_cap);
    } catch (const DegreeCapError& e) {
      out.note = "degree cap reached before n = " + std::to_string(n) + ": " + e.what();
      return out;
    }
    Octonion v = peval(iterate, lambda);
    out.values.push_back(v.str());
    bool holds = v == lambda;
    out.checks.emplace_back(n, holds);
    if (!holds && !out.first_failure) out.first_failure = n;
  }
  out.note = out.first_failure ? "f(lambda) = lambda but some iterate moves lambda"
                               : "all checked iterates fix lambda";
  return out;
}

}  // namespace qdyn
