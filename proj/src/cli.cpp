#include "qdyn/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qdyn/dynamics.hpp"
#include "qdyn/error.hpp"
#include "qdyn/parse.hpp"
#include "qdyn/solver.hpp"

namespace qdyn {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra;
  std::string poly;
  std::string point;
  std::string mode = "exact";
  std::string semantics = "eval";
  unsigned n = 2;
  unsigned r = 1;
  unsigned n_max = 4;
  double tolerance = 1e-9;
  unsigned precision = 128;
  std::size_t degree_cap = kDefaultDegreeCap;
  bool json_flag = false;
};

template <class E>
json coords_json(const E& e) {
  json out = json::array();
  for (const Scalar& s : e.coords()) out.push_back(s.str());
  return out;
}

json class_json(const ConjClass& c) {
  json out;
  out["T"] = c.trace_str();
  out["N"] = c.norm_str();
  out["central"] = c.central;
  if (!c.exact) out["approx"] = true;
  return out;
}

int digits_for(unsigned bits) { return static_cast<int>(std::clamp(bits * 3 / 10, 6u, 40u)); }

json solution_json(const ClassSolution& s, const NumericOptions& opt) {
  json out;
  out["variant"] = kind_name(s.kind);
  out["class"] = class_json(s.cls);
  if (s.point) {
    out["point"] = s.point->str();
    out["coordinates"] = coords_json(*s.point);
  }
  if (s.approx_point) {
    int digits = digits_for(opt.precision_bits);
    out["point"] = s.approx_point->str(digits);
    json cs = json::array();
    for (const auto& v : s.approx_point->coord_strs(digits)) cs.push_back(v);
    out["coordinates"] = cs;
  }
  if (!s.cls.exact) {
    out["approx"] = true;
    out["tolerance"] = opt.tolerance;
    if (s.kind == ClassSolution::Kind::Point || s.kind == ClassSolution::Kind::Anomaly) {
      out["residual"] = s.residual;
    }
  }
  if (!s.report.empty()) out["report"] = s.report;
  return out;
}

json roots_json(const RootsResult& r, const NumericOptions& opt) {
  json out;
  out["companion"] = r.companion.str();
  json classes = json::array();
  for (const ConjClass& c : r.extraction.classes) classes.push_back(class_json(c));
  out["classes"] = classes;
  if (!r.extraction.unresolved.is_constant()) {
    out["unresolved_factor"] = r.extraction.unresolved.str();
  }
  json sols = json::array();
  for (const ClassSolution& s : r.solutions) sols.push_back(solution_json(s, opt));
  out["result"] = sols;
  return out;
}

json verdict_json(const PeriodicVerdict& v) {
  json out;
  out["r"] = v.r;
  out["status"] = status_name(v.status);
  if (v.status == PeriodicVerdict::Status::RefutedAt) out["n"] = v.refuted_at;
  json ev;
  ev["r_fixed"] = v.r_fixed;
  if (!v.value_at_r.empty()) ev["value_at_r"] = v.value_at_r;
  if (v.non_commuting_t) ev["non_commuting_t"] = *v.non_commuting_t;
  json checks = json::array();
  for (const auto& [n, holds] : v.checks) checks.push_back({{"n", n}, {"holds", holds}});
  ev["checks"] = checks;
  ev["note"] = v.note;
  out["evidence"] = ev;
  return out;
}

SolveMode parse_mode(const std::string& m) {
  if (m == "exact") return SolveMode::Exact;
  if (m == "numeric") return SolveMode::Numeric;
  throw UsageError("--mode must be exact or numeric");
}

const QuatSpecPtr& require_quat(const AlgebraDecl& d, const std::string& command) {
  if (d.is_oct()) throw UsageError(command + " is only available over quaternion algebras");
  return d.quat;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

template <class E>
json orbit_json(const OrbitReport<E>& rep) {
  json pts = json::array();
  for (const E& p : rep.points) pts.push_back(p.str());
  json flags = json::array();
  for (bool b : rep.commutes_with_start) flags.push_back(b);
  return {{"semantics", rep.semantics == Semantics::Eval ? "eval" : "compose"},
          {"points", pts},
          {"commutes_with_start", flags}};
}

template <class E>
json run_generic(const std::string& command, const Options& o, const Poly<E>& f,
                 const std::optional<E>& point) {
  json out;
  if (command == "compose") {
    Poly<E> g = iterate_compose(f, o.n, o.degree_cap);
    out["result"] = g.str();
    out["degree"] = g.degree();
  } else if (command == "orbit") {
    std::vector<Semantics> which;
    if (o.semantics == "eval" || o.semantics == "both") which.push_back(Semantics::Eval);
    if (o.semantics == "compose" || o.semantics == "both") which.push_back(Semantics::Compose);
    if (which.empty()) throw UsageError("--semantics must be eval, compose or both");
    json rs = json::array();
    for (Semantics s : which) rs.push_back(orbit_json(orbit(f, *point, o.n_max, s, o.degree_cap)));
    out["result"] = rs.size() == 1 ? rs[0] : rs;
  } else if (command == "check-periodic") {
    if (o.r == 0) throw UsageError("--r must be positive");
    PeriodicVerdict v = certify_periodic(f, *point, o.r, o.n_max, o.degree_cap);
    out["verdicts"] = json::array({verdict_json(v)});
  }
  return out;
}

json dispatch(const std::string& command, Options o, bool algebra_given) {
  if (!algebra_given) o.algebra = command == "oct-check" ? "oct:-1,-1,-1@Q" : "quat:-1,-1@Q";
  AlgebraDecl decl = AlgebraDecl::parse(o.algebra);
  json doc;
  doc["command"] = command;
  doc["algebra"] = decl.str();
  json inputs;
  NumericOptions nopt;
  nopt.tolerance = o.tolerance;
  nopt.precision_bits = o.precision;
  require(o.poly, "--poly");

  const bool needs_point = command == "orbit" || command == "check-periodic" ||
                           command == "oct-check";
  if (needs_point) require(o.point, "--point");

  json body;
  if (command == "roots" || command == "fixed-points" || command == "companion") {
    const QuatSpecPtr& spec = require_quat(decl, command);
    QuatPoly f = parse_quat_poly(o.poly, spec);
    inputs["poly"] = f.str();
    if (command != "companion") inputs["mode"] = o.mode;
    doc["inputs"] = inputs;
    if (command == "companion") {
      body["result"] = companion(f).str();
    } else {
      SolveMode mode = parse_mode(o.mode);
      body = roots_json(command == "roots" ? roots(f, mode, nopt) : fixed_points(f, mode, nopt),
                        nopt);
    }
  } else if (command == "oct-check") {
    if (!decl.is_oct()) throw UsageError("oct-check needs an octonion algebra");
    OctPoly f = parse_oct_poly(o.poly, decl.oct);
    Octonion lambda = parse_octonion(o.point, decl.oct);
    inputs["poly"] = f.str();
    inputs["point"] = lambda.str();
    inputs["n_max"] = o.n_max;
    doc["inputs"] = inputs;
    OctonionFixedReport rep = octonion_fixed_check(f, lambda, o.n_max, o.degree_cap);
    json checks = json::array();
    for (const auto& [n, holds] : rep.checks) checks.push_back({{"n", n}, {"holds", holds}});
    body["result"] = {{"fixed", rep.fixed}, {"values", rep.values}, {"checks", checks}};
    body["evidence"] = {{"first_failure", rep.first_failure ? json(*rep.first_failure) : json()},
                        {"note", rep.note}};
  } else {
    if (decl.is_oct()) {
      OctPoly f = parse_oct_poly(o.poly, decl.oct);
      std::optional<Octonion> pt;
      if (needs_point) pt = parse_octonion(o.point, decl.oct);
      inputs["poly"] = f.str();
      if (pt) inputs["point"] = pt->str();
      doc["inputs"] = inputs;
      body = run_generic(command, o, f, pt);
    } else {
      QuatPoly f = parse_quat_poly(o.poly, decl.quat);
      std::optional<Quaternion> pt;
      if (needs_point) pt = parse_quaternion(o.point, decl.quat);
      inputs["poly"] = f.str();
      if (pt) inputs["point"] = pt->str();
      doc["inputs"] = inputs;
      body = run_generic(command, o, f, pt);
    }
  }
  for (auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

json error_doc(const std::string& command, const char* kind, const std::string& message) {
  json doc;
  doc["command"] = command;
  doc["error"] = {{"kind", kind}, {"message", message}};
  return doc;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact dynamics of quaternion and octonion polynomials", "qdyn"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"fixed-points", "Fixed points of f, i.e. roots of f - x"},
      {"roots", "Roots of g via its companion polynomial"},
      {"orbit", "Orbit of a point under f"},
      {"compose", "n-fold composition of f"},
      {"companion", "Companion polynomial conj(g) * g"},
      {"check-periodic", "Certify or refute r-periodicity of a point"},
      {"oct-check", "Check whether a fixed point of an octonion polynomial stays fixed"},
  };
  std::vector<CLI::Option*> algebra_opts;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    algebra_opts.push_back(sub->add_option("--algebra", o.algebra,
                                           "quat:a,b@Q | quat:a,b@Q(s5) | oct:a,b,c@Q"));
    sub->add_option("--poly", o.poly, "polynomial expression");
    sub->add_option("--degree-cap", o.degree_cap, "largest degree a composition may reach");
    sub->add_flag("--json", o.json_flag, "emit JSON (always on)");
    if (name == "roots" || name == "fixed-points") {
      sub->add_option("--mode", o.mode, "exact | numeric")->check(CLI::IsMember({"exact", "numeric"}));
      sub->add_option("--tolerance", o.tolerance, "numeric residual tolerance");
      sub->add_option("--precision", o.precision, "numeric working precision in bits")
          ->check(CLI::Range(32u, 4096u));
    }
    if (name == "orbit" || name == "check-periodic" || name == "oct-check") {
      sub->add_option("--point", o.point, "degree-0 expression");
      sub->add_option("--n-max", o.n_max, "number of iterates to examine");
    }
    if (name == "orbit") {
      sub->add_option("--semantics", o.semantics, "eval | compose | both");
    }
    if (name == "compose") sub->add_option("--n", o.n, "number of compositions")->check(CLI::PositiveNumber);
    if (name == "check-periodic") sub->add_option("--r", o.r, "period");
  }

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = e.what();
    result.out = error_doc("", "usage", e.what()).dump(2) + "\n";
    return result;
  }

  std::string command = app.get_subcommands().front()->get_name();
  bool algebra_given = false;
  for (const CLI::Option* opt : algebra_opts) algebra_given = algebra_given || opt->count() > 0;
  try {
    result.out = dispatch(command, o, algebra_given).dump(2) + "\n";
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = e.what();
    result.out = error_doc(command, "parse", e.what()).dump(2) + "\n";
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = e.what();
    result.out = error_doc(command, "usage", e.what()).dump(2) + "\n";
  } catch (const MathError& e) {
    result.exit_code = 1;
    result.err = e.what();
    result.out = error_doc(command, "math", e.what()).dump(2) + "\n";
  }
  return result;
}

}  // namespace qdyn
