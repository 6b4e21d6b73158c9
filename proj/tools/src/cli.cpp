#include "p1z/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "p1z/charfun.hpp"
#include "p1z/errors.hpp"
#include "p1z/sections.hpp"
#include "p1z/verify.hpp"
#include "p1z/volume.hpp"
#include "p1z/zariski.hpp"

namespace p1z::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values are not representable in JSON numbers.
json jnum(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

struct Options {
  std::string a;
  std::string b;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";

  // volume
  std::string method = "closed";
  // sections, volume --method lattice, construct-gap
  std::optional<int> n;
  std::string enumerate;
  bool span = false;
  // zariski
  int samples = 512;
  std::optional<double> rmin;
  std::optional<double> rmax;
  // verify
  std::string suite = "all";
};

Params parse_params(const Options& o) {
  const auto qa = parse_rational(o.a);
  const auto qb = parse_rational(o.b);
  if (qa && qb) return Params::exact(*qa, *qb);
  const auto value = [](const std::string& text, const std::optional<Rational>& q) {
    if (q) return q->get_d();
    try {
      return parse_real(text);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  };
  return Params(value(o.a, qa), value(o.b, qb));
}

Tolerance tolerance(const Options& o) {
  Tolerance t;
  if (o.tol) t.abs_tol = *o.tol;
  t.validate();
  return t;
}

json theta_json(const ThetaInterval& th) {
  json j;
  j["kind"] = std::string(to_string(th.kind));
  if (th.empty()) {
    j["lower"] = nullptr;
    j["upper"] = nullptr;
  } else {
    j["lower"] = th.lower;
    j["upper"] = th.upper;
  }
  j["length"] = th.length();
  j["solver_tol"] = th.solver_tol;
  return j;
}

json section_json(const EnumeratedSection& e) {
  return {{"coeffs", e.section.coeffs},
          {"norm_sq", e.norm_sq},
          {"boundary_uncertain", e.boundary_uncertain}};
}

struct Result {
  json payload;
  json diagnostics = json::array();
  int exit_code = kExitOk;
  std::optional<std::string> csv;
};

Result cmd_classify(const Options& o) {
  const Params p = parse_params(o);
  const auto c = classify(p);
  Result r;
  r.payload["class"] = std::string(to_string(c));
  r.payload["ample"] = c == GeographyClass::Ample;
  r.payload["nef"] = c == GeographyClass::Ample || c == GeographyClass::NefNotAmple;
  r.payload["big"] = c == GeographyClass::Ample || c == GeographyClass::NefNotAmple ||
                     c == GeographyClass::BigNotNef;
  r.payload["pseudo_effective"] = c != GeographyClass::NotPseudoEffective;
  r.payload["exact"] = p.is_exact();
  if (!p.is_exact()) {
    r.diagnostics.push_back("a + b = 1 detected with tolerance " + std::to_string(kBoundaryTol) +
                            "; pass p/q rationals for exact classification");
  }
  return r;
}

Result cmd_theta(const Options& o) {
  const Params p = parse_params(o);
  const auto th = theta_interval(p, tolerance(o));
  const auto m = phi_max(p);
  Result r;
  r.payload = theta_json(th);
  r.payload["phi_max"] = {{"argmax", m.argmax}, {"max", m.max}};
  return r;
}

Result cmd_volume(const Options& o) {
  const Params p = parse_params(o);
  const Tolerance tol = tolerance(o);
  const auto th = theta_interval(p, tol);
  Result r;
  r.payload["method"] = o.method;
  if (o.method == "closed") {
    r.payload["value"] = volume_closed(p, th);
  } else if (o.method == "quadrature") {
    r.payload["value"] = volume_quadrature(p, th, tol);
  } else if (o.method == "lattice") {
    const int n = o.n.value_or(200);
    const auto est = volume_lattice_estimate(p, n, th);
    r.payload["n"] = est.n;
    r.payload["lower"] = est.lower;
    r.payload["upper"] = est.upper;
    r.payload["closed"] = volume_closed(p, th);
  } else {
    throw UsageError("--method must be closed, quadrature or lattice");
  }
  if (o.n && o.method != "lattice") r.diagnostics.push_back("--n ignored unless --method lattice");
  return r;
}

Result cmd_selfint(const Options& o) {
  const Params p = parse_params(o);
  Result r;
  r.payload["value"] = selfint_degree(p);
  return r;
}

Result cmd_sections(const Options& o) {
  const Params p = parse_params(o);
  const Tolerance tol = tolerance(o);
  if (!o.n) throw UsageError("sections requires --n");
  const int n = *o.n;
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto th = theta_interval(p, tol);
  Result r;
  r.payload["n"] = n;
  const bool nonzero = h0_nonzero(p, n, th);
  r.payload["h0_nonzero"] = nonzero;
  if (o.span) {
    r.payload["span"] = nonzero ? json(h0_monomial_span(p, n, th)) : json::array();
  }
  if (nonzero) {
    const auto spec = ellipsoid_spec(p, n, th);
    const auto bounds = lattice_count_bounds(spec);
    r.payload["ellipsoid"] = {{"range", {spec.range_lo, spec.range_hi}},
                              {"log_semi_axes_sq", spec.log_semi_axes_sq},
                              {"log_lower", bounds.log_lower},
                              {"log_upper", bounds.log_upper}};
  }
  if (!o.enumerate.empty()) {
    NormKind kind;
    if (o.enumerate == "sup") {
      kind = NormKind::Sup;
    } else if (o.enumerate == "l2") {
      kind = NormKind::L2;
    } else {
      throw UsageError("--enumerate must be sup or l2");
    }
    const auto list = h0_enumerate(p, n, kind, tol);
    json items = json::array();
    std::size_t flagged = 0;
    for (const auto& e : list) {
      items.push_back(section_json(e));
      if (e.boundary_uncertain) ++flagged;
    }
    r.payload["enumeration"] = {{"norm", o.enumerate}, {"count", list.size()}, {"sections", items}};
    if (flagged > 0) {
      r.diagnostics.push_back(std::to_string(flagged) +
                              " section(s) have norm within the boundary band of 1 and are "
                              "flagged boundary_uncertain");
    }
  }
  return r;
}

json piece_json(const GreenPiece& piece) {
  return {{"r_lo", jnum(piece.r_lo)},
          {"r_hi", jnum(piece.r_hi)},
          {"kind", piece.kind == PieceKind::PureLog ? "PureLog" : "FullGreen"},
          {"kappa", piece.kappa}};
}

Result cmd_zariski(const Options& o) {
  const Params p = parse_params(o);
  const auto th = theta_interval(p, tolerance(o));
  if (o.samples < 2) throw UsageError("--samples must be >= 2");
  const auto dec = zariski_decomposition(p, th);
  const auto radii = breakpoint_radii(p, th);
  const double rmin = o.rmin.value_or(radii.r_in > 0.0 ? radii.r_in / 10.0 : 1e-3);
  const double rmax = o.rmax.value_or(std::isfinite(radii.r_out) ? 10.0 * radii.r_out : 1e3);
  if (!(rmin > 0.0) || !(rmin < rmax) || !std::isfinite(rmax)) {
    throw UsageError("need 0 < --rmin < --rmax < inf");
  }
  const auto rows = profile_rows(p, dec.positive, o.samples, rmin, rmax);
  Result r;
  if (o.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "radius,p,g,neg\n";
    for (const auto& row : rows) {
      os << row.radius << ',' << row.p << ',' << row.g << ',' << row.neg << '\n';
    }
    r.csv = os.str();
    return r;
  }
  const auto witness = nef_witness(p, dec.positive);
  json pieces = json::array();
  for (const auto& piece : dec.positive.green.pieces()) pieces.push_back(piece_json(piece));
  json profile = json::array();
  for (const auto& row : rows) {
    profile.push_back({{"radius", row.radius}, {"p", row.p}, {"g", row.g}, {"neg", row.neg}});
  }
  r.payload["exists"] = dec.exists;
  r.payload["theta"] = theta_json(th);
  r.payload["breakpoints"] = {{"r_in", jnum(radii.r_in)}, {"r_out", jnum(radii.r_out)}};
  r.payload["positive"] = {
      {"c0", dec.positive.c0},
      {"cinf", dec.positive.cinf},
      {"pieces", pieces},
      {"regularized_at_zero", positive_green_regularized_at_zero(dec.positive)},
      {"regularized_at_infinity", positive_green_regularized_at_infinity(dec.positive)}};
  r.payload["negative"] = {{"c0", dec.negative_c0},
                           {"cinf", dec.negative_cinf},
                           {"regularized_at_zero", dec.negative_green(std::complex<double>(0.0, 0.0))},
                           {"regularized_at_infinity", dec.negative_green(PointAtInfinity{})}};
  r.payload["nef_witness"] = {{"passed", witness.passed()},
                              {"deg_c0", witness.deg_c0},
                              {"deg_cinf", witness.deg_cinf},
                              {"min_effectivity", witness.min_effectivity},
                              {"min_negative", witness.min_negative},
                              {"max_submean_excess", witness.max_submean_excess},
                              {"failures", witness.failures}};
  r.payload["profile"] = profile;
  for (const auto& f : witness.failures) r.diagnostics.push_back("nef witness: " + f);
  return r;
}

Result cmd_construct_gap(const Options& o) {
  if (!o.n) throw UsageError("construct-gap requires --n");
  const auto g = construct_gap_params(*o.n);
  const auto th = theta_interval(g.params);
  Result r;
  r.payload["n"] = g.level;
  r.payload["a"] = to_string(g.a);
  r.payload["b"] = to_string(g.b);
  r.payload["lambda"] = to_string(g.lambda);
  r.payload["base_a"] = to_string(g.base_a);
  r.payload["base_b"] = to_string(g.base_b);
  r.payload["a_decimal"] = g.a.get_d();
  r.payload["b_decimal"] = g.b.get_d();
  r.payload["class"] = std::string(to_string(classify(g.params)));
  r.payload["theta"] = theta_json(th);
  r.payload["theta_inside"] = g.theta_inside;
  r.payload["no_small_sections"] = g.no_small_sections;
  return r;
}

Result cmd_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("--suite must be charfun, sections, volume, zariski or all");
  const auto report = run_verify(*suite);
  Result r;
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) r.diagnostics.push_back(c.suite + "/" + c.name + " failed: " + c.detail);
  }
  r.payload["suite"] = o.suite;
  r.payload["passed"] = report.passed();
  r.payload["failures"] = report.failures();
  r.payload["checks"] = checks;
  r.exit_code = report.passed() ? kExitOk : kExitVerifyFailed;
  return r;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a, "parameter a (decimal or p/q)")->required();
  sub->add_option("--b", o.b, "parameter b (decimal or p/q)")->required();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "absolute solver tolerance");
  sub->add_option("--out", o.out, "write output to this file");
  sub->add_option("--format", o.format, "json, or csv for zariski profiles");
}

int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out);
  if (!file) {
    err << "error: cannot open '" << o.out << "' for writing\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity profile of the arithmetic divisor D_{a,b} on P^1_Z", "p1z"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "geography class of D_{a,b}");
  auto* theta_cmd = app.add_subcommand("theta", "the interval Theta_{a,b}");
  auto* volume_cmd = app.add_subcommand("volume", "arithmetic volume");
  volume_cmd->add_option("--method", o.method, "closed, quadrature or lattice");
  volume_cmd->add_option("--n", o.n, "level for --method lattice (default 200)");
  auto* selfint_cmd = app.add_subcommand("selfint", "arithmetic self-intersection");
  auto* sections_cmd = app.add_subcommand("sections", "small sections at level n");
  sections_cmd->add_option("--n", o.n, "level")->required();
  sections_cmd->add_option("--enumerate", o.enumerate, "list sections with sup or l2 norm <= 1");
  sections_cmd->add_flag("--span", o.span, "list the monomial span");
  auto* zariski_cmd = app.add_subcommand("zariski", "Zariski decomposition and profile");
  zariski_cmd->add_option("--samples", o.samples, "number of profile radii");
  zariski_cmd->add_option("--rmin", o.rmin, "smallest profile radius");
  zariski_cmd->add_option("--rmax", o.rmax, "largest profile radius");
  auto* gap_cmd = app.add_subcommand("construct-gap", "big D_{a,b} without small sections up to n");
  gap_cmd->add_option("--n", o.n, "level")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--suite", o.suite, "charfun, sections, volume, zariski or all");

  for (auto* sub : {classify_cmd, theta_cmd, volume_cmd, selfint_cmd, sections_cmd, zariski_cmd}) {
    add_params(sub, o);
  }
  for (auto* sub : {classify_cmd, theta_cmd, volume_cmd, selfint_cmd, sections_cmd, zariski_cmd,
                    gap_cmd, verify_cmd}) {
    add_common(sub, o);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (o.format != "json" && o.format != "csv") {
    err << "error: --format must be json or csv\n";
    return kExitUsage;
  }
  if (o.format == "csv" && sub != zariski_cmd) {
    err << "error: --format csv is only available for zariski\n";
    return kExitUsage;
  }

  json envelope;
  envelope["schema_version"] = "1";
  envelope["command"] = command;
  json params = json::object();
  if (sub == gap_cmd) {
    params["n"] = o.n.value_or(0);
  } else if (sub != verify_cmd) {
    params["a"] = o.a;
    params["b"] = o.b;
  }
  envelope["params"] = params;

  Result result;
  try {
    if (sub == classify_cmd) result = cmd_classify(o);
    else if (sub == theta_cmd) result = cmd_theta(o);
    else if (sub == volume_cmd) result = cmd_volume(o);
    else if (sub == selfint_cmd) result = cmd_selfint(o);
    else if (sub == sections_cmd) result = cmd_sections(o);
    else if (sub == zariski_cmd) result = cmd_zariski(o);
    else if (sub == gap_cmd) result = cmd_construct_gap(o);
    else result = cmd_verify(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    if (o.format == "csv") {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    }
    envelope["payload"] = nullptr;
    json diag = json::array({e.what()});
    if (const auto* empty = dynamic_cast<const EmptyError*>(&e); empty && empty->suggested_n() > 0) {
      diag.push_back("smallest usable level: " + std::to_string(empty->suggested_n()));
    }
    envelope["diagnostics"] = diag;
    const int rc = emit(envelope.dump(2) + "\n", o, out, err);
    return rc == kExitOk ? kExitDomain : rc;
  }

  if (result.csv) {
    const int rc = emit(*result.csv, o, out, err);
    return rc == kExitOk ? result.exit_code : rc;
  }
  envelope["payload"] = result.payload;
  envelope["diagnostics"] = result.diagnostics;
  const int rc = emit(envelope.dump(2) + "\n", o, out, err);
  return rc == kExitOk ? result.exit_code : rc;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, std::cout, std::cerr);
}

}  // namespace p1z::cli
