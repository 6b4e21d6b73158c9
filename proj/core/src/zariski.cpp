#include "p1z/zariski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "p1z/errors.hpp"

namespace p1z {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double radius_of(const SpherePoint& z) {
  if (std::holds_alternative<PointAtInfinity>(z)) return kInf;
  return std::abs(std::get<std::complex<double>>(z));
}

// -(1 - kappa) log r^2 + log(a r^2 + b), i.e. g + kappa log r^2, without
// cancellation at large r.
double green_plus_log(const Params& p, double kappa, double r) {
  const double lr2 = 2.0 * std::log(r);
  if (r >= 1.0) return kappa * lr2 + std::log(p.a() + p.b() / (r * r));
  return -(1.0 - kappa) * lr2 + std::log(p.a() * r * r + p.b());
}

bool is_point(const ThetaInterval& theta) { return theta.kind == ThetaKind::Point; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double llo = std::log(lo);
  const double step = count > 1 ? (std::log(hi) - llo) / (count - 1) : 0.0;
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = std::exp(llo + step * k);
  if (count > 1) {
    out.front() = lo;
    out.back() = hi;
  }
  return out;
}

// Sampling window covering both breakpoints with some margin.
std::pair<double, double> sample_window(const ArithRDivisor& d) {
  const auto& pieces = d.green.pieces();
  double inner = 1.0;
  double outer = 1.0;
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    inner = std::min(inner, pieces[k].r_hi);
    outer = std::max(outer, pieces[k].r_hi);
  }
  return {inner * 1e-3, outer * 1e3};
}

}  // namespace

GreenProfile::GreenProfile(Params params, std::vector<GreenPiece> pieces)
    : params_(std::move(params)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("GreenProfile: no pieces");
  if (pieces_.front().r_lo != 0.0 || pieces_.back().r_hi != kInf) {
    throw DomainError("GreenProfile: pieces must cover (0, inf)");
  }
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (!(pieces_[k].r_lo < pieces_[k].r_hi)) {
      throw DomainError("GreenProfile: empty piece");
    }
    if (k > 0 && pieces_[k].r_lo != pieces_[k - 1].r_hi) {
      throw DomainError("GreenProfile: pieces must be adjacent");
    }
  }
}

double GreenProfile::eval_piece(const GreenPiece& piece, double r) const {
  if (piece.kind == PieceKind::PureLog) return -piece.kappa * (2.0 * std::log(r));
  return green_g(params_, std::complex<double>(r, 0.0));
}

double GreenProfile::at_radius(double r) const {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("GreenProfile: radius must lie in (0, inf)");
  }
  for (const auto& piece : pieces_) {
    if (r <= piece.r_hi) return eval_piece(piece, r);
  }
  return eval_piece(pieces_.back(), r);
}

bool zariski_exists(const Params& p) { return sum_minus_one_sign(p) >= 0; }

BreakpointRadii breakpoint_radii(const Params& p, const ThetaInterval& theta) {
  if (theta.empty()) {
    throw NoDecompositionError("Theta is empty (a + b < 1): no Zariski decomposition");
  }
  if (is_point(theta)) return {1.0, 1.0};
  BreakpointRadii out;
  const double th = theta.upper;
  const double vt = theta.lower;
  out.r_in = th >= 1.0 ? 0.0 : std::sqrt(p.b() * (1.0 - th) / (p.a() * th));
  out.r_out = vt <= 0.0 ? kInf : std::sqrt(p.b() * (1.0 - vt) / (p.a() * vt));
  out.r_in = std::min(out.r_in, out.r_out);
  return out;
}

ArithRDivisor positive_part(const Params& p, const ThetaInterval& theta) {
  if (!zariski_exists(p) || theta.empty()) {
    throw NoDecompositionError(
        "a + b < 1: D_{a,b} is not pseudo-effective and has no Zariski decomposition");
  }
  const double th = theta.upper;
  const double vt = theta.lower;
  if (is_point(theta)) {
    return {th, -vt, GreenProfile(p, {{0.0, kInf, PieceKind::PureLog, th}})};
  }
  const auto radii = breakpoint_radii(p, theta);
  std::vector<GreenPiece> pieces;
  if (radii.r_in > 0.0) pieces.push_back({0.0, radii.r_in, PieceKind::PureLog, th});
  if (radii.r_in < radii.r_out) {
    pieces.push_back({radii.r_in, radii.r_out, PieceKind::FullGreen, 0.0});
  }
  if (radii.r_out < kInf) {
    if (!pieces.empty() && pieces.back().kind == PieceKind::PureLog &&
        pieces.back().kappa == vt) {
      pieces.back().r_hi = kInf;
    } else {
      pieces.push_back({radii.r_out, kInf, PieceKind::PureLog, vt});
    }
  }
  return {th, -vt, GreenProfile(p, std::move(pieces))};
}

double eval_positive_green(const ArithRDivisor& d, const SpherePoint& z) {
  const auto& pieces = d.green.pieces();
  const double r = radius_of(z);
  if (r == 0.0) {
    if (d.c0 > 0.0) return kInf;
    return pieces.front().kind == PieceKind::PureLog ? 0.0 : -kInf;
  }
  if (r == kInf) {
    const auto& last = pieces.back();
    if (last.kind == PieceKind::FullGreen) return std::log(d.green.params().a());
    if (last.kappa > 0.0) return -kInf;
    if (last.kappa < 0.0) return kInf;
    return 0.0;
  }
  return d.green.at_radius(r);
}

double positive_green_regularized_at_zero(const ArithRDivisor& d) {
  const auto& first = d.green.pieces().front();
  if (first.kind == PieceKind::FullGreen) return std::log(d.green.params().b());
  return 0.0;
}

double positive_green_regularized_at_infinity(const ArithRDivisor& d) {
  const auto& last = d.green.pieces().back();
  if (last.kind == PieceKind::FullGreen) return std::log(d.green.params().a());
  return 0.0;
}

double eval_r1(const Params& p, const ThetaInterval& theta, const SpherePoint& z) {
  const auto radii = breakpoint_radii(p, theta);
  const double r = radius_of(z);
  if (!(r < radii.r_out)) {
    throw DomainError("r1 is defined only for |z| < " + fmt(radii.r_out));
  }
  if (r == 0.0) return radii.r_in > 0.0 ? 0.0 : std::log(p.b());
  if (r <= radii.r_in) return 0.0;
  return green_plus_log(p, theta.upper, r);
}

double eval_r2(const Params& p, const ThetaInterval& theta, const SpherePoint& z) {
  const auto radii = breakpoint_radii(p, theta);
  const double r = radius_of(z);
  if (!(r > radii.r_in)) {
    throw DomainError("r2 is defined only for |z| > " + fmt(radii.r_in));
  }
  if (r == kInf) return radii.r_out < kInf ? 0.0 : std::log(p.a());
  if (r >= radii.r_out) return 0.0;
  return green_plus_log(p, theta.lower, r);
}

double negative_green(const Params& p, const ArithRDivisor& d, const SpherePoint& z) {
  const double r = radius_of(z);
  if (r == 0.0) return std::log(p.b()) - positive_green_regularized_at_zero(d);
  if (r == kInf) return std::log(p.a()) - positive_green_regularized_at_infinity(d);
  const auto& pieces = d.green.pieces();
  const GreenPiece* piece = &pieces.back();
  for (const auto& candidate : pieces) {
    if (r <= candidate.r_hi) {
      piece = &candidate;
      break;
    }
  }
  if (piece->kind == PieceKind::FullGreen) return 0.0;
  return green_plus_log(p, piece->kappa, r);
}

double ZariskiDecomposition::negative_green(const SpherePoint& z) const {
  return p1z::negative_green(positive.green.params(), positive, z);
}

ZariskiDecomposition zariski_decomposition(const Params& p, const ThetaInterval& theta) {
  auto positive = positive_part(p, theta);
  return {true, positive, 1.0 - theta.upper, theta.lower};
}

NefReport nef_witness(const Params& p, const ArithRDivisor& d, int samples) {
  if (samples < 2) throw DomainError("nef_witness: samples must be >= 2");
  NefReport rep;
  const auto& pieces = d.green.pieces();

  // (i) degrees, as numeric limits of the profile itself.
  double inner = 1.0;
  double outer = 1.0;
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    inner = std::min(inner, pieces[k].r_hi);
    outer = std::max(outer, pieces[k].r_hi);
  }
  const double r_small = inner * 1e-7;
  const double r_large = outer * 1e7;
  rep.deg_c0 = d.green.at_radius(r_small) + d.c0 * (2.0 * std::log(r_small));
  rep.deg_cinf = d.green.at_radius(r_large) - d.cinf * (2.0 * std::log(r_large));
  const bool degenerate0 = pieces.front().kind == PieceKind::FullGreen;
  const bool degenerate_inf = pieces.back().kind == PieceKind::FullGreen;
  const double want0 = degenerate0 ? std::log(p.b()) : 0.0;
  const double want_inf = degenerate_inf ? std::log(p.a()) : 0.0;
  const bool ok0 = std::abs(rep.deg_c0 - want0) <= 1e-9 && rep.deg_c0 >= -1e-9;
  const bool ok_inf = std::abs(rep.deg_cinf - want_inf) <= 1e-9 && rep.deg_cinf >= -1e-9;
  rep.degrees_ok = ok0 && ok_inf;
  if (!ok0) rep.failures.push_back("degree on C_0 is " + fmt(rep.deg_c0));
  if (!ok_inf) rep.failures.push_back("degree on C_inf is " + fmt(rep.deg_cinf));

  // (ii) effectivity of P - theta (z) and of D - P.
  const auto [lo, hi] = sample_window(d);
  rep.min_effectivity = kInf;
  rep.min_negative = kInf;
  for (double r : log_spaced(lo, hi, samples)) {
    const double pv = d.green.at_radius(r);
    rep.min_effectivity = std::min(rep.min_effectivity, pv + d.c0 * (2.0 * std::log(r)));
    rep.min_negative = std::min(rep.min_negative, negative_green(p, d, std::complex<double>(r, 0.0)));
  }
  rep.effectivity_ok = rep.min_effectivity >= -1e-12;
  rep.domination_ok = rep.min_negative >= -1e-12;
  if (!rep.effectivity_ok) {
    rep.failures.push_back("p + theta log|z|^2 reaches " + fmt(rep.min_effectivity));
  }
  if (!rep.domination_ok) rep.failures.push_back("g - p reaches " + fmt(rep.min_negative));

  // (iii) discrete sub-mean-value inequality.
  std::vector<double> centres;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& piece = pieces[k];
    if (k + 1 < pieces.size()) centres.push_back(piece.r_hi);
    if (piece.r_lo == 0.0 && piece.r_hi == kInf) {
      centres.push_back(1.0);
    } else if (piece.r_lo == 0.0) {
      centres.push_back(piece.r_hi / 2.0);
    } else if (piece.r_hi == kInf) {
      centres.push_back(piece.r_lo * 2.0);
    } else {
      centres.push_back(std::sqrt(piece.r_lo * piece.r_hi));
    }
  }
  constexpr int kAngles = 720;
  rep.max_submean_excess = -kInf;
  for (double r0 : centres) {
    const double eps = r0 / 100.0;
    double sum = 0.0;
    for (int k = 0; k < kAngles; ++k) {
      const double t = 2.0 * std::numbers::pi * k / kAngles;
      const std::complex<double> w(r0 + eps * std::cos(t), eps * std::sin(t));
      sum += d.green.at_radius(std::abs(w));
    }
    const double excess = d.green.at_radius(r0) - sum / kAngles;
    rep.max_submean_excess = std::max(rep.max_submean_excess, excess);
    if (excess > 1e-9) {
      rep.failures.push_back("sub-mean-value fails at |z| = " + fmt(r0) + " by " + fmt(excess));
    }
  }
  rep.submean_ok = rep.max_submean_excess <= 1e-9;
  return rep;
}

LimitReport limit_positive_parts(const Params& p, const std::vector<double>& t_values,
                                 double r_min, double r_max, int radial_samples) {
  if (sum_minus_one_sign(p) != 0) {
    throw DomainError("limit_positive_parts requires a + b = 1");
  }
  if (!(r_min > 0.0) || !(r_min < r_max) || radial_samples < 2) {
    throw DomainError("limit_positive_parts: need 0 < r_min < r_max, samples >= 2");
  }
  const double b = p.b();
  const auto radii = log_spaced(r_min, r_max, radial_samples);
  LimitReport rep;
  for (double t : t_values) {
    if (!(t > 1.0) || !std::isfinite(t)) {
      throw DomainError("limit_positive_parts: every t must exceed 1, got " + fmt(t));
    }
    const Params pt(t * p.a(), t * p.b());
    const auto theta = theta_interval(pt);
    const auto d = positive_part(pt, theta);
    LimitRow row;
    row.t = t;
    row.vartheta = theta.lower;
    row.theta = theta.upper;
    row.vartheta_error = std::abs(theta.lower - b);
    row.theta_error = std::abs(theta.upper - b);
    for (double r : radii) {
      const double target = -b * (2.0 * std::log(r));
      row.sup_distance = std::max(row.sup_distance, std::abs(d.green.at_radius(r) - target));
    }
    rep.rows.push_back(row);
  }
  rep.theta_decreasing = true;
  rep.distance_decreasing = true;
  for (std::size_t k = 1; k < rep.rows.size(); ++k) {
    const auto& prev = rep.rows[k - 1];
    const auto& cur = rep.rows[k];
    if (!(cur.theta_error < prev.theta_error) || !(cur.vartheta_error < prev.vartheta_error)) {
      rep.theta_decreasing = false;
    }
    if (!(cur.sup_distance < prev.sup_distance)) rep.distance_decreasing = false;
  }
  return rep;
}

std::vector<ProfileRow> profile_rows(const Params& p, const ArithRDivisor& d, int samples,
                                     double r_min, double r_max) {
  if (samples < 2) throw DomainError("profile: samples must be >= 2");
  if (!(r_min > 0.0) || !(r_min < r_max) || !std::isfinite(r_max)) {
    throw DomainError("profile: need 0 < rmin < rmax < inf");
  }
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (double r : log_spaced(r_min, r_max, samples)) {
    const std::complex<double> z(r, 0.0);
    rows.push_back({r, d.green.at_radius(r), green_g(p, z), negative_green(p, d, z)});
  }
  return rows;
}

}  // namespace p1z
