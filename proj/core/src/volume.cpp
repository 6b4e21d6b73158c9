#include "p1z/volume.hpp"

#include <cmath>
#include <string>

#include "p1z/errors.hpp"

namespace p1z {

namespace {

double sq_log(double u) { return u == 0.0 ? 0.0 : u * u * std::log(u); }

}  // namespace

double phi_antiderivative(const Params& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("phi_antiderivative: x must lie in [0, 1]");
  }
  const double u = 1.0 - x;
  return (x - 0.5 * x * x) * std::log(p.a()) + 0.5 * x * x * std::log(p.b()) -
         0.5 * sq_log(x) + 0.25 * x * x + 0.5 * sq_log(u) - 0.25 * u * u;
}

double volume_closed(const Params& p, const ThetaInterval& theta) {
  if (theta.kind != ThetaKind::Interval) return 0.0;
  return phi_antiderivative(p, theta.upper) - phi_antiderivative(p, theta.lower);
}

double volume_quadrature(const Params& p, const ThetaInterval& theta,
                         const Tolerance& tol) {
  if (theta.kind != ThetaKind::Interval) return 0.0;
  return integrate_adaptive([&p](double x) { return phi(p, x); }, theta.lower,
                            theta.upper, tol);
}

double selfint_degree(const Params& p) {
  return 0.5 * (std::log(p.a()) + std::log(p.b()) + 1.0);
}

int minimal_nonempty_level(const Params& p, const ThetaInterval& theta,
                           int from, int limit) {
  if (theta.empty()) return 0;
  for (int m = std::max(from, 1); m < limit; ++m) {
    if (h0_nonzero(p, m, theta)) return m;
  }
  return 0;
}

LatticeEstimate volume_lattice_estimate(const Params& p, int n,
                                        const ThetaInterval& theta) {
  if (n < 1) throw DomainError("lattice estimate: n must be >= 1");
  if (sum_minus_one_sign(p) <= 0) {
    throw DomainError("lattice estimate needs a + b > 1 (big divisor)");
  }
  if (!h0_nonzero(p, n, theta)) {
    const int next = minimal_nonempty_level(p, theta, n + 1);
    throw EmptyError("n Theta cap Z is empty at n = " + std::to_string(n) +
                         (next > 0 ? "; first usable level is " + std::to_string(next)
                                   : std::string{}),
                     next);
  }
  const auto bounds = lattice_count_bounds(ellipsoid_spec(p, n, theta));
  const double scale = 2.0 / ((n + 1.0) * (n + 1.0));
  return {n, scale * bounds.log_lower, scale * bounds.log_upper};
}

LatticeEstimate volume_lattice_estimate(const Params& p, int n) {
  return volume_lattice_estimate(p, n, theta_interval(p));
}

VolumeReport volume_report(const Params& p, int n, const Tolerance& tol) {
  const auto theta = theta_interval(p, tol);
  VolumeReport r;
  r.closed = volume_closed(p, theta);
  r.quadrature = volume_quadrature(p, theta, tol);
  if (sum_minus_one_sign(p) > 0 && h0_nonzero(p, n, theta)) {
    const auto est = volume_lattice_estimate(p, n, theta);
    r.lattice_lower = est.lower;
    r.lattice_upper = est.upper;
    r.n_used = n;
  }
  return r;
}

GapConstruction construct_gap_params(int n) {
  if (n < 1) throw DomainError("construct_gap_params: n must be >= 1");
  const Rational base_a(n, n + 1);
  const Rational base_b(1, n + 1);
  for (unsigned k = 1; k < 256; ++k) {
    Rational lambda = 1 + Rational(1, mpz_class(1) << k);
    lambda.canonicalize();
    const Rational a = lambda * base_a;
    const Rational b = lambda * base_b;
    if (a >= 1 || b >= 1) continue;
    if (exact_phi_sign(a, b, 1, n) >= 0) continue;

    GapConstruction out{Params::exact(a, b), a, b, lambda, base_a, base_b, n};
    // phi(0) = log a < 0, phi(1/n) < 0 and the maximum sits at
    // b/(a+b) = 1/(n+1) < 1/n, so Theta lies strictly inside (0, 1/n).
    const auto theta = theta_interval(out.params);
    out.theta_inside = a < 1 && Rational(b / (a + b)) < Rational(1, n) &&
                       !theta.empty() && theta.lower > 0.0 &&
                       theta.upper < 1.0 / n;
    out.no_small_sections = true;
    for (int l = 1; l <= n; ++l) {
      if (h0_nonzero(out.params, l, theta)) out.no_small_sections = false;
    }
    return out;
  }
  throw ConvergenceError("construct_gap_params: no admissible lambda found");
}

}  // namespace p1z
