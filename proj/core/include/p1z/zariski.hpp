#pragma once

// Zariski decomposition of D_{a,b} = (C_0, g_{a,b}).
//
// It exists iff a + b >= 1. The positive part is
// (theta C_0 - vartheta C_inf, p_{a,b}) with the radial Green function
//
//   p(z) = -theta log|z|^2                      for |z| <= r_in
//          -log|z|^2 + log(a|z|^2 + b)          for r_in < |z| < r_out
//          -vartheta log|z|^2                   for |z| >= r_out
//
// where r_in = sqrt(b(1-theta)/(a theta)) and r_out = sqrt(b(1-vartheta)/
// (a vartheta)); theta = 1 gives r_in = 0 and vartheta = 0 gives
// r_out = +inf. The negative part is ((1-theta) C_0 + vartheta C_inf, g - p).

#include <string>
#include <vector>

#include "p1z/charfun.hpp"

namespace p1z {

enum class PieceKind { PureLog, FullGreen };

// One radial piece on [r_lo, r_hi]: PureLog(kappa) is -kappa log|z|^2,
// FullGreen is g_{a,b}.
struct GreenPiece {
  double r_lo = 0.0;
  double r_hi = 0.0;
  PieceKind kind = PieceKind::FullGreen;
  double kappa = 0.0;
};

// Piecewise-radial Green function on P^1(C). Pieces tile (0, inf) in
// increasing order; a radius on a shared endpoint belongs to the inner
// piece.
class GreenProfile {
 public:
  GreenProfile(Params params, std::vector<GreenPiece> pieces);

  const Params& params() const noexcept { return params_; }
  const std::vector<GreenPiece>& pieces() const noexcept { return pieces_; }

  // Value at radius r in (0, inf).
  double at_radius(double r) const;
  double eval_piece(const GreenPiece& piece, double r) const;

 private:
  Params params_;
  std::vector<GreenPiece> pieces_;
};

// An arithmetic R-divisor c0 C_0 + cinf C_inf with its Green function.
struct ArithRDivisor {
  double c0 = 0.0;
  double cinf = 0.0;
  GreenProfile green;
};

bool zariski_exists(const Params& p);

struct BreakpointRadii {
  double r_in = 0.0;
  double r_out = 0.0;  // +inf when vartheta = 0
};

// Throws NoDecompositionError when Theta is empty.
BreakpointRadii breakpoint_radii(const Params& p, const ThetaInterval& theta);

// Throws NoDecompositionError when a + b < 1.
ArithRDivisor positive_part(const Params& p, const ThetaInterval& theta);

// p(z); +inf at z = 0 when c0 > 0, -inf at infinity when cinf < 0.
double eval_positive_green(const ArithRDivisor& d, const SpherePoint& z);
// lim p(z) + c0 log|z|^2 as z -> 0.
double positive_green_regularized_at_zero(const ArithRDivisor& d);
// lim p(z) - cinf log|z|^2 as z -> infinity.
double positive_green_regularized_at_infinity(const ArithRDivisor& d);

// r_1 = p + theta log|z|^2 on |z| < r_out; r_2 = p + vartheta log|z|^2 on
// |z| > r_in. Points outside the domain throw DomainError.
double eval_r1(const Params& p, const ThetaInterval& theta, const SpherePoint& z);
double eval_r2(const Params& p, const ThetaInterval& theta, const SpherePoint& z);

// g - p. At z = 0 and z = infinity the value returned is the regularized
// one, (g - p) + (1 - theta) log|z|^2 resp. (g - p) - vartheta log|z|^2.
double negative_green(const Params& p, const ArithRDivisor& d,
                      const SpherePoint& z);

struct ZariskiDecomposition {
  bool exists = false;
  ArithRDivisor positive;
  double negative_c0 = 0.0;    // 1 - theta
  double negative_cinf = 0.0;  // vartheta

  double negative_green(const SpherePoint& z) const;
};

// Throws NoDecompositionError when a + b < 1.
ZariskiDecomposition zariski_decomposition(const Params& p,
                                           const ThetaInterval& theta);

struct NefReport {
  double deg_c0 = 0.0;    // regularized value of p + theta log|z|^2 at 0
  double deg_cinf = 0.0;  // regularized value of p + vartheta log|z|^2 at inf
  bool degrees_ok = false;
  double min_effectivity = 0.0;  // min of p + theta log|z|^2 over the samples
  bool effectivity_ok = false;
  double min_negative = 0.0;  // min of g - p over the same samples
  bool domination_ok = false;
  // max over tested circles of p(z0) - (circle average), should be <= 0
  double max_submean_excess = 0.0;
  bool submean_ok = false;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return degrees_ok && effectivity_ok && domination_ok && submean_ok;
  }
};

// Numerical nefness witness for the positive part:
//  (i) degrees on C_0 and C_inf: zero within 1e-9 on a side with a finite
//      breakpoint; on a degenerate side (theta = 1 resp. vartheta = 0) the
//      value is log b resp. log a and must be >= 0;
//  (ii) p + theta log|z|^2 >= -1e-12 and g - p >= -1e-12 on `samples`
//      log-spaced radii;
//  (iii) p(z0) <= circle average + 1e-9 at the breakpoint circles and at
//      one radius inside every piece (epsilon = r/100, 720 angles).
NefReport nef_witness(const Params& p, const ArithRDivisor& d, int samples = 1000);

struct LimitRow {
  double t = 0.0;
  double vartheta = 0.0;
  double theta = 0.0;
  double vartheta_error = 0.0;  // |vartheta_t - b|
  double theta_error = 0.0;     // |theta_t - b|
  double sup_distance = 0.0;    // sup over 0.5 <= |z| <= 2 of |p_t + b log|z|^2|
};

struct LimitReport {
  std::vector<LimitRow> rows;
  bool theta_decreasing = false;
  bool distance_decreasing = false;
};

// Positive parts of D_{ta,tb} for t -> 1+ at a + b = 1. DomainError unless
// a + b = 1 and every t > 1.
LimitReport limit_positive_parts(const Params& p, const std::vector<double>& t_values,
                                 double r_min = 0.5, double r_max = 2.0,
                                 int radial_samples = 2001);

struct ProfileRow {
  double radius = 0.0;
  double p = 0.0;
  double g = 0.0;
  double neg = 0.0;
};

// Log-spaced samples of (p, g, g - p) on [r_min, r_max], strictly
// increasing in radius.
std::vector<ProfileRow> profile_rows(const Params& p, const ArithRDivisor& d,
                                     int samples, double r_min, double r_max);

}  // namespace p1z
