#pragma once

// Arithmetic volume of D_{a,b}: the integral of phi over Theta (closed form
// and quadrature), lattice-point estimates through the ellipsoids K_n, the
// arithmetic self-intersection, and a constructor of big divisors without
// small sections up to a given level.

#include "p1z/charfun.hpp"
#include "p1z/numerics.hpp"
#include "p1z/rational.hpp"
#include "p1z/sections.hpp"

namespace p1z {

// Antiderivative of phi_{a,b} with F(0) = -1/4:
//   F(x) = (x - x^2/2) log a + x^2/2 log b - x^2/2 log x + x^2/4
//          + (1-x)^2/2 log(1-x) - (1-x)^2/4.
double phi_antiderivative(const Params& p, double x);

// int_Theta phi; zero when Theta is empty or a single point.
double volume_closed(const Params& p, const ThetaInterval& theta);

double volume_quadrature(const Params& p, const ThetaInterval& theta,
                         const Tolerance& tol = {});

// (log(ab) + 1) / 2 = int_0^1 phi.
double selfint_degree(const Params& p);

struct LatticeEstimate {
  int n = 0;
  double lower = 0.0;  // 2 log_lower / (n+1)^2
  double upper = 0.0;  // 2 log_upper / (n+1)^2
};

// Smallest level m >= from with n Theta cap Z nonempty, or 0 if none is
// found before `limit`.
int minimal_nonempty_level(const Params& p, const ThetaInterval& theta,
                           int from = 1, int limit = 1 << 20);

// Normalized Minkowski bounds at level n. Requires a + b > 1
// (DomainError otherwise); EmptyError carries the next usable level.
LatticeEstimate volume_lattice_estimate(const Params& p, int n,
                                        const ThetaInterval& theta);
LatticeEstimate volume_lattice_estimate(const Params& p, int n);

struct VolumeReport {
  double closed = 0.0;
  double quadrature = 0.0;
  double lattice_lower = 0.0;
  double lattice_upper = 0.0;
  int n_used = 0;  // 0 when the lattice estimate does not apply
};

VolumeReport volume_report(const Params& p, int n, const Tolerance& tol = {});

struct GapConstruction {
  Params params;
  Rational a;
  Rational b;
  Rational lambda;         // the accepted scaling factor 1 + 2^-k
  Rational base_a;         // n / (n+1)
  Rational base_b;         // 1 / (n+1)
  int level = 0;           // n
  bool theta_inside = false;     // 0 < vartheta <= theta < 1/n (exact signs)
  bool no_small_sections = false;  // h0_nonzero(l) false for l = 1..n
};

// Rational (a, b) with 0 < a, b < 1, a + b > 1 and no nonzero small
// sections at levels 1..n. Throws DomainError for n < 1.
GapConstruction construct_gap_params(int n);

}  // namespace p1z
