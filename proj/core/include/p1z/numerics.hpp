#pragma once

// Shared numeric kernel: bracketing root finder, adaptive Simpson
// quadrature, exact and log-space binomials, unit-ball volumes and a
// grid-plus-refinement maximizer on rectangles.
//
// Everything here is a pure function of its arguments.

#include <cstdint>
#include <functional>
#include <span>

#include <gmpxx.h>

namespace p1z {

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;

  // Throws DomainError unless all fields are strictly positive.
  void validate() const;
};

using RealFunction = std::function<double(double)>;
using RealFunction2 = std::function<double(double, double)>;

// Root of a continuous monotone f on [lo, hi] with f(lo) * f(hi) <= 0.
//
// Bisection interleaved with secant (regula falsi, Illinois variant) steps;
// every iteration keeps a sign-changing bracket, so the returned point is
// within abs_tol of a sign change of f. Returns early on an exact zero.
double find_root_monotone(const RealFunction& f, double lo, double hi,
                          const Tolerance& tol = {});

// The final sign-changing bracket of the same iteration, width <= abs_tol
// (or zero width on an exact hit). f_lo and f_hi are the values at the ends.
struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};
RootBracket find_root_bracket(const RealFunction& f, double lo, double hi,
                              const Tolerance& tol = {});

// Adaptive Simpson quadrature of f over [lo, hi].
//
// The requested accuracy is max(abs_tol, rel_tol * |I|), where |I| is taken
// from a 64-panel composite Simpson pre-pass. Improper integrals are the
// caller's job (substitute r = u / (1 - u) and supply finite endpoint
// values). Non-finite evaluations throw DomainError.
double integrate_adaptive(const RealFunction& f, double lo, double hi,
                          const Tolerance& tol = {});

// Integral of log(1/t - 1) over [lo, hi] subset of [0, 1], by quadrature.
//
// The integrand has logarithmic singularities at 0 and 1; the quadrature
// runs on [max(lo, eps), min(hi, 1 - eps)] with eps = 1e-15 and the clipped
// tails are added from their leading-order expansion (|tail| < 4e-14).
double log_odds_integral(double lo, double hi, const Tolerance& tol = {});

// C(n, i) as an exact big integer.
struct BigBinomial {
  int n = 0;
  int i = 0;
  mpz_class value;

  static BigBinomial compute(int n, int i);
};

// Natural log of C(n, i). Exact big-integer path for n <= 64, log-gamma
// above. Throws DomainError unless 0 <= i <= n.
double log_binomial(int n, int i);
double log_binomial_exact(int n, int i);
double log_binomial_lgamma(int n, int i);

inline constexpr int kExactBinomialMaxN = 64;

// log of the volume of the unit ball in R^m.
double log_ball_volume(int m);

// Natural log of a positive big integer or rational, without overflow.
double log_of(const mpz_class& value);
double log_of(const mpq_class& value);

// Sum with pairwise (cascade) reduction; the result depends only on the
// order of the input.
double pairwise_sum(std::span<const double> values);

struct Box2d {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  // When set, y wraps around [y_lo, y_hi) instead of being clamped.
  bool periodic_y = false;
};

struct Maximum2d {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  // Improvement gained by the last refinement sweep; a rough scale for how
  // far value may still sit below the true maximum.
  double last_gain = 0.0;
};

// Maximizes f over box: a grid x grid scan followed by refine_iters rounds
// of compass search with step halving, started from the best few grid cells.
// The returned value is always an actual evaluation of f, so it never
// exceeds the true maximum beyond evaluation round-off.
// Requires grid >= 16; non-finite evaluations throw DomainError.
Maximum2d maximize_2d(const RealFunction2& f, const Box2d& box, int grid = 64,
                      int refine_iters = 48);

}  // namespace p1z
