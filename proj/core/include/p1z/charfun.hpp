#pragma once

// The characteristic function
//
//   phi_{a,b}(x) = (1-x) log a + x log b - x log x - (1-x) log(1-x),
//
// its nonnegativity set Theta_{a,b} = [vartheta, theta], the Green function
// g_{a,b} = -log|z|^2 + log(a|z|^2 + b) of the divisor C_0, and the
// positivity geography of the pair (a, b).

#include <complex>
#include <optional>
#include <string_view>
#include <variant>

#include "p1z/numerics.hpp"
#include "p1z/rational.hpp"

namespace p1z {

// Tolerance used to detect a + b = 1 when the parameters are floating point.
inline constexpr double kBoundaryTol = 1e-14;

// The pair (a, b) of positive reals. Parameters built from rationals keep
// the exact values alongside the doubles; exact paths (boundary detection,
// Theta membership at i/n, enumeration filters) use them when present.
class Params {
 public:
  // Throws DomainError unless a, b are finite and > 0.
  Params(double a, double b);
  static Params exact(const Rational& a, const Rational& b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  bool is_exact() const noexcept { return qa_.has_value(); }
  const Rational& exact_a() const;
  const Rational& exact_b() const;

 private:
  Params() = default;
  double a_ = 1.0;
  double b_ = 1.0;
  std::optional<Rational> qa_;
  std::optional<Rational> qb_;
};

// Sign of a + b - 1: exact for rational parameters, within kBoundaryTol
// otherwise.
int sum_minus_one_sign(const Params& p);

enum class ThetaKind { Empty, Point, Interval };

struct ThetaInterval {
  ThetaKind kind = ThetaKind::Empty;
  double lower = 0.0;  // vartheta; meaningless when Empty
  double upper = 0.0;  // theta; meaningless when Empty
  double solver_tol = 0.0;

  bool empty() const noexcept { return kind == ThetaKind::Empty; }
  double length() const noexcept { return empty() ? 0.0 : upper - lower; }
  // Membership widened by solver_tol on both sides.
  bool contains(double x) const noexcept;
};

enum class GeographyClass {
  Ample,
  NefNotAmple,
  BigNotNef,
  PseudoEffectiveBoundary,
  NotPseudoEffective,
};

std::string_view to_string(GeographyClass c) noexcept;
std::string_view to_string(ThetaKind k) noexcept;

// Point of the Riemann sphere: a finite complex number or infinity.
struct PointAtInfinity {};
using SpherePoint = std::variant<std::complex<double>, PointAtInfinity>;

// phi_{a,b}(x) with 0 log 0 = 0. Throws DomainError for x outside [0, 1].
double phi(const Params& p, double x);

struct PhiMax {
  double argmax;
  double max;
};
// (b / (a + b), log(a + b)).
PhiMax phi_max(const Params& p);

// Exact sign of phi_{a,b}(i/n) for rational a, b, from
//   exp(-n phi(i/n)) = (n-i)^(n-i) i^i / (n^n a^(n-i) b^i).
int exact_phi_sign(const Rational& a, const Rational& b, int i, int n);

// Theta_{a,b}. Empty iff a + b < 1, the single point b/(a+b) iff a + b = 1,
// otherwise [vartheta, theta] found on the two monotone halves of phi.
ThetaInterval theta_interval(const Params& p, const Tolerance& tol = {});

GeographyClass classify(const Params& p);

// g_{a,b}(z): +inf at z = 0, log a at z = infinity.
double green_g(const Params& p, const SpherePoint& z);
// g_{a,b}(z) + log|z|^2 at z = 0, i.e. log b.
double green_g_regularized_at_zero(const Params& p);
// g_{a,b}(z) - log|z|^2 evaluated at infinity, i.e. log a.
double green_g_regularized_at_infinity(const Params& p);

// alpha D_{ta,tb} + beta D_{sa,sb} = (alpha + beta) D_{ca,cb} with
// c = (t^alpha s^beta)^(1/(alpha+beta)); returns (ca, cb).
// Throws DomainError when alpha + beta = 0 or t, s <= 0.
Params scaling_combine(double alpha, double t, double beta, double s,
                       const Params& p);

}  // namespace p1z
