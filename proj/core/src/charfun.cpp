#include "p1z/charfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "p1z/errors.hpp"

namespace p1z {

namespace {

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// Sign of (value - 1) for a or b, exact when available.
int compare_to_one(const Params& p, bool first) {
  if (p.is_exact()) {
    return cmp(first ? p.exact_a() : p.exact_b(), 1);
  }
  const double v = first ? p.a() : p.b();
  return v > 1.0 ? 1 : (v < 1.0 ? -1 : 0);
}

}  // namespace

Params::Params(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(b > 0.0)) {
    throw DomainError("parameters a, b must be finite and positive (got a = " +
                      std::to_string(a) + ", b = " + std::to_string(b) + ")");
  }
}

Params Params::exact(const Rational& a, const Rational& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) {
    throw DomainError("parameters a, b must be positive (got a = " +
                      to_string(a) + ", b = " + to_string(b) + ")");
  }
  Params p(a.get_d(), b.get_d());
  p.qa_ = a;
  p.qb_ = b;
  return p;
}

const Rational& Params::exact_a() const {
  if (!qa_) throw DomainError("parameters are not exact rationals");
  return *qa_;
}

const Rational& Params::exact_b() const {
  if (!qb_) throw DomainError("parameters are not exact rationals");
  return *qb_;
}

int sum_minus_one_sign(const Params& p) {
  if (p.is_exact()) return cmp(p.exact_a() + p.exact_b(), 1);
  const double d = (p.a() - 1.0) + p.b();
  if (std::abs(d) <= kBoundaryTol) return 0;
  return d > 0.0 ? 1 : -1;
}

bool ThetaInterval::contains(double x) const noexcept {
  if (empty()) return false;
  return x >= lower - solver_tol && x <= upper + solver_tol;
}

std::string_view to_string(GeographyClass c) noexcept {
  switch (c) {
    case GeographyClass::Ample: return "Ample";
    case GeographyClass::NefNotAmple: return "NefNotAmple";
    case GeographyClass::BigNotNef: return "BigNotNef";
    case GeographyClass::PseudoEffectiveBoundary: return "PseudoEffectiveBoundary";
    case GeographyClass::NotPseudoEffective: return "NotPseudoEffective";
  }
  return "?";
}

std::string_view to_string(ThetaKind k) noexcept {
  switch (k) {
    case ThetaKind::Empty: return "Empty";
    case ThetaKind::Point: return "Point";
    case ThetaKind::Interval: return "Interval";
  }
  return "?";
}

double phi(const Params& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("phi: x must lie in [0, 1], got " + std::to_string(x));
  }
  if (x == 0.0) return std::log(p.a());
  if (x == 1.0) return std::log(p.b());
  return (1.0 - x) * std::log(p.a()) + x * std::log(p.b()) - xlogx(x) -
         xlogx(1.0 - x);
}

PhiMax phi_max(const Params& p) {
  return {p.b() / (p.a() + p.b()), std::log(p.a() + p.b())};
}

int exact_phi_sign(const Rational& a, const Rational& b, int i, int n) {
  if (n < 1 || i < 0 || i > n) {
    throw DomainError("exact_phi_sign: need 0 <= i <= n, n >= 1");
  }
  const auto un = static_cast<unsigned long>(n);
  const auto ui = static_cast<unsigned long>(i);
  const Rational lhs = Rational(pow(mpz_class(n), un)) * pow(a, un - ui) *
                       pow(b, ui);
  const Rational rhs =
      Rational(pow(mpz_class(n - i), un - ui) * pow(mpz_class(i), ui));
  const int c = cmp(lhs, rhs);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

ThetaInterval theta_interval(const Params& p, const Tolerance& tol) {
  tol.validate();
  ThetaInterval out;
  out.solver_tol = tol.abs_tol;
  const int s = sum_minus_one_sign(p);
  if (s < 0) return out;
  if (s == 0) {
    out.kind = ThetaKind::Point;
    const double m = p.is_exact()
                         ? Rational(p.exact_b() / (p.exact_a() + p.exact_b())).get_d()
                         : p.b() / (p.a() + p.b());
    out.lower = out.upper = m;
    return out;
  }
  out.kind = ThetaKind::Interval;
  const double m = p.b() / (p.a() + p.b());
  auto f = [&p](double x) { return phi(p, x); };
  // Keep the bracket end on which phi >= 0, so the endpoints belong to Theta.
  if (compare_to_one(p, true) >= 0) {
    out.lower = 0.0;
  } else {
    const auto br = find_root_bracket(f, 0.0, m, tol);
    out.lower = br.f_hi >= 0.0 ? br.hi : br.lo;
  }
  if (compare_to_one(p, false) >= 0) {
    out.upper = 1.0;
  } else {
    const auto br = find_root_bracket(f, m, 1.0, tol);
    out.upper = br.f_lo >= 0.0 ? br.lo : br.hi;
  }
  return out;
}

GeographyClass classify(const Params& p) {
  const int ca = compare_to_one(p, true);
  const int cb = compare_to_one(p, false);
  if (ca > 0 && cb > 0) return GeographyClass::Ample;
  if (ca >= 0 && cb >= 0) return GeographyClass::NefNotAmple;
  const int s = sum_minus_one_sign(p);
  if (s > 0) return GeographyClass::BigNotNef;
  if (s == 0) return GeographyClass::PseudoEffectiveBoundary;
  return GeographyClass::NotPseudoEffective;
}

double green_g(const Params& p, const SpherePoint& z) {
  if (std::holds_alternative<PointAtInfinity>(z)) return std::log(p.a());
  const double r = std::abs(std::get<std::complex<double>>(z));
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  if (r >= 1.0) return std::log(p.a() + p.b() / (r * r));
  return -2.0 * std::log(r) + std::log(p.a() * r * r + p.b());
}

double green_g_regularized_at_zero(const Params& p) { return std::log(p.b()); }

double green_g_regularized_at_infinity(const Params& p) {
  return std::log(p.a());
}

Params scaling_combine(double alpha, double t, double beta, double s,
                       const Params& p) {
  if (alpha + beta == 0.0) {
    throw DomainError("scaling_combine: alpha + beta must be nonzero");
  }
  if (!(t > 0.0) || !(s > 0.0)) {
    throw DomainError("scaling_combine: t and s must be positive");
  }
  const double log_c = (alpha * std::log(t) + beta * std::log(s)) / (alpha + beta);
  const double c = std::exp(log_c);
  return Params(c * p.a(), c * p.b());
}

}  // namespace p1z
