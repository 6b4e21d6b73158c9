#include "p1z/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "p1z/charfun.hpp"
#include "p1z/errors.hpp"
#include "p1z/numerics.hpp"
#include "p1z/sections.hpp"
#include "p1z/volume.hpp"
#include "p1z/zariski.hpp"

namespace p1z {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

class Recorder {
 public:
  Recorder(VerifyReport& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  // Runs one check; library errors count as failures with their message.
  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{suite_, name, false, {}};
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    out_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& out_;
  std::string suite_;
};

// Random (a, b) with a + b >= 1 + margin.
Params random_big(Rng& rng, double margin = 1e-3) {
  for (;;) {
    const double a = log_uniform(rng, 0.05, 5.0);
    const double b = log_uniform(rng, 0.05, 5.0);
    if (a + b >= 1.0 + margin) return Params(a, b);
  }
}

void charfun_suite(VerifyReport& out, Rng& rng) {
  Recorder rec(out, "charfun");

  rec.check("phi scaling by t", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const double t = log_uniform(rng, 0.1, 10.0);
      const double x = uniform(rng, 0.0, 1.0);
      const double lhs = phi(Params(t * p.a(), t * p.b()), x);
      const double rhs = phi(p, x) + std::log(t);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    ok = worst <= 1e-13;
    return "max residual " + num(worst);
  });

  rec.check("phi symmetry", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const double x = uniform(rng, 0.0, 1.0);
      worst = std::max(worst, std::abs(phi(p, x) - phi(Params(p.b(), p.a()), 1.0 - x)));
    }
    ok = worst <= 1e-13;
    return "max residual " + num(worst);
  });

  rec.check("phi maximum", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 200; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const auto m = phi_max(p);
      if (std::abs(phi(p, m.argmax) - m.max) > 1e-13) ++bad;
      for (double x : {m.argmax * 0.9, m.argmax + (1.0 - m.argmax) * 0.1}) {
        if (phi(p, x) > m.max) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  rec.check("theta interval endpoints", [&](bool& ok) {
    int bad = 0;
    Tolerance tol;
    for (int k = 0; k < 1000; ++k) {
      const Params p = random_big(rng);
      const auto th = theta_interval(p, tol);
      if (th.kind != ThetaKind::Interval) ++bad;
      if (phi(p, th.lower) < -tol.abs_tol || phi(p, th.upper) < -tol.abs_tol) ++bad;
      if (th.lower > 0.0 && phi(p, th.lower - 10 * tol.abs_tol) >= 0.0) ++bad;
      if (th.upper < 1.0 && phi(p, th.upper + 10 * tol.abs_tol) >= 0.0) ++bad;
      if (!(phi(p, 0.5 * (th.lower + th.upper)) > 0.0)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations over 1000 parameters";
  });

  rec.check("classify agrees with theta", [&](bool& ok) {
    int bad = 0;
    const auto agree = [&](const Params& p) {
      const auto th = theta_interval(p);
      const auto c = classify(p);
      const bool empty_ok = th.empty() == (c == GeographyClass::NotPseudoEffective);
      const bool point_ok =
          (th.kind == ThetaKind::Point) == (c == GeographyClass::PseudoEffectiveBoundary);
      const bool big = c == GeographyClass::Ample || c == GeographyClass::NefNotAmple ||
                       c == GeographyClass::BigNotNef;
      const bool big_ok = (th.kind == ThetaKind::Interval && th.length() > 0.0) == big;
      if (!(empty_ok && point_ok && big_ok)) ++bad;
    };
    for (int k = 0; k < 1000; ++k) {
      agree(Params(log_uniform(rng, 0.05, 5.0), log_uniform(rng, 0.05, 5.0)));
    }
    for (int q = 2; q <= 12; ++q) {
      for (int r = 1; r < q; ++r) agree(Params::exact(Rational(q - r, q), Rational(r, q)));
    }
    ok = bad == 0;
    return std::to_string(bad) + " disagreements";
  });

  rec.check("green scaling identity", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const double alpha = uniform(rng, 0.1, 3.0);
      const double beta = uniform(rng, 0.1, 3.0);
      const double t = log_uniform(rng, 0.1, 10.0);
      const double s = log_uniform(rng, 0.1, 10.0);
      const Params c = scaling_combine(alpha, t, beta, s, p);
      const std::complex<double> z =
          std::polar(log_uniform(rng, 1e-3, 1e3), uniform(rng, 0.0, 6.283185307179586));
      const double lhs = alpha * green_g(Params(t * p.a(), t * p.b()), z) +
                         beta * green_g(Params(s * p.a(), s * p.b()), z);
      const double rhs = (alpha + beta) * green_g(c, z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    ok = worst <= 1e-12;
    return "max residual " + num(worst);
  });
}

// ab int_0^inf r^(l-k) / (ar + b)^(l+2) dr after r = u / (1 - u).
double radial_integral_quadrature(const Params& p, int k, int l) {
  const double a = p.a();
  const double b = p.b();
  auto f = [&](double u) {
    const double v = 1.0 - u;
    const double den = a * u + b * v;
    return a * b * std::pow(u, l - k) * std::pow(v, k) / std::pow(den, l + 2);
  };
  return integrate_adaptive(f, 0.0, 1.0, {1e-300, 1e-11, 200});
}

IntegerSection random_section(Rng& rng, int n, int bound) {
  IntegerSection s = IntegerSection::zero(n);
  std::uniform_int_distribution<int> dist(-bound, bound);
  while (s.is_zero()) {
    for (auto& c : s.coeffs) c = dist(rng);
  }
  return s;
}

void sections_suite(VerifyReport& out, Rng& rng) {
  Recorder rec(out, "sections");
  const double grid[] = {0.5, 1.0, 2.0};

  rec.check("monomial L2 norms match quadrature", [&](bool& ok) {
    double worst = 0.0;
    for (double a : grid) {
      for (double b : grid) {
        const Params p(a, b);
        for (int n = 1; n <= 25; ++n) {
          for (int i = 0; i <= n; ++i) {
            const double q = radial_integral_quadrature(p, i, n);
            const double v = monomial_l2_norm_sq(p, {n, i});
            worst = std::max(worst, std::abs(q - v) / v);
          }
        }
      }
    }
    ok = worst <= 1e-8;
    return "max relative error " + num(worst);
  });

  rec.check("radial integral recurrence", [&](bool& ok) {
    double worst = 0.0;
    for (double a : grid) {
      for (double b : grid) {
        const Params p(a, b);
        for (int l = 0; l <= 12; ++l) {
          for (int k = 0; k <= l; ++k) {
            const double q = radial_integral_quadrature(p, k, l);
            worst = std::max(worst, std::abs(q - radial_integral(p, k, l)) / q);
          }
        }
      }
    }
    ok = worst <= 1e-8;
    return "max relative error " + num(worst);
  });

  rec.check("monomial sup norms match maximizer", [&](bool& ok) {
    double worst = 0.0;
    for (double a : grid) {
      for (double b : grid) {
        const Params p(a, b);
        for (int n : {1, 3, 7, 12, 20}) {
          for (int i = 0; i <= n; ++i) {
            const double closed = monomial_sup_norm_sq(p, {n, i});
            const auto num_sup = section_sup_norm_sq(p, IntegerSection::monomial(n, i));
            worst = std::max(worst, std::abs(num_sup.value - closed) / closed);
          }
        }
      }
    }
    ok = worst <= 1e-8;
    return "max relative error " + num(worst);
  });

  rec.check("L2 norm below sup norm", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 300; ++k) {
      const Params p(log_uniform(rng, 0.3, 3.0), log_uniform(rng, 0.3, 3.0));
      const int n = 1 + static_cast<int>(rng() % 5);
      const auto s = random_section(rng, n, 3);
      const double l2 = section_l2_norm_sq(p, s);
      const auto sup = section_sup_norm_sq(p, s);
      if (l2 > sup.value * (1.0 + sup.rel_uncertainty + 1e-12)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations over 300 sections";
  });

  rec.check("log binomial symmetry and paths", [&](bool& ok) {
    int bad = 0;
    for (int n = 0; n <= kExactBinomialMaxN; ++n) {
      for (int i = 0; i <= n; ++i) {
        if (log_binomial(n, i) != log_binomial(n, n - i)) ++bad;
        const double e = log_binomial_exact(n, i);
        const double g = log_binomial_lgamma(n, i);
        if (std::abs(e - g) > 1e-12 * std::max(1.0, std::abs(e))) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  rec.check("log binomial integral sandwich", [&](bool& ok) {
    int bad = 0;
    const Tolerance qt{1e-9, 1e-9, 200};
    for (int k = 0; k < 200; ++k) {
      const int n = 1 + static_cast<int>(rng() % 500);
      const int i = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      const double v = log_binomial(n, i) / (n + 1);
      const double lo = log_odds_integral(1.0 / (n + 1), (i + 1.0) / (n + 1), qt);
      const double hi = log_odds_integral(0.0, static_cast<double>(i) / (n + 1), qt);
      if (v < lo - 1e-9 || v > hi + 1e-9) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations over 200 (n, i)";
  });

  rec.check("sup enumeration monomials equal the span", [&](bool& ok) {
    int bad = 0;
    const Rational probes[][2] = {{1, 1}, {2, 2}, {Rational(1, 2), Rational(1, 2)},
                                  {Rational(3, 5), Rational(3, 5)}, {Rational(3, 2), Rational(1, 3)}};
    for (const auto& ab : probes) {
      const auto p = Params::exact(ab[0], ab[1]);
      const auto th = theta_interval(p);
      for (int n = 1; n <= 5; ++n) {
        EnumerateOptions opts;
        opts.monomials_only = true;
        std::set<std::pair<int, int>> got;
        for (const auto& e : h0_enumerate(p, n, NormKind::Sup, {}, opts)) {
          if (e.section.is_zero()) {
            got.insert({-1, 0});
            continue;
          }
          const auto idx = e.section.monomial_index();
          if (idx) got.insert({*idx, static_cast<int>(e.section.coeffs[*idx])});
        }
        std::set<std::pair<int, int>> want{{-1, 0}};
        if (h0_nonzero(p, n, th)) {
          for (int i : h0_monomial_span(p, n, th)) {
            want.insert({i, 1});
            want.insert({i, -1});
          }
        }
        if (got != want) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " mismatched levels";
  });

  rec.check("sup sections are L2 sections", [&](bool& ok) {
    int bad = 0;
    for (const auto& ab : {std::pair{1, 1}, std::pair{2, 1}}) {
      const auto p = Params::exact(ab.first, ab.second);
      for (int n = 1; n <= 3; ++n) {
        const auto sup = h0_enumerate(p, n, NormKind::Sup);
        const auto l2 = h0_enumerate(p, n, NormKind::L2);
        std::set<IntegerSection> l2set;
        for (const auto& e : l2) l2set.insert(e.section);
        for (const auto& e : sup) {
          if (!l2set.contains(e.section)) ++bad;
        }
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " sup sections outside the L2 set";
  });

  rec.check("squares of small sections stay small", [&](bool& ok) {
    int bad = 0;
    const auto p = Params::exact(1, 1);
    for (int n = 1; n <= 2; ++n) {
      for (const auto& e : h0_enumerate(p, n, NormKind::Sup)) {
        if (e.section.is_zero() || e.boundary_uncertain) continue;
        const auto sq = square(e.section);
        const auto sup = section_sup_norm_sq(p, sq);
        if (sup.value > 1.0 + 1e-9) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " squares above 1";
  });

  rec.check("semi-axes dominate exp(n phi)", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      const Params p = random_big(rng, 0.05);
      const auto th = theta_interval(p);
      const int n = 1 + static_cast<int>(rng() % 200);
      if (!h0_nonzero(p, n, th)) continue;
      const auto spec = ellipsoid_spec(p, n, th);
      for (int i = spec.range_lo; i <= spec.range_hi; ++i) {
        const double lr = spec.log_semi_axes_sq[static_cast<std::size_t>(i - spec.range_lo)];
        const double f = n * phi(p, static_cast<double>(i) / n);
        if (lr < f - 1e-9 * std::max(1.0, std::abs(f)) || lr < -1e-9) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
}

void volume_suite(VerifyReport& out, Rng& rng) {
  Recorder rec(out, "volume");

  rec.check("antiderivative differentiates to phi", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const double x = uniform(rng, 0.02, 0.98);
      const double h = 1e-2 * std::min(x, 1.0 - x);
      const auto F = [&](double y) { return phi_antiderivative(p, y); };
      // Fourth-order central difference.
      const double d = (-F(x + 2 * h) + 8 * F(x + h) - 8 * F(x - h) + F(x - 2 * h)) / (12 * h);
      worst = std::max(worst, std::abs(d - phi(p, x)));
    }
    ok = worst <= 1e-9;
    return "max residual " + num(worst);
  });

  rec.check("closed form equals quadrature", [&](bool& ok) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double a = 0.1 * std::pow(40.0, i / 19.0);
        const double b = 0.1 * std::pow(40.0, j / 19.0);
        const Params p(a, b);
        const auto th = theta_interval(p);
        worst = std::max(worst, std::abs(volume_closed(p, th) - volume_quadrature(p, th)));
      }
    }
    ok = worst <= 1e-9;
    return "max difference " + num(worst);
  });

  rec.check("self-intersection formula", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Params p(log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0));
      const double q = integrate_adaptive([&](double x) { return phi(p, x); }, 0.0, 1.0,
                                          {1e-13, 1e-12, 200});
      worst = std::max(worst, std::abs(q - selfint_degree(p)));
    }
    ok = worst <= 1e-10;
    return "max difference " + num(worst);
  });

  rec.check("volume above self-intersection, equal iff nef", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      const Params p(log_uniform(rng, 0.2, 5.0), log_uniform(rng, 0.2, 5.0));
      const auto c = classify(p);
      const bool nef = c == GeographyClass::Ample || c == GeographyClass::NefNotAmple;
      const double v = volume_closed(p, theta_interval(p));
      const double s = selfint_degree(p);
      if (nef ? std::abs(v - s) > 1e-10 : !(v > s)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  rec.check("volume is monotone in a and b", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
      const Params p(log_uniform(rng, 0.1, 4.0), log_uniform(rng, 0.1, 4.0));
      const Params q(p.a() * log_uniform(rng, 1.0, 2.0), p.b() * log_uniform(rng, 1.0, 2.0));
      if (volume_closed(q, theta_interval(q)) < volume_closed(p, theta_interval(p)) - 1e-12) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  rec.check("volume vanishes toward the boundary", [&](bool& ok) {
    bool all = true;
    std::string detail;
    for (double b : {0.5, 0.2, 0.9}) {
      const Params p(1.0 - b, b);
      double prev = INFINITY;
      for (double t : {1.1, 1.01, 1.001, 1.0001}) {
        const Params pt(t * p.a(), t * p.b());
        const double v = volume_closed(pt, theta_interval(pt));
        if (!(v < prev) || v < 0.0) all = false;
        prev = v;
      }
      if (prev > 1e-5) all = false;
      detail += "b=" + num(b) + ": " + num(prev) + " ";
    }
    ok = all;
    return detail;
  });

  rec.check("lattice bounds bracket the volume", [&](bool& ok) {
    int bad = 0;
    const std::pair<double, double> probes[] = {{1.0, 1.0}, {2.0, 2.0}, {0.6, 0.6}, {1.5, 0.5}, {3.0, 0.2}};
    for (const auto& [a, b] : probes) {
      const Params p(a, b);
      const auto th = theta_interval(p);
      const double v = volume_closed(p, th);
      for (int n : {50, 200, 800, 3200}) {
        if (!h0_nonzero(p, n, th)) continue;
        const auto est = volume_lattice_estimate(p, n, th);
        if (est.lower > v + 1e-9 || est.upper < v - 1e-9) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations at the probe points";
  });

  // At small n the normalized Minkowski lower bound may sit slightly above
  // the volume when Theta reaches an endpoint of [0, 1]; only convergence
  // is asserted for random parameters.
  rec.check("lattice bounds converge to the volume", [&](bool& ok) {
    int bad = 0;
    double worst = 0.0;
    for (int k = 0; k < 40; ++k) {
      const Params p = random_big(rng, 0.3);
      const auto th = theta_interval(p);
      const double v = volume_closed(p, th);
      const int n = minimal_nonempty_level(p, th, 3200);
      if (n == 0) continue;
      const auto est = volume_lattice_estimate(p, n, th);
      const double gap = std::max(std::abs(est.lower - v), std::abs(est.upper - v));
      worst = std::max(worst, gap);
      if (est.lower > est.upper || gap > 0.01) ++bad;
    }
    ok = bad == 0;
    return "max distance at n = 3200: " + num(worst);
  });

  rec.check("gap constructor", [&](bool& ok) {
    int bad = 0;
    for (int n = 1; n <= 8; ++n) {
      const auto g = construct_gap_params(n);
      if (!(g.a + g.b > 1) || classify(g.params) != GeographyClass::BigNotNef ||
          !g.theta_inside || !g.no_small_sections) {
        ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " failing levels";
  });
}

void zariski_suite(VerifyReport& out, Rng& rng) {
  Recorder rec(out, "zariski");

  rec.check("profile continuity at breakpoints", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Params p = random_big(rng);
      const auto d = positive_part(p, theta_interval(p));
      const auto& pieces = d.green.pieces();
      for (std::size_t j = 0; j + 1 < pieces.size(); ++j) {
        const double r = pieces[j].r_hi;
        worst = std::max(worst, std::abs(d.green.eval_piece(pieces[j], r) -
                                         d.green.eval_piece(pieces[j + 1], r)));
      }
    }
    ok = worst <= 1e-9;
    return "max jump " + num(worst);
  });

  rec.check("positive part below g", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Params p = random_big(rng, 0.0);
      const auto d = positive_part(p, theta_interval(p));
      for (const auto& row : profile_rows(p, d, 10000, 1e-4, 1e4)) {
        worst = std::min(worst, row.neg);
      }
    }
    ok = worst >= -1e-12;
    return "min of g - p " + num(worst);
  });

  rec.check("r1 and r2 are nonnegative", [&](bool& ok) {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const Params p = random_big(rng);
      const auto th = theta_interval(p);
      const auto radii = breakpoint_radii(p, th);
      for (int j = 0; j < 200; ++j) {
        const double r = log_uniform(rng, 1e-4, 1e4);
        const std::complex<double> z(r, 0.0);
        if (r < radii.r_out) worst = std::min(worst, eval_r1(p, th, z));
        if (r > radii.r_in) worst = std::min(worst, eval_r2(p, th, z));
      }
      worst = std::min(worst, eval_r1(p, th, std::complex<double>(0.0, 0.0)));
      worst = std::min(worst, eval_r2(p, th, PointAtInfinity{}));
    }
    ok = worst >= -1e-12;
    return "min value " + num(worst);
  });

  rec.check("nef witness", [&](bool& ok) {
    int bad = 0;
    std::string first;
    for (int k = 0; k < 200; ++k) {
      const Params p = random_big(rng);
      const auto rep = nef_witness(p, positive_part(p, theta_interval(p)), 500);
      if (!rep.passed()) {
        ++bad;
        if (first.empty() && !rep.failures.empty()) first = rep.failures.front();
      }
    }
    for (const auto& p : {Params(1.0, 1.0), Params(0.6, 0.6), Params::exact(Rational(1, 2), Rational(1, 2))}) {
      const auto rep = nef_witness(p, positive_part(p, theta_interval(p)), 500);
      if (!rep.passed()) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " failures" + (first.empty() ? "" : "; " + first);
  });

  rec.check("nef divisors are their own positive part", [&](bool& ok) {
    int bad = 0;
    for (int k = 0; k < 200; ++k) {
      const Params p(log_uniform(rng, 1.0, 5.0), log_uniform(rng, 1.0, 5.0));
      const auto th = theta_interval(p);
      const auto d = positive_part(p, th);
      if (th.upper != 1.0 || th.lower != 0.0 || d.green.pieces().size() != 1 ||
          d.green.pieces().front().kind != PieceKind::FullGreen || d.c0 != 1.0 || d.cinf != 0.0) {
        ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  rec.check("positive parts grow with t", [&](bool& ok) {
    double worst = 0.0;
    for (double b : {0.5, 0.3, 0.8}) {
      const double ts[] = {1.001, 1.01, 1.1, 1.5};
      for (int j = 0; j + 1 < 4; ++j) {
        const Params lo(ts[j] * (1.0 - b), ts[j] * b);
        const Params hi(ts[j + 1] * (1.0 - b), ts[j + 1] * b);
        const auto dlo = positive_part(lo, theta_interval(lo));
        const auto dhi = positive_part(hi, theta_interval(hi));
        for (int s = 0; s <= 400; ++s) {
          const double r = 0.5 * std::pow(4.0, s / 400.0);
          worst = std::max(worst, dlo.green.at_radius(r) - dhi.green.at_radius(r));
        }
      }
    }
    ok = worst <= 1e-12;
    return "max excess " + num(worst);
  });

  rec.check("boundary limit converges", [&](bool& ok) {
    bool all = true;
    std::string detail;
    for (double b : {0.5, 0.25}) {
      const auto rep = limit_positive_parts(Params(1.0 - b, b), {1.1, 1.01, 1.001, 1.0001});
      all = all && rep.theta_decreasing && rep.distance_decreasing;
      detail += "b=" + num(b) + ": final distance " + num(rep.rows.back().sup_distance) + " ";
    }
    ok = all;
    return detail;
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "charfun") return Suite::Charfun;
  if (name == "sections") return Suite::Sections;
  if (name == "volume") return Suite::Volume;
  if (name == "zariski") return Suite::Zariski;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Charfun: return "charfun";
    case Suite::Sections: return "sections";
    case Suite::Volume: return "volume";
    case Suite::Zariski: return "zariski";
    case Suite::All: return "all";
  }
  return "?";
}

bool VerifyReport::passed() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(Suite suite, std::uint64_t seed) {
  VerifyReport out;
  Rng rng(seed);
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Charfun) charfun_suite(out, rng);
  if (all || suite == Suite::Sections) sections_suite(out, rng);
  if (all || suite == Suite::Volume) volume_suite(out, rng);
  if (all || suite == Suite::Zariski) zariski_suite(out, rng);
  return out;
}

}  // namespace p1z
