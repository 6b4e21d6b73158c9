#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "p1z/charfun.hpp"
#include "p1z/errors.hpp"
#include "p1z/numerics.hpp"

using namespace p1z;

TEST_CASE("root of a linear function") {
  CHECK(find_root_monotone([](double x) { return x - 0.5; }, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("entropy level set root") {
  const Params p(1.0, 1.0);
  auto f = [&](double x) { return phi(p, x) - std::log(2.0) / 2.0; };
  const double x = find_root_monotone(f, 0.0, 0.5);
  CHECK(std::abs(x - oracle::kEntropyHalfLog2Root) <= 1e-12);
  CHECK(std::abs(f(x)) <= 1e-11);
}

TEST_CASE("root finder needs a sign change") {
  CHECK(find_root_monotone([](double x) { return x * x; }, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(find_root_monotone([](double x) { return x * x + 0.5; }, 0.0, 1.0), BracketError);
  CHECK_THROWS_AS(find_root_monotone([](double x) { return x + 1.0; }, 0.0, 1.0), BracketError);
}

TEST_CASE("root finder reports exhausted iterations") {
  Tolerance tol;
  tol.abs_tol = 1e-300;
  tol.max_iter = 3;
  CHECK_THROWS_AS(find_root_monotone([](double x) { return std::exp(x) - 1.5; }, 0.0, 1.0, tol),
                  ConvergenceError);
}

TEST_CASE("root bracket keeps the sign change") {
  auto f = [](double x) { return std::exp(x) - 2.0; };
  const auto br = find_root_bracket(f, 0.0, 3.0);
  CHECK(br.hi - br.lo <= 1e-12);
  CHECK(br.f_lo * br.f_hi <= 0.0);
  CHECK(br.lo <= std::log(2.0));
  CHECK(br.hi >= std::log(2.0));
}

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.rel_tol = 0.0;
  CHECK_THROWS_AS(t.validate(), DomainError);
  t = Tolerance{};
  t.max_iter = 0;
  CHECK_THROWS_AS(t.validate(), DomainError);
}

TEST_CASE("quadrature basics") {
  CHECK(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0));
  const double entropy = integrate_adaptive(
      [](double x) {
        auto xlx = [](double u) { return u == 0.0 ? 0.0 : u * std::log(u); };
        return -xlx(x) - xlx(1.0 - x);
      },
      0.0, 1.0);
  CHECK(std::abs(entropy - 0.5) <= 1e-10);
  const Params p(2.0, 2.0);
  const double v = integrate_adaptive([&](double x) { return phi(p, x); }, 0.0, 1.0);
  CHECK(std::abs(v - (std::log(4.0) + 1.0) / 2.0) <= 1e-10);
}

TEST_CASE("quadrature is linear") {
  auto f = [](double x) { return std::sin(3.0 * x) + x * x; };
  auto g = [](double x) { return std::exp(-x) * std::cos(x); };
  const double alpha = 1.7;
  const double beta = -0.4;
  const double lhs = integrate_adaptive([&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 2.0);
  const double rhs = alpha * integrate_adaptive(f, 0.0, 2.0) + beta * integrate_adaptive(g, 0.0, 2.0);
  CHECK(std::abs(lhs - rhs) <= 2e-10);
}

TEST_CASE("quadrature rejects non-finite values") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
                  DomainError);
}

TEST_CASE("log-odds integral against the entropy antiderivative") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CHECK(std::abs(log_odds_integral(0.0, 1.0)) <= 1e-12);
  for (int k = 0; k < 50; ++k) {
    double lo = u(rng);
    double hi = u(rng);
    if (lo > hi) std::swap(lo, hi);
    const double want = static_cast<double>(oracle::log_odds_integral(lo, hi));
    CHECK(std::abs(log_odds_integral(lo, hi) - want) <= 1e-10);
  }
  CHECK(std::abs(log_odds_integral(0.0, 0.3) - static_cast<double>(oracle::log_odds_integral(0.0, 0.3))) <= 1e-10);
}

TEST_CASE("binomials") {
  CHECK(BigBinomial::compute(4, 2).value == 6);
  CHECK(BigBinomial::compute(60, 30).value == mpz_class("118264581564861424"));
  CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)));
  CHECK(log_binomial(17, 0) == 0.0);
  CHECK_THROWS_AS(log_binomial(3, 4), DomainError);
  CHECK_THROWS_AS(log_binomial(3, -1), DomainError);
}

TEST_CASE("log binomial symmetry and path agreement") {
  for (int n = 0; n <= kExactBinomialMaxN; ++n) {
    for (int i = 0; i <= n; ++i) {
      REQUIRE(log_binomial(n, i) == log_binomial(n, n - i));
      const double e = log_binomial_exact(n, i);
      CHECK(std::abs(e - log_binomial_lgamma(n, i)) <= 1e-12 * std::max(1.0, e));
    }
  }
  CHECK(log_binomial(1000, 500) == doctest::Approx(log_binomial_exact(1000, 500)).epsilon(1e-12));
}

TEST_CASE("binomial integral sandwich") {
  for (int n = 1; n <= 500; n += (n < 40 ? 1 : 37)) {
    for (int i = 0; i <= n; ++i) {
      const long double v = log_binomial(n, i) / (n + 1.0);
      const long double lo = oracle::log_odds_integral(1.0L / (n + 1), (i + 1.0L) / (n + 1));
      const long double hi = oracle::log_odds_integral(0.0L, static_cast<long double>(i) / (n + 1));
      CHECK(v >= lo - 1e-12L);
      CHECK(v <= hi + 1e-12L);
    }
  }
}

TEST_CASE("ball volumes") {
  CHECK(log_ball_volume(1) == doctest::Approx(std::log(2.0)));
  CHECK(log_ball_volume(2) == doctest::Approx(std::log(std::numbers::pi)));
  CHECK(log_ball_volume(3) == doctest::Approx(std::log(4.0 * std::numbers::pi / 3.0)));
  CHECK_THROWS_AS(log_ball_volume(0), DomainError);
}

TEST_CASE("logs of big numbers") {
  const mpz_class big = mpz_class(1) << 5000;
  CHECK(log_of(big) == doctest::Approx(5000 * std::log(2.0)));
  CHECK(log_of(mpq_class(1, 3)) == doctest::Approx(-std::log(3.0)));
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("2d maximizer") {
  const auto c = maximize_2d([](double, double) { return 3.0; }, {});
  CHECK(c.value == 3.0);
  const auto q = maximize_2d([](double x, double y) { return -(x - 1) * (x - 1) - (y - 2) * (y - 2); },
                             {-3.0, 3.0, -1.0, 4.0, false});
  CHECK(q.value <= 0.0);
  CHECK(q.value >= -1e-12);
  CHECK(q.x == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(q.y == doctest::Approx(2.0).epsilon(1e-5));
  CHECK_THROWS_AS(maximize_2d([](double, double) { return 0.0; }, {}, 8), DomainError);
  CHECK_THROWS_AS(maximize_2d([](double, double) { return NAN; }, {}), DomainError);
}

TEST_CASE("2d maximizer on a monomial density") {
  const double a = 0.7;
  const double b = 1.9;
  const int n = 6;
  // |z|^{2n} / (a|z|^2 + b)^n in log-radius increases to a^{-n} at infinity;
  // over a wide window the maximum approaches that limit.
  auto f = [&](double lr, double) {
    const double r2 = std::exp(2.0 * lr);
    return std::pow(r2 / (a * r2 + b), n);
  };
  const auto m = maximize_2d(f, {-5.0, 25.0, 0.0, 6.283185307179586, true});
  CHECK(m.value == doctest::Approx(std::pow(a, -n)).epsilon(1e-12));
}
