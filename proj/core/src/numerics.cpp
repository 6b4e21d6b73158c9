#include "p1z/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "p1z/errors.hpp"

namespace p1z {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("tolerance fields must be strictly positive");
  }
}

// ---------------------------------------------------------------------------
// Root finding

RootBracket find_root_bracket(const RealFunction& f, double lo, double hi,
                              const Tolerance& tol) {
  tol.validate();
  if (!(lo <= hi)) throw DomainError("find_root_monotone: lo > hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw DomainError("find_root_monotone: non-finite value at bracket end");
  }
  if (flo == 0.0) return {lo, lo, flo, flo};
  if (fhi == 0.0) return {hi, hi, fhi, fhi};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketError("find_root_monotone: no sign change on [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  // Illinois weights: the retained end's value is halved when the same side
  // survives twice, which keeps regula falsi superlinear.
  double wlo = flo;
  double whi = fhi;
  int same_side = 0;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if (hi - lo <= tol.abs_tol) return {lo, hi, flo, fhi};
    double x;
    if (iter % 2 == 0) {
      x = hi - whi * (hi - lo) / (whi - wlo);
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    } else {
      x = 0.5 * (lo + hi);
    }
    if (!(x > lo && x < hi)) return {lo, hi, flo, fhi};  // no representable midpoint
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw DomainError("find_root_monotone: non-finite value inside bracket");
    }
    if (fx == 0.0) return {x, x, fx, fx};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
      wlo = fx;
      if (same_side == -1) whi *= 0.5;
      same_side = -1;
    } else {
      hi = x;
      fhi = fx;
      whi = fx;
      if (same_side == 1) wlo *= 0.5;
      same_side = 1;
    }
  }
  if (hi - lo <= tol.abs_tol) return {lo, hi, flo, fhi};
  throw ConvergenceError("find_root_monotone: max_iter exceeded");
}

double find_root_monotone(const RealFunction& f, double lo, double hi,
                          const Tolerance& tol) {
  const auto b = find_root_bracket(f, lo, hi, tol);
  return std::abs(b.f_lo) <= std::abs(b.f_hi) ? b.lo : b.hi;
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

constexpr int kPrepassPanels = 64;
constexpr int kMaxDepth = 60;
constexpr long kMaxEvaluations = 20'000'000;

class Simpson {
 public:
  explicit Simpson(const RealFunction& f) : f_(f) {}

  double eval(double x) {
    if (++evaluations_ > kMaxEvaluations) {
      throw ConvergenceError("integrate_adaptive: evaluation budget exhausted");
    }
    const double v = f_(x);
    if (!std::isfinite(v)) {
      throw DomainError("integrate_adaptive: non-finite integrand at x = " +
                        std::to_string(x));
    }
    return v;
  }

  double adapt(double a, double b, double fa, double fm, double fb,
               double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= kMaxDepth || std::abs(delta) <= 15.0 * eps || m <= a ||
        b <= m) {
      return left + right + delta / 15.0;
    }
    return adapt(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           adapt(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }

 private:
  const RealFunction& f_;
  long evaluations_ = 0;
};

}  // namespace

double integrate_adaptive(const RealFunction& f, double lo, double hi,
                          const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate_adaptive: bounds must be finite");
  }
  if (lo == hi) return 0.0;
  if (lo > hi) return -integrate_adaptive(f, hi, lo, tol);

  Simpson s(f);
  const double h = (hi - lo) / kPrepassPanels;
  std::array<double, 2 * kPrepassPanels + 1> fx{};
  for (int k = 0; k <= 2 * kPrepassPanels; ++k) {
    const double x = k == 2 * kPrepassPanels ? hi : lo + 0.5 * h * k;
    fx[static_cast<std::size_t>(k)] = s.eval(x);
  }
  std::array<double, kPrepassPanels> panel{};
  double coarse = 0.0;
  for (int p = 0; p < kPrepassPanels; ++p) {
    const auto k = static_cast<std::size_t>(2 * p);
    panel[static_cast<std::size_t>(p)] =
        h / 6.0 * (fx[k] + 4.0 * fx[k + 1] + fx[k + 2]);
    coarse += panel[static_cast<std::size_t>(p)];
  }
  const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(coarse));
  const double eps = target / kPrepassPanels;

  std::array<double, kPrepassPanels> refined{};
  for (int p = 0; p < kPrepassPanels; ++p) {
    const auto k = static_cast<std::size_t>(2 * p);
    const double a = lo + h * p;
    const double b = p + 1 == kPrepassPanels ? hi : lo + h * (p + 1);
    refined[static_cast<std::size_t>(p)] =
        s.adapt(a, b, fx[k], fx[k + 1], fx[k + 2],
                panel[static_cast<std::size_t>(p)], eps, 0);
  }
  return pairwise_sum(refined);
}

double log_odds_integral(double lo, double hi, const Tolerance& tol) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw DomainError("log_odds_integral: need 0 <= lo <= hi <= 1");
  }
  constexpr double kEps = 1e-15;
  // Leading-order tails: int_0^e log(1/t - 1) dt ~ e (1 - log e), and the
  // mirror image at 1 with the opposite sign.
  const double tail = kEps * (1.0 - std::log(kEps));
  const double a = std::max(lo, kEps);
  const double b = std::min(hi, 1.0 - kEps);
  double total = 0.0;
  if (a < b) {
    total = integrate_adaptive(
        [](double t) { return std::log1p(-t) - std::log(t); }, a, b, tol);
  }
  if (lo < kEps) total += (std::min(hi, kEps) - lo) / kEps * tail;
  if (hi > 1.0 - kEps) total -= (hi - std::max(lo, 1.0 - kEps)) / kEps * tail;
  return total;
}

// ---------------------------------------------------------------------------
// Binomials, big-number logs, ball volumes

BigBinomial BigBinomial::compute(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw DomainError("binomial: need 0 <= i <= n");
  }
  BigBinomial out{n, i, 0};
  mpz_bin_uiui(out.value.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(i));
  return out;
}

double log_of(const mpz_class& value) {
  if (sgn(value) <= 0) throw DomainError("log_of: non-positive argument");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_of(const mpq_class& value) {
  if (sgn(value) <= 0) throw DomainError("log_of: non-positive argument");
  return log_of(value.get_num()) - log_of(value.get_den());
}

double log_binomial_exact(int n, int i) {
  const auto c = BigBinomial::compute(n, i);
  if (c.value == 1) return 0.0;
  return log_of(c.value);
}

double log_binomial_lgamma(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw DomainError("log_binomial: need 0 <= i <= n");
  }
  if (i == 0 || i == n) return 0.0;
  const double dn = n;
  return std::lgamma(dn + 1.0) - std::lgamma(i + 1.0) -
         std::lgamma(dn - i + 1.0);
}

double log_binomial(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw DomainError("log_binomial: need 0 <= i <= n, got n = " +
                      std::to_string(n) + ", i = " + std::to_string(i));
  }
  return n <= kExactBinomialMaxN ? log_binomial_exact(n, i)
                                 : log_binomial_lgamma(n, i);
}

double log_ball_volume(int m) {
  if (m <= 0) throw DomainError("log_ball_volume: dimension must be >= 1");
  const double half = 0.5 * m;
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const auto mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

// ---------------------------------------------------------------------------
// 2D maximizer

namespace {

struct Probe {
  double x;
  double y;
  double v;
};

double checked(const RealFunction2& f, double x, double y) {
  const double v = f(x, y);
  if (!std::isfinite(v)) {
    throw DomainError("maximize_2d: non-finite evaluation");
  }
  return v;
}

}  // namespace

Maximum2d maximize_2d(const RealFunction2& f, const Box2d& box, int grid,
                      int refine_iters) {
  if (grid < 16) throw DomainError("maximize_2d: grid must be >= 16");
  if (refine_iters < 0) throw DomainError("maximize_2d: refine_iters < 0");
  if (!(box.x_lo <= box.x_hi) || !(box.y_lo <= box.y_hi)) {
    throw DomainError("maximize_2d: empty box");
  }

  const double wx = box.x_hi - box.x_lo;
  const double wy = box.y_hi - box.y_lo;
  const double hx = wx / (grid - 1);
  const double hy = box.periodic_y ? wy / grid : wy / (grid - 1);

  auto clamp_x = [&](double x) { return std::clamp(x, box.x_lo, box.x_hi); };
  auto wrap_y = [&](double y) {
    if (box.periodic_y && wy > 0.0) {
      y = box.y_lo + std::fmod(y - box.y_lo, wy);
      if (y < box.y_lo) y += wy;
      return y;
    }
    return std::clamp(y, box.y_lo, box.y_hi);
  };

  std::vector<Probe> scan;
  scan.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    const double x = i + 1 == grid ? box.x_hi : box.x_lo + hx * i;
    for (int j = 0; j < grid; ++j) {
      const double y =
          !box.periodic_y && j + 1 == grid ? box.y_hi : box.y_lo + hy * j;
      scan.push_back({x, y, checked(f, x, y)});
    }
  }
  constexpr std::size_t kStarts = 4;
  const auto n_starts = std::min(kStarts, scan.size());
  std::partial_sort(scan.begin(), scan.begin() + static_cast<long>(n_starts),
                    scan.end(),
                    [](const Probe& l, const Probe& r) { return l.v > r.v; });

  Maximum2d best{scan.front().x, scan.front().y, scan.front().v, 0.0};
  for (std::size_t s = 0; s < n_starts; ++s) {
    Probe cur = scan[s];
    double sx = hx;
    double sy = hy;
    double gain = 0.0;
    for (int round = 0; round < refine_iters; ++round) {
      const double before = cur.v;
      for (int moves = 0; moves < 64; ++moves) {
        Probe next = cur;
        const std::array<std::array<double, 2>, 4> dirs{
            {{sx, 0.0}, {-sx, 0.0}, {0.0, sy}, {0.0, -sy}}};
        for (const auto& d : dirs) {
          const double x = clamp_x(cur.x + d[0]);
          const double y = wrap_y(cur.y + d[1]);
          const double v = checked(f, x, y);
          if (v > next.v) next = {x, y, v};
        }
        if (next.v <= cur.v) break;
        cur = next;
      }
      gain = cur.v - before;
      sx *= 0.5;
      sy *= 0.5;
    }
    if (cur.v > best.value) best = {cur.x, cur.y, cur.v, gain};
  }
  return best;
}

}  // namespace p1z
