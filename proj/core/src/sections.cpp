#include "p1z/sections.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "p1z/errors.hpp"

namespace p1z {

// ---------------------------------------------------------------------------
// Basic types

void MonomialBasisElement::validate() const {
  if (n < 1 || i < 0 || i > n) {
    throw DomainError("monomial z^{-" + std::to_string(i) + "} at level " +
                      std::to_string(n) + ": need n >= 1 and 0 <= i <= n");
  }
}

IntegerSection IntegerSection::zero(int n) {
  IntegerSection s{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)};
  s.validate();
  return s;
}

IntegerSection IntegerSection::monomial(int n, int i, std::int64_t c) {
  MonomialBasisElement{n, i}.validate();
  auto s = zero(n);
  s.coeffs[static_cast<std::size_t>(i)] = c;
  return s;
}

void IntegerSection::validate() const {
  if (n < 1) throw DomainError("section level must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(n) + 1) {
    throw DomainError("section at level " + std::to_string(n) + " needs " +
                      std::to_string(n + 1) + " coefficients");
  }
}

bool IntegerSection::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](std::int64_t c) { return c == 0; });
}

std::optional<int> IntegerSection::monomial_index() const {
  std::optional<int> found;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (found) return std::nullopt;
    found = static_cast<int>(k);
  }
  return found;
}

IntegerSection square(const IntegerSection& s) {
  s.validate();
  auto out = IntegerSection::zero(2 * s.n);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
      out.coeffs[i + j] += s.coeffs[i] * s.coeffs[j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial norms and the radial integrals

double monomial_sup_norm_sq(const Params& p, const MonomialBasisElement& m) {
  m.validate();
  return std::exp(-m.n * phi(p, static_cast<double>(m.i) / m.n));
}

Rational monomial_sup_norm_sq_exact(const Params& p,
                                    const MonomialBasisElement& m) {
  m.validate();
  const auto n = static_cast<unsigned long>(m.n);
  const auto i = static_cast<unsigned long>(m.i);
  const Rational num(pow(mpz_class(m.n - m.i), n - i) * pow(mpz_class(m.i), i));
  const Rational den =
      Rational(pow(mpz_class(m.n), n)) * pow(p.exact_a(), n - i) * pow(p.exact_b(), i);
  return Rational(num / den);
}

double log_semi_axis_sq(const Params& p, const MonomialBasisElement& m) {
  m.validate();
  return std::log(m.n + 1.0) + log_binomial(m.n, m.i) +
         (m.n - m.i) * std::log(p.a()) + m.i * std::log(p.b());
}

double monomial_l2_norm_sq(const Params& p, const MonomialBasisElement& m) {
  return std::exp(-log_semi_axis_sq(p, m));
}

namespace {

Rational exact_semi_axis_sq(const Params& p, const MonomialBasisElement& m) {
  m.validate();
  if (m.n > kExactBinomialMaxN) {
    throw DomainError("exact lattice data limited to n <= " +
                      std::to_string(kExactBinomialMaxN));
  }
  const auto n = static_cast<unsigned long>(m.n);
  const auto i = static_cast<unsigned long>(m.i);
  return Rational(mpz_class(m.n + 1) * BigBinomial::compute(m.n, m.i).value) *
         pow(p.exact_a(), n - i) * pow(p.exact_b(), i);
}

}  // namespace

Rational monomial_l2_norm_sq_exact(const Params& p,
                                   const MonomialBasisElement& m) {
  return Rational(1 / exact_semi_axis_sq(p, m));
}

double radial_integral(const Params& p, int k, int l) {
  if (k < 0 || k > l) {
    throw DomainError("radial_integral: need 0 <= k <= l (k = " +
                      std::to_string(k) + ", l = " + std::to_string(l) + ")");
  }
  double value = std::exp(-std::log(k + 1.0) - k * std::log(p.b()));
  for (int j = k + 1; j <= l; ++j) {
    value *= static_cast<double>(j - k) / (p.a() * (j + 1));
  }
  return value;
}

double inner_product(const Params& p, const MonomialBasisElement& m1,
                     const MonomialBasisElement& m2) {
  m1.validate();
  m2.validate();
  if (m1.n != m2.n) {
    throw DomainError("inner_product: sections live at different levels");
  }
  if (m1.i != m2.i) return 0.0;
  return monomial_l2_norm_sq(p, m1);
}

// ---------------------------------------------------------------------------
// Norms of integer sections

double section_l2_norm_sq(const Params& p, const IntegerSection& s) {
  s.validate();
  std::vector<double> terms;
  terms.reserve(s.coeffs.size());
  for (int i = 0; i <= s.n; ++i) {
    const auto c = static_cast<double>(s.coeffs[static_cast<std::size_t>(i)]);
    if (c == 0.0) continue;
    terms.push_back(c * c * monomial_l2_norm_sq(p, {s.n, i}));
  }
  return pairwise_sum(terms);
}

Rational section_l2_norm_sq_exact(const Params& p, const IntegerSection& s) {
  s.validate();
  Rational total = 0;
  for (int i = 0; i <= s.n; ++i) {
    const auto c = s.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    total += Rational(mpz_class(static_cast<long>(c)) * static_cast<long>(c)) *
             monomial_l2_norm_sq_exact(p, {s.n, i});
  }
  return total;
}

namespace {

double log_abs(std::int64_t c) { return std::log(std::abs(static_cast<double>(c))); }

}  // namespace

double pointwise_norm_sq(const Params& p, const IntegerSection& s,
                         const SpherePoint& z) {
  s.validate();
  const double n = s.n;
  if (std::holds_alternative<PointAtInfinity>(z)) {
    const auto c0 = s.coeffs.front();
    return c0 == 0 ? 0.0 : std::exp(2.0 * log_abs(c0) - n * std::log(p.a()));
  }
  const auto zc = std::get<std::complex<double>>(z);
  const double r = std::abs(zc);
  if (r == 0.0) {
    const auto cn = s.coeffs.back();
    return cn == 0 ? 0.0 : std::exp(2.0 * log_abs(cn) - n * std::log(p.b()));
  }
  std::complex<double> acc = 0.0;
  double log_den;
  if (r <= 1.0) {
    // sum c_i z^(n-i) against (a|z|^2 + b)^n
    for (auto c : s.coeffs) acc = acc * zc + static_cast<double>(c);
    log_den = n * std::log(p.a() * r * r + p.b());
  } else {
    // w = 1/z: sum c_i w^i against (a + b|w|^2)^n
    const auto w = 1.0 / zc;
    const double rw = 1.0 / r;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
      acc = acc * w + static_cast<double>(*it);
    }
    log_den = n * std::log(p.a() + p.b() * rw * rw);
  }
  const double mod = std::abs(acc);
  if (mod == 0.0) return 0.0;
  return std::exp(2.0 * std::log(mod) - log_den);
}

SupNorm section_sup_norm_sq(const Params& p, const IntegerSection& s,
                            const Tolerance& tol) {
  s.validate();
  tol.validate();
  if (s.is_zero()) throw DomainError("sup norm of the zero section");

  // Interior peaks of the monomial terms sit at
  // log|z| = (1/2) log((n-i) b / (i a)), all within (1/2) log n of the
  // centre; beyond the window the function is within e^-12 of its limits
  // at the poles, which are added separately.
  const double centre = 0.5 * std::log(p.b() / p.a());
  const double half_width = 0.5 * std::log(s.n + 1.0) + 6.0;
  const Box2d box{centre - half_width, centre + half_width, 0.0,
                  2.0 * std::numbers::pi, true};
  auto f = [&](double rho, double t) {
    return pointwise_norm_sq(p, s, std::polar(std::exp(rho), t));
  };
  const auto best = maximize_2d(f, box, 64, 48);

  SupNorm out;
  out.value = std::max({best.value, pointwise_norm_sq(p, s, PointAtInfinity{}),
                        pointwise_norm_sq(p, s, std::complex<double>(0.0))});
  const double eps = std::numeric_limits<double>::epsilon();
  out.rel_uncertainty =
      std::max({tol.rel_tol * 1e-2, 16.0 * eps,
                out.value > 0.0 ? best.last_gain / out.value : 0.0});
  return out;
}

// ---------------------------------------------------------------------------
// Theta membership, nonvanishing and spans

namespace {

// |phi(i/n)| below which rational parameters are decided exactly.
constexpr double kExactDecisionBand = 1e-6;

std::pair<int, int> candidate_window(int n, const ThetaInterval& theta) {
  const int lo = static_cast<int>(std::floor(n * theta.lower)) - 1;
  const int hi = static_cast<int>(std::ceil(n * theta.upper)) + 1;
  return {std::max(lo, 0), std::min(hi, n)};
}

}  // namespace

bool theta_contains_ratio(const Params& p, const ThetaInterval& theta, int i,
                          int n) {
  if (theta.empty()) return false;
  MonomialBasisElement{n, i}.validate();
  const double v = phi(p, static_cast<double>(i) / n);
  if (p.is_exact() && std::abs(v) < kExactDecisionBand) {
    return exact_phi_sign(p.exact_a(), p.exact_b(), i, n) >= 0;
  }
  return v >= -theta.solver_tol;
}

bool h0_nonzero(const Params& p, int n, const ThetaInterval& theta) {
  if (n < 1) throw DomainError("h0_nonzero: level must be >= 1");
  if (theta.empty()) return false;
  const auto [lo, hi] = candidate_window(n, theta);
  for (int k = lo; k <= hi; ++k) {
    if (theta_contains_ratio(p, theta, k, n)) return true;
  }
  return false;
}

std::vector<int> h0_monomial_span(const Params& p, int n,
                                  const ThetaInterval& theta) {
  if (n < 1) throw DomainError("h0_monomial_span: level must be >= 1");
  std::vector<int> out;
  if (!theta.empty()) {
    const auto [lo, hi] = candidate_window(n, theta);
    for (int k = lo; k <= hi; ++k) {
      if (theta_contains_ratio(p, theta, k, n)) out.push_back(k);
    }
  }
  if (out.empty()) {
    throw EmptyError("n Theta cap Z is empty at n = " + std::to_string(n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of small sections

namespace {

std::int64_t isqrt_floor(const mpz_class& v) {
  if (sgn(v) <= 0) return 0;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r.get_si();
}

std::int64_t floor_sqrt_rational(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return isqrt_floor(fl);
}

// Per-coordinate description of the L2 ellipsoid sum_i w_i c_i^2 <= limit.
// Exact parameters use integer weights over a common denominator (int64
// when it fits, GMP otherwise); float parameters use doubles with a slack.
struct CoordinateBox {
  std::vector<std::int64_t> bound;  // |c_i| <= bound[i]
  std::vector<double> weight;       // 1 / R_i
  std::vector<Rational> exact_weight;
  bool exact = false;
};

CoordinateBox build_box(const Params& p, int n, NormKind norm,
                        const EnumerateOptions& opts) {
  CoordinateBox box;
  box.exact = p.is_exact();
  const auto size = static_cast<std::size_t>(n) + 1;
  box.bound.resize(size);
  box.weight.resize(size);
  if (box.exact) box.exact_weight.resize(size);
  for (int i = 0; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const MonomialBasisElement m{n, i};
    box.weight[k] = monomial_l2_norm_sq(p, m);
    std::int64_t b;
    if (box.exact) {
      const Rational r = exact_semi_axis_sq(p, m);
      box.exact_weight[k] = 1 / r;
      b = floor_sqrt_rational(r);
      if (norm == NormKind::Sup) {
        b = std::min(b, floor_sqrt_rational(1 / monomial_sup_norm_sq_exact(p, m)));
      }
    } else {
      const double slack = 1.0 + opts.boundary_band;
      b = static_cast<std::int64_t>(
          std::floor(std::sqrt(std::exp(log_semi_axis_sq(p, m)) * slack)));
      if (norm == NormKind::Sup) {
        const double cauchy = std::exp(0.5 * n * phi(p, static_cast<double>(i) / n));
        b = std::min(b, static_cast<std::int64_t>(std::floor(cauchy * std::sqrt(slack))));
      }
    }
    box.bound[k] = b;
  }
  return box;
}

// Walks all coefficient vectors inside the box with sum w_i c_i^2 within
// the limit; `Num` is the accumulator type of the quadratic form.
template <class Num>
struct Form {
  std::vector<Num> weight;
  Num limit;
  double slack = 0.0;  // double forms only

  bool admissible(const Num& total) const {
    if constexpr (std::is_same_v<Num, double>) {
      return total <= limit + slack;
    } else {
      return total <= limit;
    }
  }
  double to_double(const Num& total) const {
    if constexpr (std::is_same_v<Num, double>) {
      return total;
    } else if constexpr (std::is_same_v<Num, std::int64_t>) {
      return static_cast<double>(total) / static_cast<double>(limit);
    } else {
      return Rational(total, limit).get_d();
    }
  }
};

template <class Num, class Leaf>
void walk(const Form<Num>& form, const std::vector<std::int64_t>& bound,
          std::vector<std::int64_t>& c, std::size_t d, const Num& used,
          Leaf& leaf) {
  if (d == c.size()) {
    leaf(c, used);
    return;
  }
  for (std::int64_t v = 0; v <= bound[d]; ++v) {
    const Num total = used + form.weight[d] * Num(v * v);
    if (!form.admissible(total)) break;
    c[d] = v;
    walk(form, bound, c, d + 1, total, leaf);
    if (v != 0) {
      c[d] = -v;
      walk(form, bound, c, d + 1, total, leaf);
    }
  }
  c[d] = 0;
}

// Dispatches to an int64, GMP or double form and runs `body(form)`.
template <class Body>
void with_form(const CoordinateBox& box, const EnumerateOptions& opts,
               Body&& body) {
  if (!box.exact) {
    Form<double> f{box.weight, 1.0, opts.boundary_band};
    body(f);
    return;
  }
  mpz_class den = 1;
  for (const auto& w : box.exact_weight) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  }
  std::vector<mpz_class> num;
  num.reserve(box.exact_weight.size());
  for (const auto& w : box.exact_weight) {
    num.push_back(w.get_num() * (den / w.get_den()));
  }
  // Every admissible partial sum is <= den, and each step adds at most
  // weight * bound^2 <= den, so 2 * den must fit comfortably.
  const mpz_class headroom = mpz_class(1) << 61;
  if (den < headroom) {
    Form<std::int64_t> f;
    for (const auto& v : num) f.weight.push_back(v.get_si());
    f.limit = den.get_si();
    body(f);
  } else {
    Form<mpz_class> f{num, den, 0.0};
    body(f);
  }
}

bool probe_rejects(const Params& p, const IntegerSection& s, double band) {
  const double limit = 1.0 + band;
  if (pointwise_norm_sq(p, s, PointAtInfinity{}) > limit) return true;
  if (pointwise_norm_sq(p, s, std::complex<double>(0.0)) > limit) return true;
  for (int i = 0; i <= s.n; ++i) {
    const double x = i == 0 ? p.b() / p.a()
                            : static_cast<double>(s.n - i) * p.b() / (i * p.a());
    if (x <= 0.0) continue;
    const double r = std::sqrt(x);
    for (int k = 0; k < 8; ++k) {
      const double t = k * std::numbers::pi / 4.0;
      if (pointwise_norm_sq(p, s, std::polar(r, t)) > limit) return true;
    }
  }
  return false;
}

struct Verdict {
  bool include = false;
  bool boundary = false;
  double norm_sq = 0.0;
};

Verdict sup_verdict(const Params& p, const IntegerSection& s,
                    const Tolerance& tol, double band) {
  if (s.is_zero()) return {true, false, 0.0};
  if (const auto idx = s.monomial_index()) {
    const auto c = static_cast<double>(s.coeffs[static_cast<std::size_t>(*idx)]);
    const MonomialBasisElement m{s.n, *idx};
    if (p.is_exact()) {
      const Rational v =
          Rational(mpz_class(static_cast<long>(c * c))) * monomial_sup_norm_sq_exact(p, m);
      return {v <= 1, false, v.get_d()};
    }
    const double v = c * c * monomial_sup_norm_sq(p, m);
    return {v <= 1.0 + band, std::abs(v - 1.0) <= band, v};
  }
  if (probe_rejects(p, s, band)) return {};
  const auto sup = section_sup_norm_sq(p, s, tol);
  const double width = std::max(band, sup.rel_uncertainty * sup.value);
  return {sup.value <= 1.0 + width, std::abs(sup.value - 1.0) <= width,
          sup.value};
}

Verdict l2_verdict(double norm, bool exact, double band) {
  if (exact) return {true, false, norm};
  return {true, std::abs(norm - 1.0) <= band, norm};
}

// Runs `emit(section, verdict)` for every member of the small-section set.
template <class Emit>
void visit_members(const Params& p, int n, NormKind norm, const Tolerance& tol,
                   const EnumerateOptions& opts, Emit&& emit) {
  if (n < 1) throw DomainError("enumeration level must be >= 1");
  if (n > opts.cap) {
    throw CapError("enumeration capped at n <= " + std::to_string(opts.cap) +
                   " (requested n = " + std::to_string(n) + ")");
  }
  const auto box = build_box(p, n, norm, opts);

  if (opts.monomials_only) {
    auto zero = IntegerSection::zero(n);
    emit(zero, Verdict{true, false, 0.0});
    for (int i = 0; i <= n; ++i) {
      if (box.bound[static_cast<std::size_t>(i)] < 1) continue;
      for (std::int64_t sign : {std::int64_t{-1}, std::int64_t{1}}) {
        auto s = IntegerSection::monomial(n, i, sign);
        Verdict v;
        if (norm == NormKind::Sup) {
          v = sup_verdict(p, s, tol, opts.boundary_band);
        } else if (box.exact) {
          const Rational q = section_l2_norm_sq_exact(p, s);
          v = {q <= 1, false, q.get_d()};
        } else {
          const double q = section_l2_norm_sq(p, s);
          v = {q <= 1.0 + opts.boundary_band,
               std::abs(q - 1.0) <= opts.boundary_band, q};
        }
        if (v.include) emit(s, v);
      }
    }
    return;
  }

  with_form(box, opts, [&](const auto& form) {
    using Num = std::decay_t<decltype(form.limit)>;
    IntegerSection s = IntegerSection::zero(n);
    auto leaf = [&](const std::vector<std::int64_t>& c, const Num& used) {
      s.coeffs = c;
      const double l2 = form.to_double(used);
      Verdict v = norm == NormKind::L2 ? l2_verdict(l2, box.exact, opts.boundary_band)
                                       : sup_verdict(p, s, tol, opts.boundary_band);
      if (v.include) emit(s, v);
    };
    std::vector<std::int64_t> c(box.bound.size(), 0);
    walk(form, box.bound, c, 0, Num(0), leaf);
  });
}

// Closed-form count of c in [-bound, bound] with w c^2 within `rem`.
template <class Num>
std::pair<std::uint64_t, std::uint64_t> count_last(const Form<Num>& form,
                                                   const Num& w, const Num& rem,
                                                   std::int64_t bound) {
  if constexpr (std::is_same_v<Num, double>) {
    auto within = [&](std::int64_t c) {
      return w * static_cast<double>(c * c) <= rem + form.slack;
    };
    auto near = [&](std::int64_t c) {
      return std::abs(w * static_cast<double>(c * c) - rem) <= form.slack;
    };
    auto cmax = static_cast<std::int64_t>(std::floor(std::sqrt(std::max(0.0, (rem + form.slack) / w))));
    cmax = std::min(cmax, bound);
    while (cmax > 0 && !within(cmax)) --cmax;
    while (cmax < bound && within(cmax + 1)) ++cmax;
    if (!within(0)) return {0, 0};
    std::uint64_t flagged = 0;
    for (std::int64_t c = cmax; c >= 0 && near(c); --c) flagged += c == 0 ? 1 : 2;
    return {static_cast<std::uint64_t>(2 * cmax + 1), flagged};
  } else {
    if (rem < 0) return {0, 0};
    mpz_class q = mpz_class(rem) / mpz_class(w);
    std::int64_t cmax = std::min(isqrt_floor(q), bound);
    return {static_cast<std::uint64_t>(2 * cmax + 1), 0};
  }
}

template <class Num>
void count_walk(const Form<Num>& form, const std::vector<std::int64_t>& bound,
                std::size_t d, const Num& used, SectionCount& out) {
  if (d + 1 == bound.size()) {
    const Num rem = form.limit - used;
    const auto [cnt, flagged] = count_last(form, form.weight[d], rem, bound[d]);
    out.count += cnt;
    out.boundary_uncertain += flagged;
    return;
  }
  for (std::int64_t v = 0; v <= bound[d]; ++v) {
    const Num total = used + form.weight[d] * Num(v * v);
    if (!form.admissible(total)) break;
    count_walk(form, bound, d + 1, total, out);
    if (v != 0) count_walk(form, bound, d + 1, total, out);
  }
}

}  // namespace

std::vector<EnumeratedSection> h0_enumerate(const Params& p, int n,
                                            NormKind norm, const Tolerance& tol,
                                            const EnumerateOptions& opts) {
  std::vector<EnumeratedSection> out;
  visit_members(p, n, norm, tol, opts,
                [&](const IntegerSection& s, const Verdict& v) {
                  if (out.size() >= opts.max_results) {
                    throw CapError("enumeration exceeds " +
                                   std::to_string(opts.max_results) +
                                   " sections; use h0_count");
                  }
                  out.push_back({s, v.norm_sq, v.boundary});
                });
  std::sort(out.begin(), out.end(),
            [](const EnumeratedSection& l, const EnumeratedSection& r) {
              return l.section < r.section;
            });
  return out;
}

SectionCount h0_count(const Params& p, int n, NormKind norm,
                      const Tolerance& tol, const EnumerateOptions& opts) {
  SectionCount out;
  if (norm == NormKind::Sup || opts.monomials_only) {
    visit_members(p, n, norm, tol, opts,
                  [&](const IntegerSection&, const Verdict& v) {
                    ++out.count;
                    if (v.boundary) ++out.boundary_uncertain;
                  });
    return out;
  }
  if (n < 1) throw DomainError("enumeration level must be >= 1");
  if (n > opts.cap) {
    throw CapError("enumeration capped at n <= " + std::to_string(opts.cap) +
                   " (requested n = " + std::to_string(n) + ")");
  }
  auto box = build_box(p, n, norm, opts);
  // The widest axis goes last, where it is counted in closed form.
  const auto widest = static_cast<std::size_t>(
      std::max_element(box.bound.begin(), box.bound.end()) - box.bound.begin());
  const auto last = box.bound.size() - 1;
  std::swap(box.bound[widest], box.bound[last]);
  std::swap(box.weight[widest], box.weight[last]);
  if (box.exact) std::swap(box.exact_weight[widest], box.exact_weight[last]);
  with_form(box, opts, [&](const auto& form) {
    using Num = std::decay_t<decltype(form.limit)>;
    count_walk(form, box.bound, 0, Num(0), out);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Ellipsoid K_n

EllipsoidSpec ellipsoid_spec(const Params& p, int n, const ThetaInterval& theta) {
  const auto span = h0_monomial_span(p, n, theta);
  EllipsoidSpec spec;
  spec.n = n;
  spec.range_lo = span.front();
  spec.range_hi = span.back();
  spec.log_semi_axes_sq.reserve(static_cast<std::size_t>(spec.dimension()));
  for (int i = spec.range_lo; i <= spec.range_hi; ++i) {
    spec.log_semi_axes_sq.push_back(log_semi_axis_sq(p, {n, i}));
  }
  if (p.is_exact() && n <= kExactBinomialMaxN) {
    std::vector<Rational> exact;
    for (int i = spec.range_lo; i <= spec.range_hi; ++i) {
      exact.push_back(exact_semi_axis_sq(p, {n, i}));
    }
    spec.exact_semi_axes_sq = std::move(exact);
  }
  return spec;
}

LatticeBounds lattice_count_bounds(const EllipsoidSpec& spec) {
  const int m = spec.dimension();
  std::vector<double> half(spec.log_semi_axes_sq.size());
  std::vector<double> box(spec.log_semi_axes_sq.size());
  for (std::size_t k = 0; k < half.size(); ++k) {
    const double h = 0.5 * spec.log_semi_axes_sq[k];
    half[k] = h;
    // log(2 e^h + 1), arranged so neither branch overflows
    box[k] = h >= 0.0 ? h + std::numbers::ln2 + std::log1p(0.5 * std::exp(-h))
                      : std::log1p(2.0 * std::exp(h));
  }
  LatticeBounds out;
  out.log_lower = pairwise_sum(half) + log_ball_volume(m) - m * std::numbers::ln2;
  out.log_upper = pairwise_sum(box);
  return out;
}

}  // namespace p1z
