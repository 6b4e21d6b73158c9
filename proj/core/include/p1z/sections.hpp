#pragma once

// Hermitian lattice data of H^0(P^1_Z, nC_0) = sum_{0<=i<=n} Z z^{-i} with
// the metric n g_{a,b} and the probability volume form
//   Phi_{a,b} = ab / (2 pi sqrt(-1) (a|z|^2 + b)^2) dz ^ dzbar.
//
// Monomials are orthogonal; the squared L2 norm of z^{-i} is 1/R_i with
// R_i = (n+1) C(n,i) a^(n-i) b^i, and its squared sup norm is
// exp(-n phi_{a,b}(i/n)).

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "p1z/charfun.hpp"
#include "p1z/numerics.hpp"
#include "p1z/rational.hpp"

namespace p1z {

// The monomial z^{-i} at level n.
struct MonomialBasisElement {
  int n = 1;
  int i = 0;

  void validate() const;
};

// sum_i coeffs[i] z^{-i}, an element of H^0(P^1_Z, nC_0).
struct IntegerSection {
  int n = 1;
  std::vector<std::int64_t> coeffs;  // length n + 1

  static IntegerSection zero(int n);
  static IntegerSection monomial(int n, int i, std::int64_t c = 1);

  void validate() const;
  bool is_zero() const;
  // Index of the single nonzero coefficient, if there is exactly one.
  std::optional<int> monomial_index() const;

  friend bool operator==(const IntegerSection&, const IntegerSection&) = default;
  friend auto operator<=>(const IntegerSection&, const IntegerSection&) = default;
};

// The product s * s, a section of level 2n.
IntegerSection square(const IntegerSection& s);

enum class NormKind { Sup, L2 };

// -- Monomial data ---------------------------------------------------------

// exp(-n phi(i/n)).
double monomial_sup_norm_sq(const Params& p, const MonomialBasisElement& m);
// Exact value (n-i)^(n-i) i^i / (n^n a^(n-i) b^i); requires exact params.
Rational monomial_sup_norm_sq_exact(const Params& p,
                                    const MonomialBasisElement& m);

// log R_i = log((n+1) C(n,i) a^(n-i) b^i).
double log_semi_axis_sq(const Params& p, const MonomialBasisElement& m);
// 1 / R_i.
double monomial_l2_norm_sq(const Params& p, const MonomialBasisElement& m);
// Exact 1 / R_i; requires exact params and n <= kExactBinomialMaxN.
Rational monomial_l2_norm_sq_exact(const Params& p,
                                   const MonomialBasisElement& m);

// I(k, l) = ab int_0^inf r^(l-k) / (ar + b)^(l+2) dr, by the recurrence
//   I(l, l) = 1 / ((l+1) b^l),  I(k, j) = (j-k) / (a (j+1)) I(k, j-1).
double radial_integral(const Params& p, int k, int l);

// <z^{-i}, z^{-j}>_{n g}: zero off the diagonal.
double inner_product(const Params& p, const MonomialBasisElement& m1,
                     const MonomialBasisElement& m2);

// -- Norms of arbitrary integer sections -----------------------------------

double section_l2_norm_sq(const Params& p, const IntegerSection& s);
Rational section_l2_norm_sq_exact(const Params& p, const IntegerSection& s);

// |s(z)|^2 exp(-n g_{a,b}(z)), evaluated without overflow on all of the
// sphere (at infinity it is c_0^2 / a^n, at zero c_n^2 / b^n).
double pointwise_norm_sq(const Params& p, const IntegerSection& s,
                         const SpherePoint& z);

struct SupNorm {
  double value = 0.0;
  // Relative band within which the true supremum is expected to lie above
  // value (the maximizer never overshoots).
  double rel_uncertainty = 0.0;
};

// Squared sup norm via maximize_2d over (log|z|, arg z) plus the two poles.
// Throws DomainError for the zero section.
SupNorm section_sup_norm_sq(const Params& p, const IntegerSection& s,
                            const Tolerance& tol = {});

// -- Small sections ----------------------------------------------------------

// i/n in Theta_{a,b}: exact sign of phi(i/n) for rational parameters near
// the boundary, phi(i/n) >= -solver_tol otherwise.
bool theta_contains_ratio(const Params& p, const ThetaInterval& theta, int i,
                          int n);

// n Theta cap Z nonempty.
bool h0_nonzero(const Params& p, int n, const ThetaInterval& theta);

// All i in [0, n] with i/n in Theta, ascending. Throws EmptyError when none.
std::vector<int> h0_monomial_span(const Params& p, int n,
                                  const ThetaInterval& theta);

struct EnumerateOptions {
  int cap = 6;
  // Only consider 0 and the signed monomials +-z^{-i} as candidates.
  bool monomials_only = false;
  // Sections whose norm is within this band of 1 (float paths) are flagged.
  double boundary_band = 1e-9;
  // Listing limit; exceeding it throws CapError (use h0_count instead).
  std::size_t max_results = 2'000'000;
};

struct EnumeratedSection {
  IntegerSection section;
  double norm_sq = 0.0;
  bool boundary_uncertain = false;
};

// Every integer section with squared norm <= 1, sorted by coefficients.
// Coefficient boxes come from |c_i| <= sqrt(R_i) (valid for both norms since
// the volume form has mass 1); sup mode tightens them with the Cauchy bound
// |c_i|^2 <= exp(n phi(i/n)). Throws CapError for n > opts.cap.
std::vector<EnumeratedSection> h0_enumerate(const Params& p, int n,
                                            NormKind norm,
                                            const Tolerance& tol = {},
                                            const EnumerateOptions& opts = {});

struct SectionCount {
  std::uint64_t count = 0;
  std::uint64_t boundary_uncertain = 0;
};

// Same set as h0_enumerate, counted without materializing it. The L2 count
// sums the last coordinate in closed form, so it reaches far larger sets.
SectionCount h0_count(const Params& p, int n, NormKind norm,
                      const Tolerance& tol = {},
                      const EnumerateOptions& opts = {});

// -- The ellipsoid K_n and its lattice-point bounds ------------------------

struct EllipsoidSpec {
  int n = 1;
  int range_lo = 0;  // min of n Theta cap Z
  int range_hi = 0;  // max of n Theta cap Z
  // log R_i for i = range_lo..range_hi.
  std::vector<double> log_semi_axes_sq;
  // Exact R_i when the parameters are rational and n <= kExactBinomialMaxN.
  std::optional<std::vector<Rational>> exact_semi_axes_sq;

  int dimension() const noexcept { return range_hi - range_lo + 1; }
};

// Throws EmptyError when n Theta cap Z is empty.
EllipsoidSpec ellipsoid_spec(const Params& p, int n, const ThetaInterval& theta);

struct LatticeBounds {
  double log_lower = 0.0;  // sum log sqrt(R_i) + log V_m - m log 2
  double log_upper = 0.0;  // sum log(2 sqrt(R_i) + 1)
};

LatticeBounds lattice_count_bounds(const EllipsoidSpec& spec);

}  // namespace p1z
