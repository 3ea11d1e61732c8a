#pragma once

#include <cstdint>
#include <vector>

#include "fromage/certificate.hpp"
#include "fromage/geometry.hpp"
#include "fromage/sampling.hpp"

namespace fromage {

/// Certified enclosure [lower, upper] of a real number.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
  bool contains(const Interval& o) const { return lower <= o.lower && o.upper <= upper; }
};

/// Enclosure of prod_{r>=1} [1 + (r+1)^-4] from `terms` factors.
/// lower: partial product. upper: partial product times exp of the tail
/// bound sum_{r>terms} (r+1)^-4 <= (terms+1)^-3 / 3. Both endpoints are
/// widened by a small fp slop so the true value is always enclosed.
Interval c0_enclosure(std::size_t terms);

/// C = 2^-7 / c0_upper. By the Cauchy estimate, |F'| <= 4*c0_upper on the
/// quarter disc, so |F(w) - 1| <= 4*c0_upper*|w| < eta/2^5 whenever
/// |w| < C*eta < 1/4.
double c_constant(double c0_upper);

struct Constants {
  Interval c0;
  double c1 = 0.0;  // 1024 * c0.upper
  double c = 0.0;   // 2^-7 / c0.upper

  static Constants compute(std::size_t terms = 1000000);
};

inline constexpr double kDefaultAlpha = 0.45;

/// Levels above this cannot be materialized: 1 - 2^-2n collapses to 1.0 in
/// doubles and pole indices outgrow exact integer arithmetic.
inline constexpr int kMaxLevel = 24;

struct KornerParams {
  double eps = 0.0;
  double alpha = kDefaultAlpha;
  double kappa = 1.0;   // pole-disc radius multiplier
  int n_max = 0;        // 0 means first_level(eps) + 6
  double tol = 1e-12;   // acceptable truncation tail on the half disc

  static KornerParams with_eps(double eps_value);
  void validate() const;
  int resolved_n_max() const;
};

/// ceil(3/eps); exceeds 2/eps + 1 for every eps < 1.
int first_level(double eps);

/// N = n*2^(2n) poles equally spaced on the circle |z| = 1 - 2^-2n, each
/// the center of a deleted disc of radius rho = kappa*(n+1)^-4/N. The ring
/// is never enumerated; all queries are O(1).
struct PoleRing {
  int n = 0;
  std::int64_t pole_count = 0;
  double circle_radius = 0.0;
  double rho = 0.0;

  Complex pole(std::int64_t k) const;
  /// Distance from z to the nearest deleted disc of the ring (negative
  /// inside). O(1): only the angular neighbors of z are examined.
  double signed_distance(Complex z) const;
  /// kappa*(n+1)^-4, the exact total radius of the ring's discs.
  double radius_total() const;
};

PoleRing make_pole_ring(int n, double kappa);

/// Distance from z to the nearest of `count` discs of radius disc_radius
/// centered at circle_radius * e^(2*pi*i*k/count) (negative inside).
/// O(1): the rounded angular index and its neighbors are the only
/// candidates.
double ring_disc_distance(std::int64_t count, double circle_radius, double disc_radius,
                          Complex z);

struct KornerFamily {
  KornerParams params;
  int m = 0;                    // first level, ceil(3/eps)
  std::vector<PoleRing> rings;  // levels m..n_max
  double radius_budget = 0.0;   // certified bound on the full infinite family

  double signed_distance(Complex z) const;
};

/// Builds the level schedule for eps and certifies the radius budget
/// kappa*(sum_{n=m}^{n_max} (n+1)^-4 + (n_max+1)^-3/3) < eps.
KornerFamily build_family(const KornerParams& params);

/// g_n(z) = 1/(1 - w^N), w = z/(1 - 2^-2n). |w^N| is tracked in log
/// magnitude: below the double underflow threshold the factor is exactly 1,
/// above the overflow threshold exactly 0.
Complex eval_g(int n, Complex z);

struct EvalResult {
  Complex value;
  /// |limit - value| <= bound. Truncation only; 0 is exact (z = 0).
  double bound = 0.0;
  /// False in the thin shell below the first unmaterialized ring, where no
  /// finite tail bound exists.
  bool bound_available = true;
  /// A factor hit the overflow path and the product is exactly 0.
  bool collapsed = false;
};

/// Truncated product prod_{r=m}^{n_max} g_r(z) with a rigorous bound on the
/// discarded tail. Throws InsideDeletedDisc for z in a deleted disc.
EvalResult eval_F(const KornerFamily& fam, Complex z);

/// Checks the construction's conditions on the family: the radius budget,
/// pole placement, zero-freeness and outside decay, ring containment in the
/// annulus {1-eps < |z| < 1}, disjointness, exact normalization F(0) = 1,
/// the sup bound c0 on the half disc, the global sup bound c1/eps^4, and
/// the per-level bound |g_n| <= 1 + (n+1)^-4 on the half disc.
Certificate check_conditions(const KornerFamily& fam, const SampleSpec& grid,
                             const Constants& consts);

}  // namespace fromage
