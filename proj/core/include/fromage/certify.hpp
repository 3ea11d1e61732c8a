#pragma once

#include <cstdint>
#include <vector>

#include "fromage/certificate.hpp"
#include "fromage/cheese.hpp"
#include "fromage/sampling.hpp"

namespace fromage {

struct WitnessSpec {
  Complex x;          // point of K to witness
  int level = 1;      // level of the covering to use
  int s = 5;          // power of (z - a) in the witness function
  /// sup over the closed unit disc of |d/dz z^s| = s.
  double lipschitz_bound = 5.0;

  static WitnessSpec at(Complex x, int level = 1, int s = 5);
};

/// Deterministic rejection sampling of K: uniform candidates in the region,
/// kept iff inside the outer disc and at least `margin` clear of every
/// deleted disc. Exactly spec.count points.
std::vector<Complex> sample_K(const Cheese& c, const SampleSpec& spec);

/// The witness chain at x: materializes the covering disc containing x with
/// center a, forms g(z) = (z-a)^s * h(z), and certifies on sampled K-points
///   (i)   g vanishes identically on the dead zone about a,
///   (ii)  sup |(z-a)^s - g| <= eta,
///   (iii) sup |(z-x)^s - g| <= lipschitz_bound*sigma + eta.
Certificate check_witness(const Cheese& c, const WitnessSpec& w, const SampleSpec& spec,
                          const Constants& consts);

/// Certifies one local unit: the sigma identity, the budget below
/// 2*eps*sigma, exact vanishing on the dead zone, the far-zone bound
/// |h - 1| < eta/32 beyond sigma/(C*eta), and |u^5 h - u^5| <= eta on the
/// doubled disc about the center. Shell samples are added where h is
/// farthest from 1.
Certificate check_local_unit(const LocalUnit& unit, const SampleSpec& spec,
                             const Constants& consts);

/// Nontriviality hypothesis: total radius bound below min(r, 1). The
/// conclusion R(K) != C(K) is cited, not computed.
Certificate stout_check(const Cheese& c, double r);

struct AreaReport {
  double analytic_lower = 0.0;  // pi*(1 - bound^2), clamped at 0
  double estimate = 0.0;        // Monte Carlo area of K
  double half_width = 0.0;      // 95% confidence half-width
  std::size_t samples = 0;
};

AreaReport area_report(const Cheese& c, const SampleSpec& spec);

}  // namespace fromage
