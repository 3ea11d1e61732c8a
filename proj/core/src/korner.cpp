#include "fromage/korner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fromage {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// log |w^N| thresholds for the exact under/overflow returns of eval_g.
constexpr double kLogUnderflow = -708.0;
constexpr double kLogOverflow = 708.0;

// Relative fp slop of the compensated-product c0 computation. The log1p
// sum is ~0.0823 with per-term relative error a few ulp and Kahan error
// below 2*eps*sum, so 1e-14 dominates the true rounding error by >10x.
constexpr double kC0Slop = 1e-14;

double ipow4_inv(double x) {
  const double x2 = x * x;
  return 1.0 / (x2 * x2);
}

// sum_{n=a}^{b} (n+1)^-4, plus the integral tail (b+1)^-3/3 when with_tail.
double quartic_level_sum(int a, int b, bool with_tail) {
  double s = 0.0;
  for (int n = b; n >= a; --n) s += ipow4_inv(static_cast<double>(n) + 1.0);
  if (with_tail) {
    const double t = static_cast<double>(b) + 1.0;
    s += 1.0 / (3.0 * t * t * t);
  }
  return s;
}

double ring_scale(int n) { return 1.0 - std::exp2(-2.0 * n); }

double ring_pole_count_d(int n) { return static_cast<double>(n) * std::exp2(2.0 * n); }

// Upper bound on sum_{r>n_max} |w_r|^{N_r} / (1 - |w_r|^{N_r}) for |z| = az,
// valid when az < 1 - 2^-2(n_max+1). The first terms are computed with the
// exact per-ring radii; the remainder is a geometric series.
double tail_deviation_sum(double az, int n_max) {
  if (az <= 0.0) return 0.0;
  double sum = 0.0;
  const int explicit_terms = 8;
  for (int j = 1; j <= explicit_terms; ++j) {
    const int r = n_max + j;
    const double nr = ring_pole_count_d(r);  // exact: small integer * power of two
    const double log_y = nr * std::log(az / ring_scale(r));
    if (log_y >= 0.0) return std::numeric_limits<double>::infinity();
    const double y = std::exp(log_y);
    sum += y < 0.5 ? y / (1.0 - y) : std::numeric_limits<double>::infinity();
  }
  // Remaining levels: |w_r|^{N_r} <= x^{N_r} with x = az / R_{n_max+explicit},
  // and the exponents are distinct increasing integers, so the sum is below
  // x^{N_next} / (1 - x). Each 1/(1-y) factor costs at most 2.
  const double x = az / ring_scale(n_max + explicit_terms);
  const double n_next = ring_pole_count_d(n_max + explicit_terms + 1);
  const double log_rem = n_next * std::log(x) - std::log1p(-x);
  if (log_rem < kLogUnderflow) return sum;
  sum += 2.0 * std::exp(log_rem);
  return sum;
}

Complex eval_g_ring(std::int64_t pole_count, double circle_radius, Complex z) {
  const Complex w = z / circle_radius;
  const double log_abs_w = std::log(std::abs(w));  // -inf at w = 0
  const double log_mag = static_cast<double>(pole_count) * log_abs_w;
  if (log_mag < kLogUnderflow) return Complex(1.0, 0.0);
  if (log_mag > kLogOverflow) return Complex(0.0, 0.0);
  const double angle = static_cast<double>(pole_count) * std::arg(w);
  const Complex wn = std::polar(std::exp(log_mag), angle);
  const Complex denom = 1.0 - wn;
  if (std::abs(denom) < 1e-12) {
    throw PoleError("eval_g: z within machine precision of a pole");
  }
  return 1.0 / denom;
}

}  // namespace

Interval c0_enclosure(std::size_t terms) {
  if (terms < 1) throw InvalidInput("c0_enclosure: terms must be at least 1");
  // Compensated sum of log1p((r+1)^-4).
  double sum = 0.0, comp = 0.0;
  for (std::size_t r = 1; r <= terms; ++r) {
    const double x = ipow4_inv(static_cast<double>(r) + 1.0);
    const double t = std::log1p(x) - comp;
    const double next = sum + t;
    comp = (next - sum) - t;
    sum = next;
  }
  const double partial = std::exp(sum);
  const double t1 = static_cast<double>(terms) + 1.0;
  const double tail_bound = 1.0 / (3.0 * t1 * t1 * t1);
  Interval out;
  out.lower = partial * (1.0 - kC0Slop);
  out.upper = partial * (1.0 + kC0Slop) * std::exp(tail_bound);
  return out;
}

double c_constant(double c0_upper) {
  if (!(c0_upper >= 1.0)) throw InvalidInput("c_constant: c0 upper endpoint must be >= 1");
  return std::exp2(-7.0) / c0_upper;
}

Constants Constants::compute(std::size_t terms) {
  Constants k;
  k.c0 = c0_enclosure(terms);
  k.c1 = 1024.0 * k.c0.upper;
  k.c = c_constant(k.c0.upper);
  return k;
}

int first_level(double eps) {
  if (!(eps > 0.0)) throw InvalidInput("first_level: eps must be positive");
  return static_cast<int>(std::ceil(3.0 / eps));
}

KornerParams KornerParams::with_eps(double eps_value) {
  KornerParams p;
  p.eps = eps_value;
  p.validate();
  return p;
}

void KornerParams::validate() const {
  if (!(eps > 0.0) || !(eps < alpha)) {
    throw InvalidInput("KornerParams: require 0 < eps < alpha (alpha = " +
                       std::to_string(alpha) + ")");
  }
  if (!(alpha < 0.5)) throw InvalidInput("KornerParams: alpha must be below 1/2");
  if (!(kappa > 0.0)) throw InvalidInput("KornerParams: kappa must be positive");
  if (!(tol > 0.0)) throw InvalidInput("KornerParams: tol must be positive");
}

int KornerParams::resolved_n_max() const {
  return n_max > 0 ? n_max : first_level(eps) + 6;
}

PoleRing make_pole_ring(int n, double kappa) {
  if (n < 1 || n > kMaxLevel) {
    throw NotMaterializable("make_pole_ring: level " + std::to_string(n) +
                            " outside materializable range [1, " + std::to_string(kMaxLevel) +
                            "]");
  }
  PoleRing ring;
  ring.n = n;
  ring.pole_count = static_cast<std::int64_t>(n) << (2 * n);
  ring.circle_radius = ring_scale(n);
  ring.rho = kappa * ipow4_inv(static_cast<double>(n) + 1.0) /
             static_cast<double>(ring.pole_count);
  return ring;
}

Complex PoleRing::pole(std::int64_t k) const {
  const double frac = static_cast<double>(k) / static_cast<double>(pole_count);
  return std::polar(circle_radius, kTau * frac);
}

double ring_disc_distance(std::int64_t count, double circle_radius, double disc_radius,
                          Complex z) {
  const double theta = std::arg(z);
  const std::int64_t k0 = std::llround(theta / kTau * static_cast<double>(count));
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t j = -2; j <= 2; ++j) {
    std::int64_t k = (k0 + j) % count;
    if (k < 0) k += count;
    const double frac = static_cast<double>(k) / static_cast<double>(count);
    best = std::min(best, std::abs(z - std::polar(circle_radius, kTau * frac)));
  }
  return best - disc_radius;
}

double PoleRing::signed_distance(Complex z) const {
  return ring_disc_distance(pole_count, circle_radius, rho, z);
}

double PoleRing::radius_total() const {
  return static_cast<double>(pole_count) * rho;
}

double KornerFamily::signed_distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const PoleRing& ring : rings) best = std::min(best, ring.signed_distance(z));
  return best;
}

KornerFamily build_family(const KornerParams& params) {
  params.validate();
  KornerFamily fam;
  fam.params = params;
  fam.m = first_level(params.eps);
  const int n_max = params.resolved_n_max();
  if (n_max < fam.m) {
    throw InvalidInput("build_family: n_max " + std::to_string(n_max) +
                       " below first level " + std::to_string(fam.m));
  }
  if (n_max > kMaxLevel) {
    throw NotMaterializable("build_family: n_max " + std::to_string(n_max) +
                            " exceeds materializable level " + std::to_string(kMaxLevel) +
                            "; use a symbolic plan for this regime");
  }
  fam.rings.reserve(static_cast<std::size_t>(n_max - fam.m + 1));
  for (int n = fam.m; n <= n_max; ++n) fam.rings.push_back(make_pole_ring(n, params.kappa));

  fam.radius_budget = params.kappa * quartic_level_sum(fam.m, n_max, /*with_tail=*/true);
  if (!(fam.radius_budget < params.eps)) {
    throw BudgetExceeded("build_family: radius budget " + std::to_string(fam.radius_budget) +
                         " not below eps " + std::to_string(params.eps) +
                         "; decrease kappa or increase eps");
  }
  // Truncation must be tight on the half disc.
  const double half_disc_tail = tail_deviation_sum(0.5, n_max);
  if (!(half_disc_tail <= params.tol)) {
    throw InvalidInput("build_family: truncation tail on the half disc exceeds tol");
  }
  return fam;
}

Complex eval_g(int n, Complex z) {
  if (n < 1 || n > kMaxLevel) throw InvalidInput("eval_g: level out of range");
  const std::int64_t pole_count = static_cast<std::int64_t>(n) << (2 * n);
  return eval_g_ring(pole_count, ring_scale(n), z);
}

EvalResult eval_F(const KornerFamily& fam, Complex z) {
  if (fam.signed_distance(z) < 0.0) {
    throw InsideDeletedDisc("eval_F: z inside a deleted disc");
  }
  EvalResult res;
  Complex prod(1.0, 0.0);
  for (const PoleRing& ring : fam.rings) {
    const Complex g = eval_g_ring(ring.pole_count, ring.circle_radius, z);
    if (g == Complex(0.0, 0.0)) res.collapsed = true;
    prod *= g;
  }
  res.value = prod;

  const double az = std::abs(z);
  const int n_max = fam.rings.back().n;
  if (az >= 1.0) {
    // The limit function vanishes on |z| >= 1, so the value itself bounds
    // the error. A collapsed product is the limit value exactly.
    res.bound = std::abs(res.value);
    return res;
  }
  const double first_tail_radius = ring_scale(n_max + 1);
  if (az >= first_tail_radius) {
    res.bound = std::numeric_limits<double>::infinity();
    res.bound_available = false;
    return res;
  }
  const double dev = tail_deviation_sum(az, n_max);
  res.bound = std::abs(res.value) * std::expm1(dev);
  if (az > 0.0 && res.bound == 0.0) {
    // Nonzero z has a nonzero (if astronomically small) true tail.
    res.bound = std::numeric_limits<double>::denorm_min();
  }
  return res;
}

namespace {

struct SupTracker {
  double value = -std::numeric_limits<double>::infinity();
  Complex at;
  void update(double v, Complex z) {
    if (v > value) {
      value = v;
      at = z;
    }
  }
};

struct MinTracker {
  double value = std::numeric_limits<double>::infinity();
  Complex at;
  void update(double v, Complex z) {
    if (v < value) {
      value = v;
      at = z;
    }
  }
};

}  // namespace

Certificate check_conditions(const KornerFamily& fam, const SampleSpec& grid,
                             const Constants& consts) {
  grid.validate();
  Certificate cert;
  const double eps = fam.params.eps;
  const std::size_t count = grid.count;

  // (a) radius budget, analytic.
  cert.require_at_most("a.radius_budget",
                       "sum of deleted-disc radii (analytic tail included) < eps",
                       CheckKind::kAnalytic, eps, fam.radius_budget);

  // (b) each pole is the center of its deleted disc; exact by construction.
  {
    double worst = 0.0;
    for (const PoleRing& ring : fam.rings) {
      const double d = ring.signed_distance(ring.pole(0)) + ring.rho;
      worst = std::max(worst, std::abs(d));
    }
    auto& e = cert.require_at_most("b.poles_at_centers",
                                   "every pole sits at the center of a deleted disc",
                                   CheckKind::kExact, 0.0, worst);
    e.note = "holds by construction; spot check over one pole per ring";
  }

  // Margin for the global sup: 10*rho per ring.
  const auto clear_of_rings = [&](Complex z, double rho_multiplier) {
    for (const PoleRing& ring : fam.rings) {
      if (ring.signed_distance(z) < rho_multiplier * ring.rho) return false;
    }
    return true;
  };

  // Seeded sample sets.
  const std::uint64_t seed = grid.seed;
  const auto half_pts = sample_region(Region::disc({0, 0}, 0.5), count,
                                      SeededRng::derive(seed, 1),
                                      [](Complex) { return true; });
  const auto in_disc_pts = sample_region(Region::disc({0, 0}, 1.0), count,
                                         SeededRng::derive(seed, 2), [&](Complex z) {
                                           return clear_of_rings(z, 0.0);
                                         });
  const auto outside_pts = sample_region(Region::annulus({0, 0}, 1.0, 2.0), count,
                                         SeededRng::derive(seed, 3),
                                         [](Complex z) { return std::abs(z) > 1.0; });
  const auto global_pts = sample_region(Region::disc({0, 0}, 2.0), count,
                                        SeededRng::derive(seed, 4), [&](Complex z) {
                                          return clear_of_rings(z, 10.0);
                                        });
  // Shell samples straddle each ring's transition band, where the factors
  // are farthest from 1; uniform sampling essentially never lands there.
  std::vector<Complex> shell_pts;
  {
    const std::size_t per_ring = std::max<std::size_t>(count / fam.rings.size(), 16);
    std::size_t stream = 5;
    for (const PoleRing& ring : fam.rings) {
      const double band = 750.0 / static_cast<double>(ring.pole_count);
      const double lo = ring.circle_radius * (1.0 - 2.0 * band);
      const double hi = ring.circle_radius * (1.0 + 2.0 * band);
      const auto pts = sample_region(Region::annulus({0, 0}, lo, hi), per_ring,
                                     SeededRng::derive(seed, stream++), [&](Complex z) {
                                       return clear_of_rings(z, 10.0);
                                     });
      shell_pts.insert(shell_pts.end(), pts.begin(), pts.end());
    }
  }
  // Probes pinned just outside deleted-disc edges, radially aligned with a
  // pole so the factor peaks there: |F| approaches (n+1)^4/(11 kappa).
  std::vector<Complex> edge_probes;
  for (const PoleRing& ring : fam.rings) {
    const std::int64_t probes = std::min<std::int64_t>(64, ring.pole_count);
    for (std::int64_t j = 0; j < probes; ++j) {
      const Complex dir = ring.pole((ring.pole_count / probes) * j) / ring.circle_radius;
      for (const double off : {-11.0, 11.0}) {
        const Complex z = dir * (ring.circle_radius + off * ring.rho);
        if (clear_of_rings(z, 10.0)) edge_probes.push_back(z);
      }
    }
  }

  // (c) zero-free inside, decaying outside.
  {
    MinTracker min_in;
    for (Complex z : in_disc_pts) min_in.update(std::abs(eval_F(fam, z).value), z);
    for (Complex z : shell_pts) {
      if (std::abs(z) < 1.0) min_in.update(std::abs(eval_F(fam, z).value), z);
    }
    auto& e = cert.require_at_least("c.zero_free",
                                    "min |F| over the disc minus deleted discs is positive",
                                    CheckKind::kSampled,
                                    std::numeric_limits<double>::denorm_min(), min_in.value);
    e.samples = SampleMeta{in_disc_pts.size() + shell_pts.size(), seed, 0.0};
    e.worst_point = min_in.at;

    SupTracker sup_out;
    for (Complex z : outside_pts) sup_out.update(std::abs(eval_F(fam, z).value), z);
    auto& e2 = cert.require_at_most("c.outside_decay",
                                    "sup |F| outside the closed unit disc <= 1e-6",
                                    CheckKind::kSampled, 1e-6, sup_out.value);
    e2.samples = SampleMeta{outside_pts.size(), seed, 0.0};
    e2.worst_point = sup_out.at;
  }

  // (d) rings inside {1-eps < |z| < 1}, analytic.
  {
    double outer = 0.0, inner = 1.0;
    for (const PoleRing& ring : fam.rings) {
      outer = std::max(outer, ring.circle_radius + ring.rho);
      inner = std::min(inner, ring.circle_radius - ring.rho);
    }
    cert.require_at_most("d.rings_below_circle", "max over rings of (R + rho) < 1",
                         CheckKind::kAnalytic, 1.0, outer);
    cert.require_at_least("d.rings_above_annulus", "min over rings of (R - rho) > 1 - eps",
                          CheckKind::kAnalytic, 1.0 - eps, inner);
  }

  // (e) deleted discs pairwise disjoint, analytic.
  {
    double intra = std::numeric_limits<double>::infinity();
    for (const PoleRing& ring : fam.rings) {
      const double chord = 2.0 * ring.circle_radius *
                           std::sin(std::numbers::pi / static_cast<double>(ring.pole_count));
      intra = std::min(intra, chord - 2.0 * ring.rho);
    }
    cert.require_at_least("e.intra_ring_gap",
                          "neighbor pole spacing minus disc diameters, per ring",
                          CheckKind::kAnalytic, 0.0, intra);

    double inter = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < fam.rings.size(); ++i) {
      const PoleRing& lo = fam.rings[i];
      const PoleRing& hi = fam.rings[i + 1];
      inter = std::min(inter, (hi.circle_radius - hi.rho) - (lo.circle_radius + lo.rho));
    }
    cert.require_at_least("e.inter_ring_gap", "radial gap between consecutive rings",
                          CheckKind::kAnalytic, 0.0, inter);
  }

  // (f) exact normalization.
  {
    const EvalResult at0 = eval_F(fam, Complex(0, 0));
    const bool exact = at0.value == Complex(1.0, 0.0) && at0.bound == 0.0;
    cert.require_exact("f.normalization", "F(0) = 1 with zero error", exact);
  }

  // (g) sup on the half disc.
  {
    SupTracker sup;
    for (Complex z : half_pts) sup.update(std::abs(eval_F(fam, z).value), z);
    auto& e = cert.require_at_most("g.sup_half_disc", "sup |F| on |z| <= 1/2 <= c0 upper",
                                   CheckKind::kSampled, consts.c0.upper, sup.value);
    e.samples = SampleMeta{half_pts.size(), seed, 0.0};
    e.worst_point = sup.at;
  }

  // (h) global sup outside the deleted discs.
  {
    SupTracker sup;
    for (Complex z : global_pts) sup.update(std::abs(eval_F(fam, z).value), z);
    for (Complex z : shell_pts) sup.update(std::abs(eval_F(fam, z).value), z);
    for (Complex z : edge_probes) sup.update(std::abs(eval_F(fam, z).value), z);
    const double demanded = consts.c1 / (eps * eps * eps * eps);
    auto& e = cert.require_at_most("h.sup_global",
                                   "sup |F| off the deleted discs <= c1/eps^4",
                                   CheckKind::kSampled, demanded, sup.value);
    e.samples = SampleMeta{global_pts.size() + shell_pts.size() + edge_probes.size(), seed,
                           10.0};
    e.worst_point = sup.at;
    e.note = "margin is 10*rho per ring; probes pinned at pole-disc edges";
  }

  // Cited per-level bound: |g_n| <= 1 + (n+1)^-4 on the half disc.
  for (const PoleRing& ring : fam.rings) {
    SupTracker sup;
    for (Complex z : half_pts) {
      sup.update(std::abs(eval_g_ring(ring.pole_count, ring.circle_radius, z)), z);
    }
    const double demanded = 1.0 + ipow4_inv(static_cast<double>(ring.n) + 1.0);
    auto& e = cert.require_at_most(
        "g_bound.n" + std::to_string(ring.n),
        "sup |g_n| on |z| <= 1/2 <= 1 + (n+1)^-4", CheckKind::kSampled, demanded, sup.value);
    e.samples = SampleMeta{half_pts.size(), seed, 0.0};
  }

  return cert;
}

}  // namespace fromage
