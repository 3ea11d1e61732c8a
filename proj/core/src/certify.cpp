#include "fromage/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fromage {

namespace {

struct SupTracker {
  double value = 0.0;
  Complex at;
  void update(double v, Complex z) {
    if (v > value) {
      value = v;
      at = z;
    }
  }
};

Complex pow_int(Complex base, int s) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < s; ++i) out *= base;
  return out;
}

// Annulus straddling the unit's inverted rings, where h is farthest from 1.
Region unit_shell_region(const LocalUnit& unit) {
  const double lo = unit.inverted_rings.front().ring_radius;
  const double hi = unit.inverted_rings.back().ring_radius;
  const double pad = 3e-3 * unit.sigma;
  return Region::annulus(unit.a, std::min(lo, hi) - pad, std::max(lo, hi) + pad);
}

bool clear_of_unit(const LocalUnit& unit, Complex z, double rho_multiplier) {
  const Complex u = z - unit.a;
  for (const InvertedRing& ring : unit.inverted_rings) {
    if (ring.signed_distance(u) < rho_multiplier * ring.disc_radius) return false;
  }
  return true;
}

}  // namespace

WitnessSpec WitnessSpec::at(Complex x, int level, int s) {
  WitnessSpec w;
  w.x = x;
  w.level = level;
  w.s = s;
  w.lipschitz_bound = static_cast<double>(s);
  return w;
}

std::vector<Complex> sample_K(const Cheese& c, const SampleSpec& spec) {
  spec.validate();
  return sample_region(spec.region, spec.count, spec.seed, [&](Complex z) {
    return c.outer.signed_distance(z) <= 0.0 && c.signed_distance(z) >= spec.margin;
  });
}

Certificate check_witness(const Cheese& c, const WitnessSpec& w, const SampleSpec& spec,
                          const Constants& consts) {
  spec.validate();
  Certificate cert;
  if (!c.contains(w.x)) {
    throw InvalidInput("check_witness: x is not a point of K");
  }

  const Level* level = nullptr;
  for (const Level& lv : c.levels) {
    if (lv.n == w.level) level = &lv;
  }
  if (level == nullptr) throw InvalidInput("check_witness: cheese has no such level");
  if (!level->materializable()) {
    throw NotMaterializable("check_witness: level parameters below the double regime");
  }
  const double sigma = level->sigma.to_double();
  const double eta = level->eta;

  // Covering disc containing x; reuse the cheese's unit when present.
  const Complex a = project_to_unit_disc(covering_center(sigma, w.x));
  const LocalUnit* unit = nullptr;
  for (const LocalUnit& u : c.units) {
    if (u.level == w.level && u.a == a) unit = &u;
  }
  LocalUnit fresh;
  if (unit == nullptr) {
    fresh = make_local_unit(level->eps.to_double(), eta, a, consts);
    fresh.level = w.level;
    unit = &fresh;
  }

  cert.require_at_most("witness.center_distance", "|x - a| <= sigma (x lies in its covering disc)",
                       CheckKind::kAnalytic, sigma, std::abs(w.x - a));

  const auto g_at = [&](Complex z) { return pow_int(z - a, w.s) * eval_h(*unit, z).value; };

  // (i) g vanishes identically on the dead zone.
  {
    const auto pts = sample_region(Region::disc(a, sigma), std::max<std::size_t>(spec.count / 8, 64),
                                   SeededRng::derive(spec.seed, 11),
                                   [&](Complex z) { return c.contains(z); });
    SupTracker sup;
    for (Complex z : pts) sup.update(std::abs(g_at(z)), z);
    auto& e = cert.require_at_most("witness.dead_zone_zero",
                                   "g = (z-a)^s h vanishes identically on the dead zone",
                                   CheckKind::kExact, 0.0, sup.value);
    e.samples = SampleMeta{pts.size(), spec.seed, 0.0};
  }

  // K samples plus targeted shell samples.
  std::vector<Complex> pts = sample_K(c, spec);
  {
    const auto shell = sample_region(
        unit_shell_region(*unit), std::max<std::size_t>(spec.count / 4, 64),
        SeededRng::derive(spec.seed, 12),
        [&](Complex z) { return c.contains(z) && clear_of_unit(*unit, z, 10.0); });
    pts.insert(pts.end(), shell.begin(), shell.end());
  }

  // (ii) and (iii). Points inside the unit's own discs are excluded; when
  // the unit was materialized fresh they are not yet part of the cheese.
  SupTracker translate, chain;
  for (Complex z : pts) {
    if (!clear_of_unit(*unit, z, 0.0)) continue;
    const Complex g = g_at(z);
    translate.update(std::abs(pow_int(z - a, w.s) - g), z);
    chain.update(std::abs(pow_int(z - w.x, w.s) - g), z);
  }
  auto& e2 = cert.require_at_most("witness.translate_bound", "sup_K |(z-a)^s - g| <= eta",
                                  CheckKind::kSampled, eta, translate.value);
  e2.samples = SampleMeta{pts.size(), spec.seed, spec.margin};
  e2.worst_point = translate.at;

  const double chain_demand = w.lipschitz_bound * sigma + eta;
  auto& e3 = cert.require_at_most("witness.chain_bound",
                                  "sup_K |(z-x)^s - g| <= lipschitz_bound*sigma + eta",
                                  CheckKind::kSampled, chain_demand, chain.value);
  e3.samples = SampleMeta{pts.size(), spec.seed, spec.margin};
  e3.worst_point = chain.at;

  return cert;
}

Certificate check_local_unit(const LocalUnit& unit, const SampleSpec& spec,
                             const Constants& consts) {
  spec.validate();
  Certificate cert;
  const double eps = unit.eps;
  const double eta = unit.eta;
  const double sigma = unit.sigma;

  // sigma identity: (sigma/(C*eta))^5 * 2*C1/eps^4 = eta.
  {
    const double ratio = sigma / (consts.c * eta);
    const double lhs = std::pow(ratio, 5.0) * 2.0 * consts.c1 / (eps * eps * eps * eps);
    const double rel = std::abs(lhs / eta - 1.0);
    cert.require_at_most("unit.sigma_identity",
                         "(sigma/(C eta))^5 * 2 C1 / eps^4 = eta to relative 1e-12",
                         CheckKind::kAnalytic, 1e-12, rel);
  }

  cert.require_at_most("unit.budget", "sum of inverted-disc radii < 2*eps*sigma",
                       CheckKind::kAnalytic, 2.0 * eps * sigma, unit.radius_budget);

  // Inverted rings live in the annulus sigma <= |z - a| <= sigma/(1-eps).
  {
    double inner = std::numeric_limits<double>::infinity();
    double outer = 0.0;
    for (const InvertedRing& ring : unit.inverted_rings) {
      inner = std::min(inner, ring.ring_radius - ring.disc_radius);
      outer = std::max(outer, ring.ring_radius + ring.disc_radius);
    }
    cert.require_at_least("unit.rings_outside_dead_zone",
                          "inverted rings start at or beyond radius sigma", CheckKind::kAnalytic,
                          sigma, inner);
    cert.require_at_most("unit.rings_inside_shell",
                         "inverted rings end within radius sigma/(1-eps)", CheckKind::kAnalytic,
                         sigma / (1.0 - eps), outer);
  }

  // Dead zone: exact zeros.
  {
    const auto pts = sample_region(Region::disc(unit.a, sigma),
                                   std::max<std::size_t>(spec.count / 8, 64),
                                   SeededRng::derive(spec.seed, 21),
                                   [](Complex) { return true; });
    double worst = 0.0;
    bool exact = true;
    for (Complex z : pts) {
      const EvalResult h = eval_h(unit, z);
      exact = exact && h.value == Complex(0.0, 0.0) && h.bound == 0.0;
      worst = std::max(worst, std::abs(h.value));
    }
    auto& e = cert.require_exact("unit.dead_zone", "h = 0 exactly on |z-a| <= sigma", exact);
    e.samples = SampleMeta{pts.size(), spec.seed, 0.0};
  }

  const double margin = std::max(spec.margin, 10.0 * std::numeric_limits<double>::epsilon() * sigma);
  const auto accept = [&](Complex z) {
    const Complex u = z - unit.a;
    for (const InvertedRing& ring : unit.inverted_rings) {
      if (ring.signed_distance(u) < margin) return false;
    }
    return true;
  };

  // Far zone: |h - 1| < eta/2^5 beyond sigma/(C*eta).
  {
    const double far_radius = sigma / (consts.c * eta);
    const auto pts = sample_region(Region::annulus(unit.a, far_radius, 2.0), spec.count,
                                   SeededRng::derive(spec.seed, 22), accept);
    SupTracker sup;
    for (Complex z : pts) sup.update(std::abs(eval_h(unit, z).value - 1.0), z);
    auto& e = cert.require_at_most("unit.far_zone", "|h - 1| < eta/32 for |z-a| > sigma/(C eta)",
                                   CheckKind::kSampled, eta / 32.0, sup.value);
    e.samples = SampleMeta{pts.size(), spec.seed, margin};
    e.worst_point = sup.at;
  }

  // |u|^5 |h - 1| <= eta on the doubled disc, uniform plus shell samples.
  {
    auto pts = sample_region(Region::disc(unit.a, 2.0), spec.count,
                             SeededRng::derive(spec.seed, 23), accept);
    const auto shell =
        sample_region(unit_shell_region(unit), spec.count,
                      SeededRng::derive(spec.seed, 24), [&](Complex z) {
                        const Complex u = z - unit.a;
                        for (const InvertedRing& ring : unit.inverted_rings) {
                          if (ring.signed_distance(u) < 10.0 * ring.disc_radius) return false;
                        }
                        return true;
                      });
    pts.insert(pts.end(), shell.begin(), shell.end());
    SupTracker sup;
    for (Complex z : pts) {
      const Complex u = z - unit.a;
      const double au = std::abs(u);
      const double deviation = au <= sigma ? 1.0 : std::abs(eval_h(unit, z).value - 1.0);
      sup.update(std::pow(au, 5.0) * deviation, z);
    }
    auto& e = cert.require_at_most("unit.corollary", "|(z-a)^5 h - (z-a)^5| <= eta on |z-a| <= 2",
                                   CheckKind::kSampled, eta, sup.value);
    e.samples = SampleMeta{pts.size(), spec.seed, margin};
    e.worst_point = sup.at;
  }

  return cert;
}

Certificate stout_check(const Cheese& c, double r) {
  Certificate cert;
  const double bound = total_radius_bound(c);
  const double demanded = std::min(r, 1.0);
  auto& e = cert.require_at_most("stout.hypothesis",
                                 "total deleted-disc radius bound below min(r, 1)",
                                 CheckKind::kAnalytic, demanded, bound);
  e.note = "nontriviality of R(K) under this hypothesis is cited, not computed";
  // Strict inequality.
  e.pass = bound < demanded;
  return cert;
}

AreaReport area_report(const Cheese& c, const SampleSpec& spec) {
  spec.validate();
  AreaReport report;
  const double bound = total_radius_bound(c);
  const double r = c.outer.radius;
  const double disc_area = std::numbers::pi * r * r;
  report.analytic_lower = std::max(0.0, disc_area - std::numbers::pi * bound * bound);

  SeededRng rng(spec.seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    if (c.contains(rng.in_disc(c.outer.center, r))) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(spec.count);
  report.estimate = disc_area * p;
  report.half_width =
      1.96 * disc_area * std::sqrt(p * (1.0 - p) / static_cast<double>(spec.count));
  report.samples = spec.count;
  return report;
}

}  // namespace fromage
