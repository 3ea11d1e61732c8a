// Acceptance suite: every inequality and identity the construction rests
// on, certified at desk scale with fixed seeds. One pass/fail line per
// criterion; the process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "fromage/certify.hpp"
#include "fromage/serialize.hpp"
#include "fromage/svg.hpp"
#include "support/xml_lite.hpp"

using namespace fromage;

namespace {

int g_failures = 0;
int g_index = 0;

void report(bool pass, const std::string& name, const std::string& detail) {
  ++g_index;
  std::printf("[%2d/15] %s  %s (%s)\n", g_index, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    report(pass, name, detail);
  } catch (const std::exception& e) {
    report(false, name, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main() {
  const Constants consts = Constants::compute(1000000);

  // 1. Exact normalization at several eps. The 0.45 family needs alpha
  // configured above it; alpha is a configuration value.
  run("F(0) = 1 with zero error for eps in {0.45, 0.40, 0.30}", [&] {
    bool pass = true;
    for (const double eps : {0.45, 0.40, 0.30}) {
      KornerParams params;
      params.eps = eps;
      if (eps >= params.alpha) params.alpha = 0.49;
      const EvalResult r = eval_F(build_family(params), Complex(0, 0));
      pass = pass && r.value == Complex(1.0, 0.0) && r.bound == 0.0;
    }
    return std::make_pair(pass, std::string("exact equality, zero truncation bound"));
  });

  // 2. Per-level bound on the half disc.
  run("|g_n| <= 1 + (n+1)^-4 on |z| <= 1/2 for n = 8..14", [&] {
    SeededRng rng(0x1ebea0);
    bool pass = true;
    double worst_excess = -1.0;
    std::vector<Complex> pts;
    pts.reserve(10000);
    for (int i = 0; i < 10000; ++i) pts.push_back(rng.in_disc({0, 0}, 0.5));
    for (int n = 8; n <= 14; ++n) {
      const double bound = 1.0 + std::pow(n + 1.0, -4.0);
      for (const Complex z : pts) {
        const double v = std::abs(eval_g(n, z));
        pass = pass && v <= bound;
        worst_excess = std::max(worst_excess, v - 1.0);
      }
    }
    return std::make_pair(pass, "10^4 points per level, worst |g|-1 = " + fmt(worst_excess));
  });

  const KornerFamily family = build_family(KornerParams::with_eps(0.4));
  SampleSpec grid;
  grid.count = 10000;
  grid.seed = 7;
  const Certificate conditions = check_conditions(family, grid, consts);
  const auto entry = [&](const char* id) -> const CertEntry& {
    const CertEntry* e = conditions.find(id);
    if (e == nullptr) throw Error(std::string("missing certificate entry ") + id);
    return *e;
  };

  // 3. Sup over the half disc.
  run("sup |F| on |z| <= 1/2 below the c0 upper endpoint", [&] {
    const CertEntry& e = entry("g.sup_half_disc");
    const bool near_one = std::abs(e.observed - 1.0) <= 1e-12;
    return std::make_pair(e.pass && near_one,
                          "observed " + fmt(e.observed) + " <= " + fmt(e.demanded));
  });

  // 4. Global sup with margin 10*rho.
  run("sup |F| off the deleted discs below c1/eps^4 at eps = 0.4", [&] {
    const CertEntry& e = entry("h.sup_global");
    return std::make_pair(e.pass, "observed " + fmt(e.observed) + " <= " + fmt(e.demanded));
  });

  // 5. Analytic conditions: budget, containment, disjointness.
  run("radius budget, ring containment, and disjointness hold exactly", [&] {
    const bool pass = entry("a.radius_budget").pass && entry("d.rings_below_circle").pass &&
                      entry("d.rings_above_annulus").pass && entry("e.intra_ring_gap").pass &&
                      entry("e.inter_ring_gap").pass;
    return std::make_pair(pass, "budget " + fmt(entry("a.radius_budget").observed) + " < 0.4");
  });

  // 6. Certified c0 enclosure.
  run("c0 enclosure inside [1.0823, 1.0859] with width < 1e-12", [&] {
    const Interval c0 = consts.c0;
    const bool pass =
        c0.lower >= 1.0823 && c0.upper <= 1.0859 && c0.width() < 1e-12 && c0.lower <= c0.upper;
    return std::make_pair(pass, "[" + fmt(c0.lower) + ", " + fmt(c0.upper) + "], width " +
                                    fmt(c0.width()));
  });

  // 7. The sigma identity.
  run("(sigma/(C eta))^5 * 2 C1 / eps^4 = eta to 1e-12 on 100 seeded pairs", [&] {
    SeededRng rng(0x51d);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double eps = rng.uniform(0.2, 0.45);
      const double eta = rng.uniform(0.1, 2.0);
      const double sigma = sigma_of(eps, eta, consts);
      const double lhs =
          std::pow(sigma / (consts.c * eta), 5.0) * 2.0 * consts.c1 / std::pow(eps, 4.0);
      worst = std::max(worst, std::abs(lhs / eta - 1.0));
    }
    return std::make_pair(worst <= 1e-12, "worst relative error " + fmt(worst));
  });

  // 8. Disc inversion: involution, image circle, annulus bound.
  run("inversion involution/image tests at 1e-12; rho' <= 2 sigma rho", [&] {
    SeededRng rng(0x12f1ec7);
    bool pass = true;
    for (int i = 0; i < 1000; ++i) {
      const double abs_c = rng.uniform(0.3, 3.0);
      const Complex c = std::polar(abs_c, rng.uniform(0.0, 2.0 * std::numbers::pi));
      const double rho = rng.uniform(1e-4, 0.9) * abs_c;
      const double sigma = rng.uniform(0.1, 3.0);
      const Disc d(c, rho);
      const Disc image = invert_disc(d, sigma);
      const Disc back = invert_disc(image, sigma);
      pass = pass && std::abs(back.center - d.center) <= 1e-12 * std::abs(d.center) &&
             std::abs(back.radius - d.radius) <= 1e-12 * d.radius;
      const Complex boundary =
          d.center + std::polar(d.radius, rng.uniform(0.0, 2.0 * std::numbers::pi));
      pass = pass &&
             std::abs(std::abs(sigma / boundary - image.center) - image.radius) <= 1e-12;
    }
    // annulus bound on discs with (|c|-rho)(|c|+rho) >= 1/2
    double worst_ratio = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double eps = rng.uniform(0.02, 0.29);
      const double abs_c = rng.uniform(1.0 - eps, 1.0);
      const double max_rho = std::min(abs_c - (1.0 - eps), 1.0 - abs_c);
      if (max_rho <= 0.0) continue;
      const double rho = rng.uniform(0.0, 1.0) * max_rho * 0.999 + 1e-12;
      const double sigma = rng.uniform(0.1, 2.0);
      const Disc image = invert_disc(
          Disc(std::polar(abs_c, rng.uniform(0.0, 2.0 * std::numbers::pi)), rho), sigma);
      worst_ratio = std::max(worst_ratio, image.radius / (sigma * rho));
      pass = pass && image.radius <= 2.0 * sigma * rho;
    }
    return std::make_pair(pass, "worst rho'/(sigma rho) = " + fmt(worst_ratio) + " <= 2");
  });

  // A local unit shared by criteria 9 and 10.
  const Complex a(0.3, 0.2);
  const LocalUnit unit = make_local_unit(0.4, 1.0, a, consts);
  const double sigma = unit.sigma;

  // 9. The translated fifth-power inequality, dead zone included.
  run("|(z-a)^5 h - (z-a)^5| <= eta on 2000 seeded samples; dead zone exact", [&] {
    SeededRng rng(0xc033);
    double worst = 0.0;
    bool pass = true;
    std::size_t kept = 0;
    while (kept < 2000) {
      const Complex z = rng.in_disc(a, 2.0);
      if (unit.signed_distance(z) < 0.0) continue;
      ++kept;
      const Complex u = z - a;
      const double au = std::abs(u);
      const double dev = au <= sigma ? 1.0 : std::abs(eval_h(unit, z).value - 1.0);
      const double value = std::pow(au, 5.0) * dev;
      worst = std::max(worst, value);
      pass = pass && value <= unit.eta;
    }
    SeededRng dz(0xdead0);
    for (int i = 0; i < 200; ++i) {
      const EvalResult r = eval_h(unit, dz.in_disc(a, sigma));
      pass = pass && r.value == Complex(0.0, 0.0) && r.bound == 0.0;
    }
    return std::make_pair(pass, "sup " + fmt(worst) + " <= 1; 200 dead-zone samples exact");
  });

  // 10. Far-zone closeness to 1.
  run("|h - 1| < eta/32 for |z-a| > sigma/(C eta)", [&] {
    SeededRng rng(0xfa23);
    const double far_radius = sigma / (consts.c * unit.eta);
    double worst = 0.0;
    bool pass = true;
    std::size_t kept = 0;
    while (kept < 2000) {
      const Complex z = rng.in_annulus(a, far_radius, 2.0);
      if (unit.signed_distance(z) < 0.0) continue;
      ++kept;
      const double dev = std::abs(eval_h(unit, z).value - 1.0);
      worst = std::max(worst, dev);
      pass = pass && dev < unit.eta / 32.0;
    }
    return std::make_pair(pass, "sup |h-1| = " + fmt(worst) + " < " + fmt(unit.eta / 32.0));
  });

  // 11. Budget assembly in log domain.
  run("plan(r = 0.5, L = 20): 18 sum eps_n/sigma_n = r(1 - 2^-20) < r", [&] {
    const double r = 0.5;
    const CheesePlan plan = plan_cheese(r, 20, consts);
    bool pass = plan.levels.size() == 20;
    double worst = 0.0;
    double total = 0.0;
    for (const Level& lv : plan.levels) {
      const double log_budget = std::log(18.0) + lv.eps.log() - lv.sigma.log();
      const double target = std::log(r) - static_cast<double>(lv.n) * std::log(2.0);
      worst = std::max(worst, std::abs(log_budget - target));
      total += lv.budget;
    }
    const double expected = r * (1.0 - std::exp2(-20.0));
    pass = pass && worst <= 1e-12 && std::abs(total / expected - 1.0) <= 1e-12 && total < r;
    return std::make_pair(pass, "per-level log error " + fmt(worst) + ", total " + fmt(total));
  });

  // 12. Square-grid covering counts and coverage.
  run("covering: count = ceil(2/c)^2 <= 9/c^2 and 10^5 points within c", [&] {
    bool pass = true;
    std::string detail;
    for (const double c : {0.5, 0.1, 0.05}) {
      const CenterGrid gridc = cover_unit_disc(c);
      const auto side = static_cast<std::size_t>(std::ceil(2.0 / c));
      pass = pass && gridc.count() == side * side;
      pass = pass && static_cast<double>(gridc.count()) <= 9.0 / (c * c);
      SeededRng rng(0xc0ffee + static_cast<std::uint64_t>(1.0 / c));
      for (int i = 0; i < 100000; ++i) {
        const Complex p = rng.in_disc({0, 0}, 1.0);
        pass = pass && std::abs(p - gridc.center_containing(p)) < c;
      }
      detail += fmt(static_cast<double>(gridc.count())) + " ";
    }
    return std::make_pair(pass, "counts: " + detail + "<= 36/900/3600");
  });

  // 13. Witness chains at 25 seeded points.
  const CheesePlan demo = demo_plan(0.5, 0.4, 1.0, consts);
  SeededRng point_rng(0x250);
  std::vector<Complex> witness_points;
  for (int i = 0; i < 25; ++i) witness_points.push_back(point_rng.in_disc({0, 0}, 1.0));
  const Cheese witness_cheese =
      instantiate(demo, WitnessMode{1, witness_points}, consts, InstantiateOptions{});

  run("witness checks at 25 seeded points certify 5*sigma + eta", [&] {
    bool pass = true;
    double worst_chain = 0.0;
    for (std::size_t i = 0; i < witness_points.size(); ++i) {
      SampleSpec spec;
      spec.count = 2000;
      spec.seed = SeededRng::derive(7, 9000 + i);
      const Certificate cert =
          check_witness(witness_cheese, WitnessSpec::at(witness_points[i]), spec, consts);
      pass = pass && cert.overall();
      if (const CertEntry* e = cert.find("witness.chain_bound")) {
        worst_chain = std::max(worst_chain, e->observed);
        pass = pass && e->demanded == 5.0 * witness_cheese.levels[0].sigma.to_double() +
                                          witness_cheese.levels[0].eta;
      } else {
        pass = false;
      }
    }
    return std::make_pair(pass, "worst observed chain sup " + fmt(worst_chain) +
                                    " <= 5 sigma + eta");
  });

  // 14. Merge of two half-budget cheeses and the nontriviality hypothesis.
  run("merge of two budget-r/2 cheeses keeps the total below r < 1", [&] {
    const double r = 0.5;
    SeededRng rng(0x3e6e);
    std::vector<Complex> pa, pb;
    for (int i = 0; i < 12; ++i) pa.push_back(rng.in_disc({0, 0}, 1.0));
    for (int i = 0; i < 12; ++i) pb.push_back(rng.in_disc({0, 0}, 1.0));
    const CheesePlan half = demo_plan(r / 2, 0.4, 1.0, consts);
    const Cheese a_cheese = instantiate(half, WitnessMode{1, pa}, consts, InstantiateOptions{});
    const Cheese b_cheese = instantiate(half, WitnessMode{1, pb}, consts, InstantiateOptions{});
    bool pass = total_radius_bound(a_cheese) < r / 2 && total_radius_bound(b_cheese) < r / 2;

    const Cheese merged = merge_cheeses(a_cheese, b_cheese);
    const double bound = total_radius_bound(merged);
    pass = pass && bound < r && r < 1.0 && stout_check(merged, r).overall();

    std::size_t agreements = 0;
    SeededRng mem_rng(0x3e6f);
    for (int i = 0; i < 1000; ++i) {
      const Complex z = mem_rng.in_disc({0, 0}, 1.05);
      if (merged.contains(z) == (a_cheese.contains(z) && b_cheese.contains(z))) ++agreements;
    }
    pass = pass && agreements == 1000;
    return std::make_pair(pass, "merged bound " + fmt(bound) + " < 0.5; membership 1000/1000");
  });

  // 15. Determinism, JSON round-trip, SVG well-formedness.
  run("repeat runs byte-identical; round-trip preserves budgets; SVG well-formed", [&] {
    bool pass = true;
    // repeated certification is byte-identical
    const std::string cert_once = certificate_to_json(check_conditions(family, grid, consts));
    const std::string cert_twice = certificate_to_json(check_conditions(family, grid, consts));
    pass = pass && cert_once == cert_twice;

    // JSON round-trip: identical budgets and membership on seeded samples
    const std::string text = cheese_to_json(witness_cheese);
    const Cheese back = cheese_from_json(text);
    pass = pass && total_radius_bound(back) == total_radius_bound(witness_cheese);
    pass = pass && cheese_to_json(back) == text;
    SampleSpec spec;
    spec.count = 1000;
    spec.seed = 99;
    for (const Complex z : sample_K(Cheese{}, spec)) {
      pass = pass && back.contains(z) == witness_cheese.contains(z);
    }

    // SVG output well-formed for both a symbolic and a materialized cheese
    const Cheese symbolic = instantiate(plan_cheese(0.5, 20, consts), SymbolicMode{}, consts);
    pass = pass && testsupport::xml_well_formed(render_svg(symbolic, RenderOptions{}));
    RenderOptions deep;
    deep.viewport_center = witness_cheese.units.front().a;
    deep.viewport_width = 4.0 * witness_cheese.units.front().sigma;
    deep.min_radius = 0.0;
    deep.max_discs = 500;
    pass = pass && testsupport::xml_well_formed(render_svg(witness_cheese, deep));
    return std::make_pair(pass, "certificates, cheese JSON, and SVG all stable");
  });

  std::printf("acceptance: %d/15 criteria passed\n", 15 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
