#include "fromage/cheese.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace fromage {

double sigma_of(double eps, double eta, const Constants& consts, double alpha) {
  if (!(eps > 0.0) || !(eps < alpha)) {
    throw InvalidInput("sigma_of: require 0 < eps < alpha");
  }
  if (!(eta > 0.0) || !(eta < 1.0 / (4.0 * consts.c))) {
    throw InvalidInput("sigma_of: require 0 < eta < 1/(4C)");
  }
  return std::pow(2.0, -0.2) * consts.c * std::pow(consts.c1, -0.2) * std::pow(eta, 1.2) *
         std::pow(eps, 0.8);
}

double InvertedRing::signed_distance(Complex u) const {
  // The image ring carries mirrored pole angles; conjugation maps it onto a
  // standard ring.
  return ring_disc_distance(pole_count, ring_radius, disc_radius, std::conj(u));
}

double LocalUnit::signed_distance(Complex z) const {
  const Complex u = z - a;
  double best = std::numeric_limits<double>::infinity();
  for (const InvertedRing& ring : inverted_rings) {
    best = std::min(best, ring.signed_distance(u));
  }
  return best;
}

LocalUnit make_local_unit(double eps, double eta, Complex a, const Constants& consts) {
  auto family = std::make_shared<const KornerFamily>(build_family(KornerParams::with_eps(eps)));
  return make_local_unit(std::move(family), eta, a, consts);
}

LocalUnit make_local_unit(std::shared_ptr<const KornerFamily> family, double eta, Complex a,
                          const Constants& consts) {
  const double sigma = sigma_of(family->params.eps, eta, consts, family->params.alpha);
  return assemble_local_unit(std::move(family), eta, a, sigma);
}

LocalUnit assemble_local_unit(std::shared_ptr<const KornerFamily> family, double eta, Complex a,
                              double sigma) {
  const double eps = family->params.eps;
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidInput("assemble_local_unit: sigma must be positive and finite");
  }
  if (std::abs(a) > 1.0 + 1e-12) {
    throw InvalidInput("assemble_local_unit: center must lie in the closed unit disc");
  }

  LocalUnit unit;
  unit.eps = eps;
  unit.eta = eta;
  unit.sigma = sigma;
  unit.a = a;
  unit.family = std::move(family);

  double materialized_total = 0.0;
  unit.inverted_rings.reserve(unit.family->rings.size());
  for (const PoleRing& ring : unit.family->rings) {
    const double denom = ring.circle_radius * ring.circle_radius - ring.rho * ring.rho;
    InvertedRing inv;
    inv.n = ring.n;
    inv.pole_count = ring.pole_count;
    inv.ring_radius = sigma * ring.circle_radius / denom;
    inv.disc_radius = sigma * ring.rho / denom;
    materialized_total += static_cast<double>(inv.pole_count) * inv.disc_radius;
    unit.inverted_rings.push_back(inv);
  }
  // Unmaterialized levels: each image disc obeys rho' <= 2*sigma*rho since
  // the rings sit within 2^-2m of the unit circle, so the tail costs at
  // most 2*sigma*kappa*(n_max+1)^-3/3.
  const int n_max = unit.family->rings.back().n;
  const double t = static_cast<double>(n_max) + 1.0;
  const double tail = 2.0 * sigma * unit.family->params.kappa / (3.0 * t * t * t);
  unit.radius_budget = materialized_total + tail;
  if (!(unit.radius_budget < 2.0 * eps * sigma)) {
    throw BudgetExceeded("assemble_local_unit: inverted-disc budget not below 2*eps*sigma");
  }
  return unit;
}

EvalResult eval_h(const LocalUnit& unit, Complex z) {
  const Complex u = z - unit.a;
  if (std::abs(u) <= unit.sigma) {
    // Dead zone: the limit function vanishes here exactly.
    return EvalResult{Complex(0.0, 0.0), 0.0, true, false};
  }
  if (unit.signed_distance(z) < 0.0) {
    throw InsideDeletedDisc("eval_h: z inside a deleted disc of the unit");
  }
  return eval_F(*unit.family, unit.sigma / u);
}

bool Level::materializable() const {
  const double e = eps.to_double();
  return e >= 3.0 / static_cast<double>(kMaxLevel - 6);
}

CheesePlan plan_cheese(double r, int level_count, const Constants& consts) {
  if (!(r > 0.0)) throw InvalidInput("plan_cheese: r must be positive");
  if (level_count < 1) throw InvalidInput("plan_cheese: need at least one level");
  const double log2 = std::log(2.0);
  const double log_c = std::log(consts.c);
  const double log_c1 = std::log(consts.c1);
  CheesePlan plan;
  plan.r = r;
  plan.levels.reserve(static_cast<std::size_t>(level_count));
  for (int n = 1; n <= level_count; ++n) {
    Level lv;
    lv.n = n;
    lv.eta = 1.0 / static_cast<double>(n);
    // 18*eps_n/sigma_n = r*2^-n exactly, solved for eps_n.
    const double log_eps =
        5.0 * (std::log(r) - n * log2 - 1.2 * std::log(static_cast<double>(n)) + log_c -
               std::log(18.0) - 0.2 * log2 - 0.2 * log_c1);
    const double log_sigma = -0.2 * log2 + log_c - 0.2 * log_c1 +
                             1.2 * std::log(lv.eta) + 0.8 * log_eps;
    lv.eps = LogMag::from_log(log_eps);
    lv.sigma = LogMag::from_log(log_sigma);
    lv.budget = std::exp(std::log(18.0) + log_eps - log_sigma);
    lv.coverage = Coverage::kSymbolic;
    plan.levels.push_back(lv);
  }
  return plan;
}

CheesePlan demo_plan(double r, double eps, double eta, const Constants& consts) {
  if (!(r > 0.0)) throw InvalidInput("demo_plan: r must be positive");
  const double sigma = sigma_of(eps, eta, consts);
  Level lv;
  lv.n = 1;
  lv.eta = eta;
  lv.eps = LogMag::from_value(eps);
  lv.sigma = LogMag::from_value(sigma);
  lv.budget = 18.0 * eps / sigma;  // full-covering cost
  lv.coverage = Coverage::kSymbolic;
  CheesePlan plan;
  plan.r = r;
  plan.levels.push_back(lv);
  return plan;
}

double Cheese::signed_distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const LocalUnit& unit : units) best = std::min(best, unit.signed_distance(z));
  for (const Disc& d : extra_discs) best = std::min(best, d.signed_distance(z));
  return best;
}

bool Cheese::contains(Complex z) const {
  if (outer.signed_distance(z) > 0.0) return false;
  return signed_distance(z) >= 0.0;
}

Complex covering_center(double c, Complex p) {
  if (!(c > 0.0)) throw InvalidInput("covering_center: spacing must be positive");
  const double side = std::ceil(2.0 / c);
  if (side > 9e15) {
    throw NotMaterializable("covering_center: grid index exceeds exact double range");
  }
  const auto clamp_index = [&](double x) {
    return std::clamp(std::floor((x + 1.0) / c), 0.0, side - 1.0);
  };
  return Complex(-1.0 + (clamp_index(p.real()) + 0.5) * c,
                 -1.0 + (clamp_index(p.imag()) + 0.5) * c);
}

namespace {

const Level& find_level(const CheesePlan& plan, int n) {
  for (const Level& lv : plan.levels) {
    if (lv.n == n) return lv;
  }
  throw InvalidInput("instantiate: plan has no level " + std::to_string(n));
}

double unit_budget(const LocalUnit& u) { return 2.0 * u.eps * u.sigma; }

Cheese instantiate_symbolic(const CheesePlan& plan) {
  Cheese cheese;
  cheese.levels = plan.levels;
  for (Level& lv : cheese.levels) lv.coverage = Coverage::kSymbolic;
  return cheese;
}

Cheese instantiate_witness(const CheesePlan& plan, const WitnessMode& mode,
                           const Constants& consts, const InstantiateOptions& opts) {
  if (mode.points.empty()) throw InvalidInput("instantiate: witness mode needs points");
  const Level& lv = find_level(plan, mode.level);
  if (!lv.materializable()) {
    throw NotMaterializable(
        "instantiate: level " + std::to_string(mode.level) +
        " has eps below the double-precision regime; use symbolic mode");
  }
  const double eps = lv.eps.to_double();
  const double sigma = lv.sigma.to_double();

  KornerParams params = KornerParams::with_eps(eps);
  params.kappa = opts.kappa;
  auto family = std::make_shared<const KornerFamily>(build_family(params));

  Cheese cheese;
  cheese.levels = plan.levels;
  std::vector<Complex> centers;
  for (Complex x : mode.points) {
    const Complex a = project_to_unit_disc(covering_center(sigma, x));
    if (std::find(centers.begin(), centers.end(), a) == centers.end()) centers.push_back(a);
  }
  double level_total = 0.0;
  for (Complex a : centers) {
    LocalUnit unit = make_local_unit(family, lv.eta, a, consts);
    unit.level = mode.level;
    level_total += unit_budget(unit);
    cheese.units.push_back(std::move(unit));
  }
  for (Level& out : cheese.levels) {
    if (out.n == mode.level) {
      out.coverage = Coverage::kPartial;
      out.budget = level_total;
    }
  }
  return cheese;
}

Cheese instantiate_demo(const DemoMode& mode, const Constants& consts,
                        const InstantiateOptions& opts) {
  const double sigma = sigma_of(mode.eps, mode.eta, consts);
  const double side_d = std::ceil(2.0 / sigma);
  const std::uint64_t side = static_cast<std::uint64_t>(side_d);
  const std::uint64_t covering_count = side * side;
  if (covering_count > opts.covering_cap) {
    throw CapExceeded(covering_count, opts.covering_cap,
                      "instantiate: full covering needs " + std::to_string(covering_count) +
                          " discs, cap is " + std::to_string(opts.covering_cap) +
                          "; use witness or symbolic mode");
  }

  KornerParams params = KornerParams::with_eps(mode.eps);
  params.kappa = opts.kappa;
  auto family = std::make_shared<const KornerFamily>(build_family(params));

  Cheese cheese;
  Level lv;
  lv.n = 1;
  lv.eta = mode.eta;
  lv.eps = LogMag::from_value(mode.eps);
  lv.sigma = LogMag::from_value(sigma);
  lv.coverage = Coverage::kFull;

  // Only squares meeting the closed disc carry units; the rest of the
  // covering never touches K.
  double level_total = 0.0;
  const double reach = 1.0 + sigma * std::numbers::sqrt2 / 2.0;
  for (std::uint64_t j = 0; j < side; ++j) {
    for (std::uint64_t i = 0; i < side; ++i) {
      const Complex center(-1.0 + (static_cast<double>(i) + 0.5) * sigma,
                           -1.0 + (static_cast<double>(j) + 0.5) * sigma);
      if (std::abs(center) > reach) continue;
      LocalUnit unit = make_local_unit(family, mode.eta, project_to_unit_disc(center), consts);
      unit.level = 1;
      level_total += unit_budget(unit);
      cheese.units.push_back(std::move(unit));
    }
  }
  lv.budget = level_total;
  cheese.levels.push_back(lv);
  return cheese;
}

}  // namespace

Cheese instantiate(const CheesePlan& plan, const InstantiateMode& mode, const Constants& consts,
                   const InstantiateOptions& opts) {
  return std::visit(
      [&](const auto& m) -> Cheese {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SymbolicMode>) {
          return instantiate_symbolic(plan);
        } else if constexpr (std::is_same_v<T, WitnessMode>) {
          return instantiate_witness(plan, m, consts, opts);
        } else {
          return instantiate_demo(m, consts, opts);
        }
      },
      mode);
}

Cheese merge_cheeses(const Cheese& a, const Cheese& b) {
  if (a.outer.center != b.outer.center || a.outer.radius != b.outer.radius) {
    throw OuterDiscMismatch("merge_cheeses: outer discs differ");
  }
  Cheese merged;
  merged.outer = a.outer;
  merged.levels = a.levels;
  merged.levels.insert(merged.levels.end(), b.levels.begin(), b.levels.end());
  merged.units = a.units;
  merged.units.insert(merged.units.end(), b.units.begin(), b.units.end());
  merged.extra_discs = a.extra_discs;
  merged.extra_discs.insert(merged.extra_discs.end(), b.extra_discs.begin(),
                            b.extra_discs.end());
  return merged;
}

double total_radius_bound(const Cheese& c) {
  double total = 0.0;
  for (const Level& lv : c.levels) {
    if (lv.coverage == Coverage::kSymbolic) total += lv.budget;
  }
  for (const LocalUnit& u : c.units) total += unit_budget(u);
  for (const Disc& d : c.extra_discs) total += d.radius;
  return total;
}

}  // namespace fromage
