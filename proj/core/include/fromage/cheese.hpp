#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "fromage/geometry.hpp"
#include "fromage/korner.hpp"
#include "fromage/log_domain.hpp"

namespace fromage {

/// sigma(eps, eta) = 2^-1/5 * C * C1^-1/5 * eta^6/5 * eps^4/5.
/// Satisfies (sigma/(C*eta))^5 * 2*C1/eps^4 = eta exactly.
/// Requires 0 < eps < alpha and 0 < eta < 1/(4C).
double sigma_of(double eps, double eta, const Constants& consts,
                double alpha = kDefaultAlpha);

/// Image of a pole ring under z -> sigma/z, in coordinates relative to the
/// unit center: pole_count discs of radius disc_radius centered on the
/// circle |u| = ring_radius at the mirrored pole angles.
struct InvertedRing {
  int n = 0;
  std::int64_t pole_count = 0;
  double ring_radius = 0.0;
  double disc_radius = 0.0;

  /// Signed distance from u = z - a to the nearest deleted disc. O(1).
  double signed_distance(Complex u) const;
};

/// h(z) = F_eps(sigma/(z - a)): vanishes identically on |z - a| <= sigma,
/// close to 1 far from a. Its deleted discs are the inverted, translated
/// pole discs of the family.
struct LocalUnit {
  double eps = 0.0;
  double eta = 0.0;
  double sigma = 0.0;
  Complex a;
  int level = 1;
  std::shared_ptr<const KornerFamily> family;
  std::vector<InvertedRing> inverted_rings;
  double radius_budget = 0.0;  // certified < 2*eps*sigma, tail included

  /// Distance computed in coordinates relative to a; the inverted shells
  /// are thin and would drown in absolute coordinates.
  double signed_distance(Complex z) const;
};

LocalUnit make_local_unit(double eps, double eta, Complex a, const Constants& consts);
LocalUnit make_local_unit(std::shared_ptr<const KornerFamily> family, double eta, Complex a,
                          const Constants& consts);

/// Assembly from an existing family and a pinned sigma; deserialization
/// carries sigma with the data instead of recomputing it.
LocalUnit assemble_local_unit(std::shared_ptr<const KornerFamily> family, double eta, Complex a,
                              double sigma);

/// Value of the unit at z. Exact 0 (the limit value) in the dead zone
/// |z - a| <= sigma; otherwise eval_F at sigma/(z - a).
EvalResult eval_h(const LocalUnit& unit, Complex z);

enum class Coverage { kSymbolic, kPartial, kFull };

/// One level of the assembly. Theorem-regime eps_n and sigma_n underflow
/// doubles and are carried as log magnitudes.
struct Level {
  int n = 0;
  double eta = 0.0;
  LogMag eps;
  LogMag sigma;
  double budget = 0.0;  // symbolic: 18*eps/sigma; otherwise sum of unit budgets
  Coverage coverage = Coverage::kSymbolic;

  /// True when the level's family fits in doubles (eps >= 3/(kMaxLevel-6)).
  bool materializable() const;
};

struct CheesePlan {
  double r = 0.0;
  std::vector<Level> levels;
};

/// Theorem schedule: eta_n = 1/n and eps_n chosen so that the level budget
/// 18*eps_n/sigma_n equals r*2^-n exactly; the grand total over L levels is
/// r*(1 - 2^-L) < r.
CheesePlan plan_cheese(double r, int level_count, const Constants& consts);

/// Single level at user-supplied moderate parameters; the budget field is
/// the full-covering cost 18*eps/sigma until instantiation tightens it.
CheesePlan demo_plan(double r, double eps, double eta, const Constants& consts);

struct Cheese {
  Disc outer = Disc(Complex(0, 0), 1.0);
  std::vector<Level> levels;
  std::vector<LocalUnit> units;
  std::vector<Disc> extra_discs;

  double signed_distance(Complex z) const;
  /// z in K: inside the outer disc and outside every deleted disc.
  bool contains(Complex z) const;
};

struct SymbolicMode {};
struct WitnessMode {
  int level = 1;
  std::vector<Complex> points;
};
struct DemoMode {
  double eps = 0.0;
  double eta = 0.0;
};
using InstantiateMode = std::variant<SymbolicMode, WitnessMode, DemoMode>;

struct InstantiateOptions {
  std::uint64_t covering_cap = 1000000;  // full-covering unit count limit
  double kappa = 1.0;
};

/// symbolic: bookkeeping only, no discs. witness: one unit per requested
/// point, centered at that point's covering-grid center (projected onto the
/// closed disc). demo: the full covering at sigma(eps, eta), subject to the
/// covering cap.
Cheese instantiate(const CheesePlan& plan, const InstantiateMode& mode,
                   const Constants& consts, const InstantiateOptions& opts = {});

/// Concatenates the deleted-disc families of two cheeses over the same
/// outer disc. Membership becomes the conjunction.
Cheese merge_cheeses(const Cheese& a, const Cheese& b);

/// Upper bound on the sum of all deleted-disc radii: symbolic level budgets,
/// 2*eps*sigma per materialized unit, explicit radii of extra discs.
double total_radius_bound(const Cheese& c);

/// Covering-grid center for p at spacing c, without materializing the grid.
Complex covering_center(double c, Complex p);

}  // namespace fromage
