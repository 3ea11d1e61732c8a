#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fromage/korner.hpp"
#include "fromage/sampling.hpp"

using namespace fromage;

namespace {

// sum_{r=1}^{T} (r+1)^-4 by direct accumulation; oracle for the c0 bracket
double quartic_partial_sum(std::size_t terms) {
  double s = 0.0;
  for (std::size_t r = terms; r >= 1; --r) {
    const double x = static_cast<double>(r) + 1.0;
    s += 1.0 / (x * x * x * x);
  }
  return s;
}

// eps at the default alpha boundary needs alpha raised; it is configuration
KornerParams eps_params(double eps) {
  KornerParams p;
  p.eps = eps;
  if (eps >= p.alpha) p.alpha = 0.49;
  p.validate();
  return p;
}

}  // namespace

TEST_CASE("c0 enclosure brackets the infinite product") {
  const Interval fine = c0_enclosure(1000000);
  // zeta(4)-1 partial sums pin the bracket: the product dominates
  // 1 + sum (r+1)^-4 from below and exp(sum) from above
  CHECK(fine.lower >= 1.0823);
  CHECK(fine.upper <= 1.0859);
  CHECK(fine.width() < 1e-12);
  CHECK(fine.contains(1.0836803129411309));  // frozen reference value

  SUBCASE("products dominate sums") {
    for (const std::size_t terms : {1u, 5u, 37u, 1000u}) {
      const Interval enc = c0_enclosure(terms);
      CHECK(enc.lower >= 1.0 + quartic_partial_sum(terms) - 1e-13);
    }
  }
  SUBCASE("refinement nests") {
    const Interval coarse = c0_enclosure(10);
    CHECK(coarse.contains(fine));
    CHECK(c0_enclosure(100).contains(c0_enclosure(10000)));
  }
}

TEST_CASE("c constant and the quarter-disc growth identity") {
  CHECK(c_constant(1.0) == doctest::Approx(1.0 / 128.0).epsilon(1e-15));
  const Constants consts = Constants::compute(100000);
  CHECK(consts.c > 0.0);
  CHECK(consts.c < 1.0);
  CHECK(consts.c1 == 1024.0 * consts.c0.upper);
  // 4*c0*(C*eta) = eta/2^5 for any eta
  for (const double eta : {0.1, 1.0, 7.5}) {
    const double lhs = 4.0 * consts.c0.upper * (consts.c * eta);
    CHECK(lhs == doctest::Approx(eta / 32.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(c_constant(0.5), InvalidInput);
}

TEST_CASE("first level exceeds 2/eps + 1") {
  CHECK(first_level(0.4) == 8);
  CHECK(first_level(0.45) == 7);
  CHECK(first_level(0.3) == 10);
  for (const double eps : {0.45, 0.4, 0.3, 0.2}) {
    CHECK(static_cast<double>(first_level(eps)) > 2.0 / eps + 1.0);
  }
}

TEST_CASE("build_family level schedule at eps = 0.4") {
  const KornerFamily fam = build_family(KornerParams::with_eps(0.4));
  CHECK(fam.m == 8);
  REQUIRE(fam.rings.size() == 7);  // levels 8..14
  const PoleRing& first = fam.rings.front();
  CHECK(first.pole_count == 524288);  // 8 * 2^16
  CHECK(first.circle_radius == 1.0 - std::exp2(-16.0));
  // per-level radius total is kappa*(n+1)^-4
  CHECK(first.radius_total() == doctest::Approx(std::pow(9.0, -4.0)).epsilon(1e-12));
  CHECK(fam.radius_budget < 0.4);
  CHECK(fam.radius_budget < 6.52e-4);  // below the m^-3/3 tail bound at m = 8
  // disc spacing dwarfs disc size: for n = 8, arc step ~1.198e-5 vs 2*rho ~5.8e-10
  const double spacing = 2.0 * std::numbers::pi * first.circle_radius / 524288.0;
  CHECK(spacing == doctest::Approx(1.198e-5).epsilon(1e-3));
  CHECK(2.0 * first.rho == doctest::Approx(5.8e-10).epsilon(1e-2));
}

TEST_CASE("build_family rejects bad schedules") {
  SUBCASE("n_max below first level") {
    KornerParams p = KornerParams::with_eps(0.4);
    p.n_max = 5;
    CHECK_THROWS_AS(build_family(p), InvalidInput);
  }
  SUBCASE("eps out of range") {
    CHECK_THROWS_AS(KornerParams::with_eps(0.6), InvalidInput);
    CHECK_THROWS_AS(KornerParams::with_eps(-0.1), InvalidInput);
  }
  SUBCASE("deep regime not materializable") {
    CHECK_THROWS_AS(build_family(KornerParams::with_eps(0.05)), NotMaterializable);
  }
  SUBCASE("budget gate reacts to kappa") {
    KornerParams p = KornerParams::with_eps(0.4);
    p.kappa = 1e4;  // level totals kappa*(n+1)^-4 now exceed eps
    CHECK_THROWS_AS(build_family(p), BudgetExceeded);
  }
}

TEST_CASE("eval_g closed forms") {
  for (int n = 1; n <= 24; ++n) {
    CHECK(eval_g(n, Complex(0, 0)) == Complex(1.0, 0.0));
  }
  // n = 1: N = 4, scale 3/4, g(3/8) = 1/(1 - (1/2)^4) = 16/15
  const Complex v = eval_g(1, Complex(0.375, 0.0));
  CHECK(v.real() == doctest::Approx(16.0 / 15.0).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
  CHECK_THROWS_AS(eval_g(1, Complex(0.75, 0.0)), PoleError);
}

TEST_CASE("ring query equals brute force") {
  const PoleRing ring = make_pole_ring(3, 1.0);
  REQUIRE(ring.pole_count == 192);
  CHECK(ring.signed_distance(Complex(0, 0)) ==
        doctest::Approx(ring.circle_radius - ring.rho).epsilon(1e-15));
  CHECK(ring.signed_distance(ring.pole(17)) == doctest::Approx(-ring.rho).epsilon(1e-12));

  SeededRng rng(0x9219);
  for (int i = 0; i < 10000; ++i) {
    const Complex z(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    double brute = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k < ring.pole_count; ++k) {
      brute = std::min(brute, std::abs(z - ring.pole(k)) - ring.rho);
    }
    CHECK(std::abs(ring.signed_distance(z) - brute) < 1e-14);
  }
}

TEST_CASE("pole ring invariants") {
  for (const double eps : {0.45, 0.4, 0.3}) {
    const KornerFamily fam = build_family(eps_params(eps));
    for (const PoleRing& ring : fam.rings) {
      CHECK(ring.rho < std::numbers::pi * ring.circle_radius /
                           static_cast<double>(ring.pole_count));
      CHECK(ring.circle_radius - ring.rho > 1.0 - eps);
      CHECK(ring.circle_radius + ring.rho < 1.0);
    }
  }
}

TEST_CASE("eval_F normalization and outside collapse") {
  const KornerFamily fam = build_family(KornerParams::with_eps(0.4));
  const EvalResult at0 = eval_F(fam, Complex(0, 0));
  CHECK(at0.value == Complex(1.0, 0.0));
  CHECK(at0.bound == 0.0);

  const EvalResult outside = eval_F(fam, Complex(1.1, 0.0));
  CHECK(std::abs(outside.value) < 1e-300);
  CHECK(outside.collapsed);

  CHECK_THROWS_AS(eval_F(fam, fam.rings.front().pole(0)), InsideDeletedDisc);
}

TEST_CASE("deeper truncation stays within the reported bound") {
  KornerParams shallow_params = KornerParams::with_eps(0.4);
  shallow_params.n_max = 8;
  const KornerFamily shallow = build_family(shallow_params);
  KornerParams deep_params = KornerParams::with_eps(0.4);
  deep_params.n_max = 13;
  const KornerFamily deep = build_family(deep_params);

  // The truncation bound is mathematically tight to second order, so the
  // comparison allows cancellation noise in the measured difference.
  const auto within_bound = [](const EvalResult& lo, const EvalResult& hi) {
    const double fp_noise = 8.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(lo.value) + std::abs(hi.value));
    return std::abs(lo.value - hi.value) <= lo.bound * (1.0 + 1e-9) + fp_noise;
  };

  const double r9 = 1.0 - std::exp2(-18.0);  // first ring missing from `shallow`
  SeededRng rng(0x7a11);
  std::size_t nontrivial = 0;
  for (int i = 0; i < 1000; ++i) {
    // radii up to just below ring 9, where the shallow tail bound is live
    const double radius = rng.uniform(0.0, r9 * (1.0 - 1e-7));
    const Complex z = std::polar(radius, rng.uniform(0.0, 2.0 * std::numbers::pi));
    if (deep.signed_distance(z) < 0.0) continue;
    const EvalResult lo = eval_F(shallow, z);
    const EvalResult hi = eval_F(deep, z);
    REQUIRE(lo.bound_available);
    CHECK(within_bound(lo, hi));
    if (lo.bound > 1e-6) ++nontrivial;
  }
  // the band just below ring 9 must actually exercise the bound
  SeededRng band_rng(0x7a12);
  for (int i = 0; i < 200; ++i) {
    const double radius = r9 * (1.0 - std::pow(10.0, band_rng.uniform(-7.0, -5.0)));
    const Complex z = std::polar(radius, band_rng.uniform(0.0, 2.0 * std::numbers::pi));
    if (deep.signed_distance(z) < 0.0) continue;
    const EvalResult lo = eval_F(shallow, z);
    const EvalResult hi = eval_F(deep, z);
    REQUIRE(lo.bound_available);
    CHECK(within_bound(lo, hi));
    if (lo.bound > 1e-6) ++nontrivial;
  }
  CHECK(nontrivial > 50);
}

TEST_CASE("no finite tail bound in the shell below the first missing ring") {
  KornerParams params = KornerParams::with_eps(0.4);
  params.n_max = 8;
  const KornerFamily fam = build_family(params);
  const double r9 = 1.0 - std::exp2(-18.0);
  const EvalResult res = eval_F(fam, Complex(r9 * (1.0 + 1e-9), 0.0));
  CHECK(!res.bound_available);
  CHECK(res.bound == std::numeric_limits<double>::infinity());
}

TEST_CASE("g_n stays within the cited level bound on the half disc") {
  const KornerFamily fam = build_family(KornerParams::with_eps(0.4));
  SeededRng rng(0x2e3);
  for (int i = 0; i < 2000; ++i) {
    const Complex z = rng.in_disc({0, 0}, 0.5);
    for (const PoleRing& ring : fam.rings) {
      const double bound = 1.0 + std::pow(static_cast<double>(ring.n) + 1.0, -4.0);
      const double value = std::abs(eval_g(ring.n, z));
      CHECK(value <= bound);
      // the slack is essentially the whole (n+1)^-4 term
      CHECK(value - 1.0 <= 1e-9 * std::pow(static_cast<double>(ring.n) + 1.0, -4.0));
    }
  }
}

TEST_CASE("check_conditions passes at the default schedule") {
  const Constants consts = Constants::compute(100000);
  const KornerFamily fam = build_family(KornerParams::with_eps(0.4));
  SampleSpec spec;
  spec.count = 1500;
  spec.seed = 42;
  const Certificate cert = check_conditions(fam, spec, consts);
  for (const CertEntry& e : cert.entries) {
    INFO(e.id, " observed=", e.observed, " demanded=", e.demanded);
    CHECK(e.pass);
  }
  CHECK(cert.overall());
  REQUIRE(cert.find("f.normalization") != nullptr);
  CHECK(cert.find("f.normalization")->kind == CheckKind::kExact);
}
