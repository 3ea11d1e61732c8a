#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fromage/geometry.hpp"

namespace fromage {

/// Deterministic uniform sampler. Doubles are derived from raw mt19937_64
/// words, not std::uniform_real_distribution, so identical seeds give
/// identical streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform over the disc (polar with sqrt-radius).
  Complex in_disc(Complex center, double radius);

  /// Uniform over the closed annulus r_inner <= |z - center| <= r_outer.
  Complex in_annulus(Complex center, double r_inner, double r_outer);

  /// Derive an independent stream; mixing is splitmix64-style.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

/// Sampling region: a disc or an annulus.
struct Region {
  Complex center;
  double r_inner = 0.0;  // 0 for a disc
  double r_outer = 0.0;

  static Region disc(Complex c, double r) { return Region{c, 0.0, r}; }
  static Region annulus(Complex c, double ri, double ro) { return Region{c, ri, ro}; }

  Complex draw(SeededRng& rng) const;
};

struct SampleSpec {
  std::size_t count = 1;
  double margin = 0.0;  // minimum clearance from deleted discs
  std::uint64_t seed = 0;
  Region region = Region::disc(Complex(0, 0), 1.0);

  void validate() const;
};

/// Rejection sampling: draws from the region, keeps points accepted by the
/// predicate, returns exactly `count` points. Throws RejectionRateError when
/// the acceptance rate falls below 1e-4.
std::vector<Complex> sample_region(const Region& region, std::size_t count, std::uint64_t seed,
                                   const std::function<bool(Complex)>& accept);

}  // namespace fromage
