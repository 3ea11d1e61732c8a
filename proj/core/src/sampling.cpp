#include "fromage/sampling.hpp"

#include <cmath>
#include <numbers>

namespace fromage {

Complex SeededRng::in_disc(Complex center, double radius) {
  const double r = radius * std::sqrt(uniform());
  const double theta = 2.0 * std::numbers::pi * uniform();
  return center + std::polar(r, theta);
}

Complex SeededRng::in_annulus(Complex center, double r_inner, double r_outer) {
  const double u = uniform();
  const double r = std::sqrt(r_inner * r_inner + u * (r_outer * r_outer - r_inner * r_inner));
  const double theta = 2.0 * std::numbers::pi * uniform();
  return center + std::polar(r, theta);
}

std::uint64_t SeededRng::derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex Region::draw(SeededRng& rng) const {
  return r_inner > 0.0 ? rng.in_annulus(center, r_inner, r_outer)
                       : rng.in_disc(center, r_outer);
}

void SampleSpec::validate() const {
  if (count < 1) throw InvalidInput("SampleSpec: count must be at least 1");
  if (!(margin >= 0.0)) throw InvalidInput("SampleSpec: margin must be nonnegative");
  if (!(region.r_outer > 0.0) || region.r_inner < 0.0 || region.r_inner > region.r_outer) {
    throw InvalidInput("SampleSpec: malformed region");
  }
}

std::vector<Complex> sample_region(const Region& region, std::size_t count, std::uint64_t seed,
                                   const std::function<bool(Complex)>& accept) {
  SeededRng rng(seed);
  std::vector<Complex> out;
  out.reserve(count);
  std::size_t attempts = 0;
  const std::size_t attempt_cap = count * 10000;
  while (out.size() < count) {
    if (++attempts > attempt_cap) {
      throw RejectionRateError("sample_region: acceptance rate below 1e-4");
    }
    const Complex z = region.draw(rng);
    if (accept(z)) out.push_back(z);
  }
  return out;
}

}  // namespace fromage
