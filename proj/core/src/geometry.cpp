#include "fromage/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fromage {

Disc::Disc(Complex c, double r) : center(c), radius(r) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(r) || r <= 0.0) {
    throw InvalidInput("Disc: center must be finite and radius positive");
  }
}

double Disc::signed_distance(Complex p) const { return std::abs(p - center) - radius; }

Disc invert_disc(const Disc& d, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidInput("invert_disc: sigma must be positive and finite");
  }
  const double c2 = std::norm(d.center);
  const double denom = c2 - d.radius * d.radius;
  if (denom <= 0.0) {
    throw OriginInsideDisc("invert_disc: origin lies in the closed disc, image is not a disc");
  }
  return Disc(sigma * std::conj(d.center) / denom, sigma * d.radius / denom);
}

CenterGrid cover_unit_disc(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidInput("cover_unit_disc: spacing must be positive and finite");
  }
  CenterGrid grid;
  grid.spacing = c;
  grid.side = static_cast<std::size_t>(std::ceil(2.0 / c));
  grid.side = std::max<std::size_t>(grid.side, 1);
  grid.centers.reserve(grid.side * grid.side);
  for (std::size_t j = 0; j < grid.side; ++j) {
    for (std::size_t i = 0; i < grid.side; ++i) {
      grid.centers.emplace_back(-1.0 + (static_cast<double>(i) + 0.5) * c,
                                -1.0 + (static_cast<double>(j) + 0.5) * c);
    }
  }
  return grid;
}

Complex CenterGrid::center_containing(Complex p) const {
  const auto clamp_index = [&](double x) {
    const double t = std::floor((x + 1.0) / spacing);
    const double hi = static_cast<double>(side) - 1.0;
    return static_cast<std::size_t>(std::clamp(t, 0.0, hi));
  };
  const std::size_t i = clamp_index(p.real());
  const std::size_t j = clamp_index(p.imag());
  return centers[j * side + i];
}

double min_distance(Complex p, const std::vector<Disc>& discs) {
  double best = std::numeric_limits<double>::infinity();
  for (const Disc& d : discs) best = std::min(best, d.signed_distance(p));
  return best;
}

Complex project_to_unit_disc(Complex p) {
  const double m = std::abs(p);
  return m <= 1.0 ? p : p / m;
}

}  // namespace fromage
