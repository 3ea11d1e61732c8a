#pragma once

#include <complex>
#include <vector>

#include "fromage/errors.hpp"

namespace fromage {

using Complex = std::complex<double>;

/// Open disc in the plane. Radius is strictly positive and finite.
struct Disc {
  Complex center;
  double radius = 0.0;

  Disc() = default;
  Disc(Complex c, double r);

  /// |p - center| - radius. Negative inside.
  double signed_distance(Complex p) const;
};

/// Centers of the ceil(2/c)^2 squares of side c tiling [-1,1]^2.
/// Discs of radius c about the centers cover the closed unit disc,
/// and the count is at most 9/c^2 for c <= 1.
struct CenterGrid {
  double spacing = 0.0;
  std::size_t side = 0;  // centers form a side x side lattice
  std::vector<Complex> centers;

  std::size_t count() const { return centers.size(); }

  /// Center of the square containing p (p clamped into [-1,1]^2). O(1).
  Complex center_containing(Complex p) const;
};

/// Image of d under z -> sigma/z. Exact closed form:
/// center' = sigma*conj(c)/(|c|^2 - rho^2), radius' = sigma*rho/(|c|^2 - rho^2).
/// Throws OriginInsideDisc unless |c| > rho.
Disc invert_disc(const Disc& d, double sigma);

CenterGrid cover_unit_disc(double c);

/// min over discs of signed distance; +infinity for an empty list.
double min_distance(Complex p, const std::vector<Disc>& discs);

/// Nearest point of the closed unit disc (identity when |p| <= 1).
Complex project_to_unit_disc(Complex p);

}  // namespace fromage
