#include "fromage/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace fromage {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Shortest round-trip formatting keeps documents byte-identical across runs.
std::string fmt(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

struct Frame {
  double x0, y0, x1, y1;  // world box
  double scale;           // pixels per world unit
  int pixels;

  double px(double re) const { return (re - x0) * scale; }
  double py(double im) const { return (y1 - im) * scale; }

  bool disc_touches(Complex c, double r) const {
    const double cx = std::clamp(c.real(), x0, x1);
    const double cy = std::clamp(c.imag(), y0, y1);
    return std::hypot(c.real() - cx, c.imag() - cy) <= r;
  }
};

class Emitter {
 public:
  Emitter(const Frame& frame, std::uint64_t max_discs)
      : frame_(frame), budget_(max_discs) {}

  // True while the disc budget lasts.
  bool circle(Complex center, double r, const char* fill) {
    if (budget_ == 0) {
      ++omitted_;
      return false;
    }
    --budget_;
    body_ << "<circle cx=\"" << fmt(frame_.px(center.real())) << "\" cy=\""
          << fmt(frame_.py(center.imag())) << "\" r=\"" << fmt(r * frame_.scale)
          << "\" fill=\"" << fill << "\"/>\n";
    return true;
  }

  void skip(std::uint64_t n) { omitted_ += n; }
  std::uint64_t omitted() const { return omitted_; }
  bool exhausted() const { return budget_ == 0; }
  std::string str() const { return body_.str(); }

 private:
  Frame frame_;
  std::uint64_t budget_;
  std::uint64_t omitted_ = 0;
  std::ostringstream body_;
};

// Angular window of the viewport box as seen from p, in turns. Full circle
// when p lies in the box.
struct AngularWindow {
  bool full = false;
  double lo = 0.0, hi = 0.0;  // turns, hi - lo <= 1
};

AngularWindow window_from(const Frame& f, Complex p) {
  AngularWindow w;
  if (p.real() >= f.x0 && p.real() <= f.x1 && p.imag() >= f.y0 && p.imag() <= f.y1) {
    w.full = true;
    return w;
  }
  const Complex box_center((f.x0 + f.x1) / 2, (f.y0 + f.y1) / 2);
  const double ref = std::arg(box_center - p) / kTau;
  double lo = ref, hi = ref;
  const std::array<Complex, 4> corners = {Complex(f.x0, f.y0), Complex(f.x1, f.y0),
                                          Complex(f.x0, f.y1), Complex(f.x1, f.y1)};
  for (Complex corner : corners) {
    double t = std::arg(corner - p) / kTau;
    // bring into (ref - 1/2, ref + 1/2]
    t -= std::round(t - ref);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  w.lo = lo;
  w.hi = hi;
  return w;
}

// Deleted discs of one implicit ring: count discs of radius disc_radius on
// the circle of ring_radius about a. The angle set is symmetric under
// conjugation, so mirrored rings enumerate identically.
void emit_ring(Emitter& em, const Frame& f, Complex a, std::int64_t count, double ring_radius,
               double disc_radius, double min_radius, const char* fill) {
  const double dx = std::clamp(a.real(), f.x0, f.x1) - a.real();
  const double dy = std::clamp(a.imag(), f.y0, f.y1) - a.imag();
  const double near = std::hypot(dx, dy);
  const double far = std::max({std::abs(a - Complex(f.x0, f.y0)), std::abs(a - Complex(f.x1, f.y0)),
                               std::abs(a - Complex(f.x0, f.y1)), std::abs(a - Complex(f.x1, f.y1))});
  if (near > ring_radius + disc_radius || far < ring_radius - disc_radius) return;

  const AngularWindow w = window_from(f, a);
  std::int64_t jlo = 0, jhi = count - 1;
  if (!w.full) {
    // widen by one disc's angular half-width
    const double pad = disc_radius / (kTau * ring_radius) + 1.0 / static_cast<double>(count);
    jlo = static_cast<std::int64_t>(std::floor((w.lo - pad) * static_cast<double>(count)));
    jhi = static_cast<std::int64_t>(std::ceil((w.hi + pad) * static_cast<double>(count)));
    if (jhi - jlo + 1 >= count) {
      jlo = 0;
      jhi = count - 1;
    }
  }
  const std::uint64_t in_window = static_cast<std::uint64_t>(jhi - jlo + 1);
  if (disc_radius < min_radius) {
    em.skip(in_window);
    return;
  }
  // Candidate scans are capped as well; a huge ring crossing a small
  // viewport corner would otherwise walk billions of indices.
  std::uint64_t iterations = 0;
  const std::uint64_t iteration_cap = 10000000;
  for (std::int64_t j = jlo; j <= jhi; ++j) {
    if (++iterations > iteration_cap) {
      em.skip(static_cast<std::uint64_t>(jhi - j + 1));
      return;
    }
    std::int64_t k = j % count;
    if (k < 0) k += count;
    const double frac = static_cast<double>(k) / static_cast<double>(count);
    const Complex center = a + std::polar(ring_radius, kTau * frac);
    if (!f.disc_touches(center, disc_radius)) continue;
    if (!em.circle(center, disc_radius, fill)) {
      em.skip(static_cast<std::uint64_t>(jhi - j));
      return;
    }
  }
}

}  // namespace

std::string render_svg(const Cheese& c, const RenderOptions& opts) {
  if (!(opts.viewport_width > 0.0) || opts.pixel_width < 1) {
    throw InvalidInput("render_svg: bad viewport");
  }
  Frame f;
  f.x0 = opts.viewport_center.real() - opts.viewport_width / 2;
  f.x1 = opts.viewport_center.real() + opts.viewport_width / 2;
  f.y0 = opts.viewport_center.imag() - opts.viewport_width / 2;
  f.y1 = opts.viewport_center.imag() + opts.viewport_width / 2;
  f.pixels = opts.pixel_width;
  f.scale = static_cast<double>(opts.pixel_width) / opts.viewport_width;
  const double min_radius =
      opts.min_radius >= 0.0 ? opts.min_radius : 0.5 / f.scale;  // half a pixel

  static constexpr const char* kCheese = "#e9c46a";
  static constexpr const char* kHole = "#ffffff";

  // The outer disc does not count against the cap.
  const std::uint64_t budget =
      opts.max_discs == std::numeric_limits<std::uint64_t>::max() ? opts.max_discs
                                                                  : opts.max_discs + 1;
  Emitter em(f, budget);
  em.circle(c.outer.center, c.outer.radius, kCheese);

  for (const Disc& d : c.extra_discs) {
    if (!f.disc_touches(d.center, d.radius)) continue;
    if (d.radius < min_radius) {
      em.skip(1);
      continue;
    }
    em.circle(d.center, d.radius, kHole);
  }
  for (const LocalUnit& u : c.units) {
    for (const InvertedRing& ring : u.inverted_rings) {
      emit_ring(em, f, u.a, ring.pole_count, ring.ring_radius, ring.disc_radius, min_radius,
                kHole);
      if (em.exhausted()) break;
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.pixels << "\" height=\""
      << f.pixels << "\" viewBox=\"0 0 " << f.pixels << " " << f.pixels
      << "\" version=\"1.1\">\n"
      << "<desc>Swiss cheese rendering; " << em.omitted()
      << " discs omitted (below min radius or beyond the disc cap)</desc>\n"
      << em.str() << "</svg>\n";
  return out.str();
}

}  // namespace fromage
