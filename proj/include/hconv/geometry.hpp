#pragma once

#include <string>
#include <vector>

#include "hconv/harmonic.hpp"

namespace hconv {

/// Image-plane curve; consecutive points closer than 1e-14 are merged.
/// A closed polyline has at least 3 points and an implicit edge from the
/// last point back to the first.
struct Polyline {
  std::vector<Complex> points;
  bool closed = false;

  Polyline() = default;
  Polyline(std::vector<Complex> pts, bool is_closed);
};

struct CurveSpec {
  enum class Kind { circle, ray };
  Kind kind = Kind::circle;
  double radius = 0.5;  // circle radius, or ray outer radius
  double angle = 0.0;   // ray direction
  static CurveSpec circle(double r) { return {Kind::circle, r, 0.0}; }
  static CurveSpec ray(double angle, double r_max) { return {Kind::ray, r_max, angle}; }
};

/// Samples the image of a circle |z| = r (closed) or the radial segment
/// from 0 to r_max e^{i angle} (open) under f. Radii above the series cap
/// are refused.
Polyline sample_image(const HarmonicMap& f, const CurveSpec& curve, int samples);

struct ChdResult {
  bool convex_horizontal = true;
  std::vector<double> offending_levels;
};

/// Horizontal-crossing parity test for convexity in the horizontal
/// direction: each of `levels` horizontal lines across the curve's vertical
/// extent must cross the closed curve exactly 0 or 2 times. Levels landing
/// within 1e-9 of a vertex are nudged off it. The caller is responsible for
/// the curve being simple.
ChdResult chd_check(const Polyline& curve, int levels);

/// Proper and endpoint intersections between all non-adjacent segment
/// pairs, orientation-predicate based with 1e-12 collinearity tolerance.
/// Passing the same polyline twice performs a self-intersection test.
std::vector<Complex> polyline_intersections(const Polyline& c1, const Polyline& c2);

struct JacobianScan {
  double min_value = 0.0;
  Complex argmin{0.0};
};

/// Minimum of |h'|^2 - |g'|^2 over the polar grid and where it occurs.
JacobianScan jacobian_sign_scan(const HarmonicMap& f, const PolarGrid& grid = {});

struct SvgStyle {
  std::string stroke = "#000000";
  double stroke_width = 1.0;
};

/// {xmin, xmax, ymin, ymax} in image coordinates, y pointing up.
struct ViewWindow {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
};

/// SVG 1.1 document with one path per polyline. Without a window the
/// viewBox is fitted to the data with a 5% margin; half-plane images grow
/// without bound near the unit circle, so figure reproductions pass an
/// explicit window and let the viewBox clip. The image plane's y axis
/// points up.
std::string render_svg(const std::vector<std::pair<Polyline, SvgStyle>>& curves,
                       double canvas_width = 800.0, double canvas_height = 800.0,
                       const ViewWindow* window = nullptr);

/// Window holding the central `keep` fraction of the sampled points in each
/// coordinate, padded by 10%.
ViewWindow robust_window(const std::vector<std::pair<Polyline, SvgStyle>>& curves,
                         double keep = 0.9);

}  // namespace hconv
