#include "hconv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace hconv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kVertexBand = 1e-9;
constexpr double kCollinearTol = 1e-12;
}  // namespace

Polyline::Polyline(std::vector<Complex> pts, bool is_closed) : closed(is_closed) {
  for (const Complex& p : pts) {
    if (!points.empty() && std::abs(p - points.back()) < 1e-14) continue;
    points.push_back(p);
  }
  if (closed && points.size() > 1 && std::abs(points.front() - points.back()) < 1e-14)
    points.pop_back();
  if (closed && points.size() < 3) throw error("Polyline: closed curve needs at least 3 points");
}

Polyline sample_image(const HarmonicMap& f, const CurveSpec& curve, int samples) {
  if (samples < 2) throw error("sample_image: need at least 2 samples");
  if (curve.radius > kSeriesRadiusCap + 1e-15)
    throw error("sample_image: evaluation radius exceeded");
  std::vector<Complex> pts;
  pts.reserve(samples);
  if (curve.kind == CurveSpec::Kind::circle) {
    for (int i = 0; i < samples; ++i)
      pts.push_back(f.value(std::polar(curve.radius, 2.0 * kPi * i / samples)));
    return Polyline(std::move(pts), true);
  }
  for (int i = 0; i < samples; ++i)
    pts.push_back(f.value(std::polar(curve.radius * i / (samples - 1.0), curve.angle)));
  return Polyline(std::move(pts), false);
}

ChdResult chd_check(const Polyline& curve, int levels) {
  if (!curve.closed) throw error("chd_check: curve must be closed");
  if (levels < 1) throw error("chd_check: need at least 1 level");
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  for (const Complex& p : curve.points) {
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  if (ymax - ymin < 1e-13) throw error("chd_check: degenerate curve, no vertical extent");

  ChdResult res;
  const std::size_t n = curve.points.size();
  for (int i = 0; i < levels; ++i) {
    double y = ymin + (i + 0.5) * (ymax - ymin) / levels;
    // Nudge off any vertex so every crossing is transversal.
    for (int guard = 0; guard < 64; ++guard) {
      bool clear = true;
      for (const Complex& p : curve.points)
        if (std::abs(p.imag() - y) < kVertexBand) {
          clear = false;
          break;
        }
      if (clear) break;
      y += 2.0 * kVertexBand;
    }
    int crossings = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double y0 = curve.points[j].imag();
      const double y1 = curve.points[(j + 1) % n].imag();
      if ((y0 < y && y1 > y) || (y0 > y && y1 < y)) ++crossings;
    }
    if (crossings != 0 && crossings != 2) {
      res.convex_horizontal = false;
      res.offending_levels.push_back(y);
    }
  }
  return res;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Intersection of segments [p0,p1] and [q0,q1], if any.
bool segment_intersection(Complex p0, Complex p1, Complex q0, Complex q1, Complex& out) {
  const double scale = std::max({std::abs(p1 - p0), std::abs(q1 - q0), 1e-300});
  const double tol = kCollinearTol * scale * scale;
  const double d1 = cross(p0, p1, q0);
  const double d2 = cross(p0, p1, q1);
  const double d3 = cross(q0, q1, p0);
  const double d4 = cross(q0, q1, p1);

  const auto sgn = [tol](double v) { return v > tol ? 1 : (v < -tol ? -1 : 0); };
  const int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);

  if (s1 * s2 < 0 && s3 * s4 < 0) {
    const double t = d3 / (d3 - d4);
    out = p0 + t * (p1 - p0);
    return true;
  }
  // Touching or collinear contact: report the involved endpoint.
  const auto on_segment = [tol](Complex a, Complex b, Complex p) {
    if (std::abs(cross(a, b, p)) > tol) return false;
    return std::min(a.real(), b.real()) - 1e-12 <= p.real() &&
           p.real() <= std::max(a.real(), b.real()) + 1e-12 &&
           std::min(a.imag(), b.imag()) - 1e-12 <= p.imag() &&
           p.imag() <= std::max(a.imag(), b.imag()) + 1e-12;
  };
  for (const Complex& cand : {q0, q1}) {
    if (on_segment(p0, p1, cand)) {
      out = cand;
      return true;
    }
  }
  for (const Complex& cand : {p0, p1}) {
    if (on_segment(q0, q1, cand)) {
      out = cand;
      return true;
    }
  }
  return false;
}

std::size_t segment_count(const Polyline& c) {
  if (c.points.size() < 2) return 0;
  return c.closed ? c.points.size() : c.points.size() - 1;
}

}  // namespace

std::vector<Complex> polyline_intersections(const Polyline& c1, const Polyline& c2) {
  const bool self = &c1 == &c2;
  const std::size_t n1 = segment_count(c1);
  const std::size_t n2 = segment_count(c2);
  std::vector<Complex> hits;
  for (std::size_t i = 0; i < n1; ++i) {
    const Complex p0 = c1.points[i];
    const Complex p1 = c1.points[(i + 1) % c1.points.size()];
    for (std::size_t j = self ? i + 1 : 0; j < n2; ++j) {
      if (self) {
        // Adjacent segments share an endpoint by construction.
        if (j == i + 1) continue;
        if (c1.closed && i == 0 && j == n1 - 1) continue;
      }
      const Complex q0 = c2.points[j];
      const Complex q1 = c2.points[(j + 1) % c2.points.size()];
      Complex w;
      if (segment_intersection(p0, p1, q0, q1, w)) hits.push_back(w);
    }
  }
  return hits;
}

JacobianScan jacobian_sign_scan(const HarmonicMap& f, const PolarGrid& grid) {
  if (grid.r_max > kSeriesRadiusCap + 1e-15)
    throw error("jacobian_sign_scan: grid exceeds evaluation radius");
  const PowerSeries hp = f.h.derivative();
  const PowerSeries gp = f.g.derivative();
  JacobianScan res;
  res.min_value = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= grid.radii; ++j) {
    const double r = grid.r_max * j / grid.radii;
    for (int i = 0; i < grid.angles; ++i) {
      const Complex z = std::polar(r, 2.0 * kPi * i / grid.angles);
      const double jac = std::norm(hp.evaluate(z)) - std::norm(gp.evaluate(z));
      if (jac < res.min_value) {
        res.min_value = jac;
        res.argmin = z;
      }
    }
  }
  return res;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<std::pair<Polyline, SvgStyle>>& curves,
                       double canvas_width, double canvas_height, const ViewWindow* window) {
  if (curves.empty()) throw error("render_svg: need at least one curve");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  if (window != nullptr) {
    xmin = window->xmin;
    xmax = window->xmax;
    ymin = -window->ymax;  // y flipped: SVG y grows downward
    ymax = -window->ymin;
  } else {
    for (const auto& [poly, style] : curves)
      for (const Complex& p : poly.points) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, -p.imag());
        ymax = std::max(ymax, -p.imag());
      }
  }
  const double pad = 0.025 * std::max({xmax - xmin, ymax - ymin, 1e-12});
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(canvas_width)
     << "\" height=\"" << fmt(canvas_height) << "\" viewBox=\"" << fmt(xmin - pad) << " "
     << fmt(ymin - pad) << " " << fmt(xmax - xmin + 2.0 * pad) << " "
     << fmt(ymax - ymin + 2.0 * pad) << "\">\n";
  for (const auto& [poly, style] : curves) {
    os << "  <path fill=\"none\" stroke=\"" << style.stroke << "\" stroke-width=\""
       << fmt(style.stroke_width) << "\" vector-effect=\"non-scaling-stroke\" d=\"";
    for (std::size_t i = 0; i < poly.points.size(); ++i)
      os << (i == 0 ? "M" : " L") << fmt(poly.points[i].real()) << " "
         << fmt(-poly.points[i].imag());
    if (poly.closed) os << " Z";
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

ViewWindow robust_window(const std::vector<std::pair<Polyline, SvgStyle>>& curves, double keep) {
  std::vector<double> xs, ys;
  for (const auto& [poly, style] : curves)
    for (const Complex& p : poly.points) {
      xs.push_back(p.real());
      ys.push_back(p.imag());
    }
  if (xs.empty()) throw error("robust_window: no points");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const auto quantile = [](const std::vector<double>& v, double q) {
    const double idx = q * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (idx - lo) * (v[hi] - v[lo]);
  };
  const double drop = 0.5 * (1.0 - keep);
  ViewWindow w;
  w.xmin = quantile(xs, drop);
  w.xmax = quantile(xs, 1.0 - drop);
  w.ymin = quantile(ys, drop);
  w.ymax = quantile(ys, 1.0 - drop);
  const double padx = 0.1 * std::max(w.xmax - w.xmin, 1e-12);
  const double pady = 0.1 * std::max(w.ymax - w.ymin, 1e-12);
  w.xmin -= padx;
  w.xmax += padx;
  w.ymin -= pady;
  w.ymax += pady;
  return w;
}

}  // namespace hconv
