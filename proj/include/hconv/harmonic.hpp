#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hconv/complex_poly.hpp"

namespace hconv {

/// Default truncation order for Taylor series; enough that series and
/// closed-form dilatation paths agree to better than 1e-7 for |z| <= 0.7.
inline constexpr int kDefaultTruncation = 256;

/// Series evaluations are refused beyond this radius. Accuracy within the
/// cap is the caller's responsibility via the truncation order (see
/// truncation_for_radius).
inline constexpr double kSeriesRadiusCap = 0.999;

/// Truncated Taylor series c_0..c_N about 0. Arithmetic truncates at the
/// smaller operand order; multiplication never wraps.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  explicit PowerSeries(std::vector<Complex> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const {
    return (k >= 0 && k <= order()) ? coeffs_[k] : Complex{0.0};
  }
  Complex& operator[](int k) { return coeffs_[k]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex evaluate(Complex z) const;
  PowerSeries derivative() const;            // order N-1
  PowerSeries integral() const;              // order N+1, constant term 0
  PowerSeries truncated(int order) const;
  /// 1/this; requires |c_0| >= 1e-12.
  PowerSeries inverse() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(Complex s, const PowerSeries& a);

 private:
  std::vector<Complex> coeffs_;
};

/// Admissible dilatation kernels: e^{i theta} z^n and (b - z)/(1 - b z).
/// Both map the open disk into itself.
struct KernelSpec {
  enum class Family { monomial, moebius };

  Family family = Family::monomial;
  int n = 1;           // monomial power
  double theta = 0.0;  // monomial phase, normalized into [0, 2pi)
  double b = 0.0;      // moebius parameter, |b| < 1

  static KernelSpec monomial(int n, double theta);
  static KernelSpec moebius(double b);

  Complex value(Complex z) const;
  Complex derivative(Complex z) const;

  std::string to_string() const;  // "monomial:n=2,theta=3.14159" / "moebius:b=0.5"
  static KernelSpec parse(const std::string& text);
};

enum class ClosedFormTag { none, f_zero, f_a, sheared };

struct ClosedForm {
  ClosedFormTag tag = ClosedFormTag::none;
  double a = 0.0;                     // used by f_a
  std::optional<KernelSpec> kernel;   // used by sheared
  std::string to_string() const;
};

/// Harmonic map f = h + conj(g) on the unit disk, h(0) = g(0) = 0.
struct HarmonicMap {
  PowerSeries h;
  PowerSeries g;
  ClosedForm closed_form;

  HarmonicMap(PowerSeries h_part, PowerSeries g_part, ClosedForm tag = {});
  int order() const { return std::min(h.order(), g.order()); }
  /// h(z) + conj(g(z)); refuses |z| > kSeriesRadiusCap.
  Complex value(Complex z) const;
};

/// Shears h + g = z/(1-z) against the prescribed dilatation:
/// h' = 1/((1+omega)(1-z)^2), h(0) = 0, g = z/(1-z) - h.
HarmonicMap shear_half_plane(const KernelSpec& omega, int truncation_order);

/// The right half-plane map with moebius dilatation parameter a,
///   h = (z/(1+a) - z^2/2)/(1-z)^2,   g = (a z/(1+a) - z^2/2)/(1-z)^2,
/// expanded to the given order. Requires |a| < 1.
HarmonicMap f_a_closed_form(double a, int truncation_order = kDefaultTruncation);

/// Hadamard product: coefficient-wise products of the analytic and
/// co-analytic parts, re-truncated to the smaller order.
HarmonicMap convolve(const HarmonicMap& F, const HarmonicMap& f);

/// Convolution with the parameter-a half-plane map in closed form:
/// h1 = (h + c z h')/2, g1 = (g - c z g')/2 with c = (1-a)/(1+a).
/// Requires that f itself satisfies h + g = z/(1-z).
HarmonicMap convolve_half_plane_pair(double a, const HarmonicMap& f);

/// Rescales both parts by 1/h'(0) so the z-coefficient of h becomes 1.
/// Leaves the dilatation untouched.
HarmonicMap renormalized(const HarmonicMap& f);

/// Dilatation of a convolution with the parameter-a half-plane map,
/// evaluated pointwise from the kernel and its derivative:
///   [2 w (a-z)(1+w) + z w' (a-1)(1-z)] / [2 (1-az)(1+w) + z w' (a-1)(1-z)].
/// Throws when the denominator magnitude drops below 1e-12.
Complex dilatation_general(double a, Complex w, Complex w_prime, Complex z);
Complex dilatation_general(double a, const KernelSpec& omega, Complex z);
std::function<Complex(Complex)> dilatation_general(double a, const KernelSpec& omega);

/// Dilatation as unit phase x z^power x num/den; den is the
/// conjugate-reciprocal of num whenever built by the constructors below.
struct DilatationRational {
  Complex phase{1.0, 0.0};
  int monomial_power = 0;
  ComplexPolynomial numerator;
  ComplexPolynomial denominator;

  Complex value(Complex z) const;  // throws when |den(z)| < 1e-12
};

/// Closed form for the monomial kernel e^{i theta} z^n: phase -e^{2 i theta},
/// power n, numerator
///   z^{n+1} - a z^n + (2+an-n)/2 e^{-i theta} z + (n-2a-an)/2 e^{-i theta}.
DilatationRational dilatation_monomial(double a, int n, double theta);

/// Closed form for the moebius kernel (b-z)/(1-bz): phase 1, power 0,
/// numerator z^2 + (ab-3a-3b+1)/2 z + ab.
DilatationRational dilatation_mobius(double a, double b);

/// g'(z)/h'(z) from the truncated series; truncation error is O(|z|^N).
/// Requires |z| < 1 and |h'(z)| >= 1e-12.
Complex series_dilatation_eval(const HarmonicMap& f, Complex z);

/// Trust radius rule of thumb: smallest order in {256, 2048, 4096, 32768}
/// whose tail bound k^3 r^k is negligible at radius r.
int truncation_for_radius(double r);

/// Polar sampling grid over the disk; radii are r_max * j/radii, j = 1..radii.
struct PolarGrid {
  int radii = 64;
  int angles = 256;
  double r_max = 0.999;
};

double normalize_angle(double theta);  // into [0, 2pi)

/// Angle literals: "pi", "pi/2", "2pi/3", "-pi/4", or plain decimal radians.
double parse_angle(const std::string& text);

}  // namespace hconv
