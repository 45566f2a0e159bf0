#include "hconv/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hconv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

namespace {

double parse_number(const std::string& s) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &consumed);
  } catch (const std::exception&) {
    throw error("bad number '" + s + "'");
  }
  if (consumed != s.size()) throw error("trailing characters in number '" + s + "'");
  return v;
}

}  // namespace

double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_number(text);
  double coeff = 1.0;
  if (pos > 0) {
    const std::string head = text.substr(0, pos);
    if (head == "-") coeff = -1.0;
    else if (head == "+") coeff = 1.0;
    else coeff = parse_number(head);
  }
  double divisor = 1.0;
  if (pos + 2 < text.size()) {
    const std::string tail = text.substr(pos + 2);
    if (tail.size() < 2 || tail[0] != '/') throw error("bad angle literal '" + text + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) throw error("bad angle literal '" + text + "'");
  }
  return coeff * std::numbers::pi / divisor;
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k > 0; --k) acc = acc * z + coeffs_[k - 1];
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries d(order() - 1);
  for (int k = 1; k <= order(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return d;
}

PowerSeries PowerSeries::integral() const {
  PowerSeries s(order() + 1);
  for (int k = 0; k <= order(); ++k) s[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries t(order);
  for (int k = 0; k <= order; ++k) t[k] = coeff(k);
  return t;
}

PowerSeries PowerSeries::inverse() const {
  if (std::abs(coeffs_[0]) < 1e-12)
    throw error("PowerSeries::inverse: constant term too small");
  PowerSeries r(order());
  r[0] = 1.0 / coeffs_[0];
  for (int k = 1; k <= order(); ++k) {
    Complex acc{0.0};
    for (int j = 1; j <= k; ++j) acc += coeff(j) * r.coeff(k - j);
    r[k] = -acc / coeffs_[0];
  }
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    Complex acc{0.0};
    for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
    r[k] = acc;
  }
  return r;
}

PowerSeries operator*(Complex s, const PowerSeries& a) {
  PowerSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = s * a.coeff(k);
  return r;
}

KernelSpec KernelSpec::monomial(int n, double theta) {
  if (n < 1) throw error("KernelSpec: monomial power must be >= 1");
  KernelSpec k;
  k.family = Family::monomial;
  k.n = n;
  k.theta = normalize_angle(theta);
  return k;
}

KernelSpec KernelSpec::moebius(double b) {
  if (std::abs(b) >= 1.0) throw error("KernelSpec: moebius parameter must satisfy |b| < 1");
  KernelSpec k;
  k.family = Family::moebius;
  k.b = b;
  return k;
}

Complex KernelSpec::value(Complex z) const {
  if (family == Family::monomial) return std::polar(1.0, theta) * std::pow(z, n);
  return (b - z) / (1.0 - b * z);
}

Complex KernelSpec::derivative(Complex z) const {
  if (family == Family::monomial)
    return static_cast<double>(n) * std::polar(1.0, theta) * std::pow(z, n - 1);
  const Complex d = 1.0 - b * z;
  return (b * b - 1.0) / (d * d);
}

std::string KernelSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  if (family == Family::monomial)
    os << "monomial:n=" << n << ",theta=" << theta;
  else
    os << "moebius:b=" << b;
  return os.str();
}

KernelSpec KernelSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw error("KernelSpec: expected family:params");
  const std::string family = text.substr(0, colon);
  double n = 0.0, theta = 0.0, b = 0.0;
  bool has_n = false, has_theta = false, has_b = false;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw error("KernelSpec: expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double val = parse_angle(item.substr(eq + 1));
    if (key == "n") n = val, has_n = true;
    else if (key == "theta") theta = val, has_theta = true;
    else if (key == "b") b = val, has_b = true;
    else throw error("KernelSpec: unknown key '" + key + "'");
  }
  if (family == "monomial") {
    if (!has_n || !has_theta) throw error("KernelSpec: monomial needs n and theta");
    return monomial(static_cast<int>(std::lround(n)), theta);
  }
  if (family == "moebius") {
    if (!has_b) throw error("KernelSpec: moebius needs b");
    return moebius(b);
  }
  throw error("KernelSpec: unknown family '" + family + "'");
}

std::string ClosedForm::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (tag) {
    case ClosedFormTag::none: return "none";
    case ClosedFormTag::f_zero: return "f_0";
    case ClosedFormTag::f_a: os << "f_a(a=" << a << ")"; return os.str();
    case ClosedFormTag::sheared: return "sheared(" + kernel->to_string() + ")";
  }
  return "none";
}

HarmonicMap::HarmonicMap(PowerSeries h_part, PowerSeries g_part, ClosedForm tag)
    : h(std::move(h_part)), g(std::move(g_part)), closed_form(std::move(tag)) {
  if (std::abs(h.coeff(0)) > 1e-14 || std::abs(g.coeff(0)) > 1e-14)
    throw error("HarmonicMap: h(0) and g(0) must vanish");
}

Complex HarmonicMap::value(Complex z) const {
  if (std::abs(z) > kSeriesRadiusCap + 1e-15)
    throw error("HarmonicMap::value: evaluation radius exceeded");
  return h.evaluate(z) + std::conj(g.evaluate(z));
}

namespace {

/// Coefficients of 1/(1 + omega) up to the given order. Both kernel
/// families admit direct expansions, which keeps shear construction O(N):
///   monomial: sum (-1)^m e^{im theta} z^{mn}
///   moebius:  (1-bz)/((1+b)(1-z)) -> 1/(1+b), then (1-b)/(1+b) repeating.
PowerSeries one_plus_kernel_inverse(const KernelSpec& k, int order) {
  PowerSeries inv(order);
  if (k.family == KernelSpec::Family::monomial) {
    for (int m = 0; m * k.n <= order; ++m)
      inv[m * k.n] = std::polar(1.0, k.theta * m) * ((m % 2 == 0) ? 1.0 : -1.0);
  } else {
    inv[0] = 1.0 / (1.0 + k.b);
    for (int j = 1; j <= order; ++j) inv[j] = (1.0 - k.b) / (1.0 + k.b);
  }
  return inv;
}

/// Multiplies by 1/(1-z)^2, i.e. a double cumulative sum of coefficients.
PowerSeries times_inv_one_minus_z_squared(const PowerSeries& a) {
  PowerSeries out(a.order());
  Complex s1{0.0}, s2{0.0};
  for (int k = 0; k <= a.order(); ++k) {
    s1 += a.coeff(k);
    s2 += s1;
    out[k] = s2;
  }
  return out;
}

PowerSeries half_plane_target(int order) {  // z/(1-z)
  PowerSeries s(order);
  for (int k = 1; k <= order; ++k) s[k] = 1.0;
  return s;
}

bool is_half_plane_shear(const HarmonicMap& f) {
  for (int k = 1; k <= f.order(); ++k)
    if (std::abs(f.h.coeff(k) + f.g.coeff(k) - 1.0) > 1e-10) return false;
  return true;
}

}  // namespace

HarmonicMap shear_half_plane(const KernelSpec& omega, int truncation_order) {
  if (truncation_order < 8) throw error("shear_half_plane: truncation order must be >= 8");
  const int N = truncation_order;
  const PowerSeries hp =
      times_inv_one_minus_z_squared(one_plus_kernel_inverse(omega, N - 1));
  PowerSeries h(N);
  for (int k = 1; k <= N; ++k) h[k] = hp.coeff(k - 1) / static_cast<double>(k);
  const PowerSeries g = half_plane_target(N) - h;
  ClosedForm tag;
  tag.tag = ClosedFormTag::sheared;
  tag.kernel = omega;
  return HarmonicMap(std::move(h), g, std::move(tag));
}

HarmonicMap f_a_closed_form(double a, int truncation_order) {
  if (std::abs(a) >= 1.0) throw error("f_a_closed_form: |a| < 1 required");
  const int N = truncation_order;
  PowerSeries h(N);
  for (int k = 1; k <= N; ++k)
    h[k] = (k + 1.0 - a * (k - 1.0)) / (2.0 * (1.0 + a));
  const PowerSeries g = half_plane_target(N) - h;
  ClosedForm tag;
  tag.tag = (a == 0.0) ? ClosedFormTag::f_zero : ClosedFormTag::f_a;
  tag.a = a;
  return HarmonicMap(std::move(h), g, std::move(tag));
}

HarmonicMap convolve(const HarmonicMap& F, const HarmonicMap& f) {
  const int N = std::min(F.order(), f.order());
  PowerSeries h(N), g(N);
  for (int k = 0; k <= N; ++k) {
    h[k] = F.h.coeff(k) * f.h.coeff(k);
    g[k] = F.g.coeff(k) * f.g.coeff(k);
  }
  return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap convolve_half_plane_pair(double a, const HarmonicMap& f) {
  if (std::abs(a) >= 1.0) throw error("convolve_half_plane_pair: |a| < 1 required");
  if (!is_half_plane_shear(f))
    throw error("convolve_half_plane_pair: map does not satisfy h + g = z/(1-z)");
  const double c = (1.0 - a) / (1.0 + a);
  const int N = f.order();
  PowerSeries h(N), g(N);
  for (int k = 1; k <= N; ++k) {
    h[k] = 0.5 * (1.0 + c * k) * f.h.coeff(k);
    g[k] = 0.5 * (1.0 - c * k) * f.g.coeff(k);
  }
  return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap renormalized(const HarmonicMap& f) {
  const Complex hp0 = f.h.coeff(1);
  if (std::abs(hp0) < 1e-12) throw error("renormalized: h'(0) too small");
  return HarmonicMap((1.0 / hp0) * f.h, (1.0 / hp0) * f.g, f.closed_form);
}

Complex dilatation_general(double a, Complex w, Complex w_prime, Complex z) {
  const Complex shared = z * w_prime * (a - 1.0) * (1.0 - z);
  const Complex num = 2.0 * w * (a - z) * (1.0 + w) + shared;
  const Complex den = 2.0 * (1.0 - a * z) * (1.0 + w) + shared;
  if (std::abs(den) < 1e-12)
    throw numerical_error("dilatation_general: singular point, denominator below threshold");
  return num / den;
}

Complex dilatation_general(double a, const KernelSpec& omega, Complex z) {
  if (std::abs(a) >= 1.0) throw error("dilatation_general: |a| < 1 required");
  return dilatation_general(a, omega.value(z), omega.derivative(z), z);
}

std::function<Complex(Complex)> dilatation_general(double a, const KernelSpec& omega) {
  if (std::abs(a) >= 1.0) throw error("dilatation_general: |a| < 1 required");
  return [a, omega](Complex z) { return dilatation_general(a, omega, z); };
}

Complex DilatationRational::value(Complex z) const {
  const Complex den = denominator(z);
  if (std::abs(den) < 1e-12)
    throw numerical_error("DilatationRational: denominator below threshold");
  return phase * std::pow(z, monomial_power) * numerator(z) / den;
}

DilatationRational dilatation_monomial(double a, int n, double theta) {
  if (std::abs(a) >= 1.0) throw error("dilatation_monomial: |a| < 1 required");
  if (n < 1) throw error("dilatation_monomial: n must be >= 1");
  theta = normalize_angle(theta);
  const Complex em = std::polar(1.0, -theta);
  std::vector<Complex> p(static_cast<std::size_t>(n) + 2);
  p[n + 1] += 1.0;
  p[n] += -a;
  p[1] += 0.5 * (2.0 + a * n - n) * em;  // indices 1 and n coincide when n = 1
  p[0] += 0.5 * (n - 2.0 * a - a * n) * em;
  DilatationRational d;
  d.phase = -std::polar(1.0, 2.0 * theta);
  d.monomial_power = n;
  d.numerator = ComplexPolynomial(std::move(p));
  d.denominator = conjugate_reciprocal(d.numerator, n + 1);
  return d;
}

DilatationRational dilatation_mobius(double a, double b) {
  if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
    throw error("dilatation_mobius: |a| < 1 and |b| < 1 required");
  DilatationRational d;
  d.phase = Complex{1.0};
  d.monomial_power = 0;
  d.numerator = ComplexPolynomial({Complex{a * b}, Complex{0.5 * (a * b - 3.0 * a - 3.0 * b + 1.0)},
                                   Complex{1.0}});
  d.denominator = conjugate_reciprocal(d.numerator, 2);
  return d;
}

Complex series_dilatation_eval(const HarmonicMap& f, Complex z) {
  if (std::abs(z) > kSeriesRadiusCap + 1e-15)
    throw error("series_dilatation_eval: evaluation radius exceeded");
  const Complex hp = f.h.derivative().evaluate(z);
  if (std::abs(hp) < 1e-12)
    throw numerical_error("series_dilatation_eval: critical point, |h'(z)| below threshold");
  return f.g.derivative().evaluate(z) / hp;
}

int truncation_for_radius(double r) {
  for (int N : {kDefaultTruncation, 2048, 4096}) {
    // Tail of a quadratically-growing coefficient sequence at radius r;
    // convolution coefficients grow like k^2.
    const double log_tail = N * std::log(std::max(1e-9, r)) + 2.0 * std::log(static_cast<double>(N));
    if (log_tail < std::log(1e-10)) return N;
  }
  return 32768;
}

}  // namespace hconv
