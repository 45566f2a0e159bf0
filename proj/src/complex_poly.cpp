#include "hconv/complex_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hconv {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
  double mx = 0.0;
  for (const Complex& c : coeffs_) mx = std::max(mx, std::abs(c));
  const double trim = kTrailingTrim * std::max(1.0, mx);
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= trim) coeffs_.pop_back();
  if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= trim) coeffs_[0] = Complex{0.0};
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};  // ascending; multiply one factor (z - r) at a time
  for (const Complex& r : roots) {
    c.push_back(Complex{0.0});
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] = -r * c[0];
  }
  return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::scale() const {
  double mx = 0.0;
  for (const Complex& c : coeffs_) mx = std::max(mx, std::abs(c));
  return mx;
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (std::size_t j = coeffs_.size() - 1; j > 0; --j) acc = acc * z + coeffs_[j - 1];
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (degree() == 0) return ComplexPolynomial{};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial conjugate_reciprocal(const ComplexPolynomial& p, int n_ref) {
  if (n_ref < p.degree())
    throw error("conjugate_reciprocal: reference degree below degree of the polynomial");
  std::vector<Complex> q(static_cast<std::size_t>(n_ref) + 1);
  for (int j = 0; j <= n_ref; ++j) q[j] = std::conj(p.coeff(n_ref - j));
  return ComplexPolynomial(std::move(q));
}

bool cohn_reducible(const ComplexPolynomial& t) {
  if (t.degree() < 1) return false;
  const double a0 = std::abs(t.coeff(0));
  const double ad = std::abs(t.coeff(t.degree()));
  return ad - a0 > kCohnMargin * std::max(1.0, ad);
}

ComplexPolynomial cohn_reduce(const ComplexPolynomial& t) {
  if (!cohn_reducible(t))
    throw error("cohn_reduce: |a_0| < |a_d| does not hold strictly");
  const int d = t.degree();
  const Complex lead = t.coeff(d);
  const Complex a0 = t.coeff(0);
  const ComplexPolynomial ts = conjugate_reciprocal(t, d);
  std::vector<Complex> num(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) num[j] = std::conj(lead) * t.coeff(j) - a0 * ts.coeff(j);
  // conj(a_d) a_0 - a_0 conj(a_d) cancels identically; anything else is a bug.
  if (std::abs(num[0]) > 1e-12 * std::max(1.0, t.scale()))
    throw numerical_error("cohn_reduce: constant term failed to cancel");
  num.erase(num.begin());
  ComplexPolynomial t1(std::move(num));
  if (t1.degree() != d - 1)
    throw numerical_error("cohn_reduce: degree did not drop by exactly one");
  return t1;
}

namespace {

void classify_roots(const std::vector<Complex>& roots, ZeroLocationReport& rep) {
  for (const Complex& r : roots) {
    const double m = std::abs(r);
    if (std::abs(m - 1.0) <= kUnitCircleTol)
      ++rep.on_circle;
    else if (m < 1.0)
      ++rep.inside;
    else
      ++rep.outside;
  }
}

ZeroVerdict verdict_from_counts(const ZeroLocationReport& rep) {
  if (rep.inside == rep.degree) return ZeroVerdict::all_inside;
  if (rep.outside > 0) return ZeroVerdict::has_outside;
  return ZeroVerdict::boundary_cases;
}

}  // namespace

CohnChainResult cohn_chain(const ComplexPolynomial& t) {
  CohnChainResult res;
  res.report.degree = t.degree();
  res.report.method = ZeroMethod::cohn_chain;
  res.chain.push_back(t);
  ComplexPolynomial cur = t;
  while (cur.degree() >= 1 && cohn_reducible(cur)) {
    cur = cohn_reduce(cur);
    res.chain.push_back(cur);
    ++res.report.inside;  // r_1 = r - 1 per reduction
  }
  if (cur.degree() >= 1) classify_roots(find_roots(cur), res.report);
  res.report.verdict = verdict_from_counts(res.report);
  return res;
}

SchurCohnMatrices schur_cohn_matrix(const ComplexPolynomial& p, int k) {
  const int d = p.degree();
  if (k < 1 || k > d) throw error("schur_cohn_matrix: k out of range");
  SchurCohnMatrices m;
  m.k = k;
  m.A = Matrix(k);
  m.B = Matrix(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      m.A(i, j) = p.coeff(j - i);
      m.B(i, j) = std::conj(p.coeff(d - (j - i)));
    }
  m.block = Matrix(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      m.block(i, j) = std::conj(m.B(j, i));          // conj(B)^T
      m.block(i, k + j) = m.A(i, j);                 // A
      m.block(k + i, j) = std::conj(m.A(j, i));      // conj(A)^T
      m.block(k + i, k + j) = m.B(i, j);             // B
    }
  return m;
}

Complex determinant(Matrix m) {
  const int n = m.size();
  if (n == 0) return Complex{1.0};
  Complex det{1.0};
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(m(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) return Complex{0.0};
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = m(r, col) / m(col, col);
      for (int c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<double> schur_cohn_determinants(const ComplexPolynomial& p) {
  if (p.degree() < 1) throw error("schur_cohn_determinants: degree must be >= 1");
  std::vector<double> out;
  out.reserve(p.degree());
  for (int k = 1; k <= p.degree(); ++k) {
    const Complex det = determinant(schur_cohn_matrix(p, k).block);
    if (std::abs(det.imag()) > 1e-9 * (1.0 + std::abs(det)))
      throw numerical_error("schur_cohn_determinants: determinant has a non-real part");
    out.push_back(det.real());
  }
  return out;
}

Complex schur_cohn_determinant_complement(const ComplexPolynomial& p, int k) {
  const SchurCohnMatrices m = schur_cohn_matrix(p, k);
  // Invert the upper-triangular B by back substitution, column by column.
  Matrix binv(k);
  for (int col = 0; col < k; ++col) {
    for (int i = k - 1; i >= 0; --i) {
      Complex rhs = (i == col) ? Complex{1.0} : Complex{0.0};
      for (int j = i + 1; j < k; ++j) rhs -= m.B(i, j) * binv(j, col);
      binv(i, col) = rhs / m.B(i, i);
    }
  }
  Matrix s(k);  // conj(B)^T - A B^{-1} conj(A)^T
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Complex abat{0.0};
      for (int r = 0; r < k; ++r) {
        Complex br{0.0};
        for (int c = 0; c < k; ++c) br += binv(r, c) * std::conj(m.A(j, c));
        abat += m.A(i, r) * br;
      }
      s(i, j) = std::conj(m.B(j, i)) - abat;
    }
  Complex detb{1.0};
  for (int i = 0; i < k; ++i) detb *= m.B(i, i);
  return detb * determinant(std::move(s));
}

std::vector<Complex> find_roots(const ComplexPolynomial& p) {
  if (p.degree() < 1) throw error("find_roots: degree must be >= 1");
  const double scale = p.scale();
  std::vector<Complex> c = p.coeffs();
  std::vector<Complex> roots;

  // Exact zeros at the origin deflate immediately.
  while (c.size() > 1 && c.front() == Complex{0.0}) {
    roots.push_back(Complex{0.0});
    c.erase(c.begin());
  }
  const int d = static_cast<int>(c.size()) - 1;
  if (d >= 1) {
    double radius = 0.0;
    for (int j = 0; j < d; ++j) radius = std::max(radius, std::abs(c[j] / c[d]));
    radius += 1.0;
    // Fixed irrational rotation so symmetric polynomials do not start on a
    // symmetry axis of their root set.
    constexpr double kRotation = 0.6180339887498949;
    std::vector<Complex> z(d);
    for (int i = 0; i < d; ++i)
      z[i] = std::polar(radius, 2.0 * std::numbers::pi * i / d + kRotation);

    std::vector<Complex> dc(d);
    for (int j = 1; j <= d; ++j) dc[j - 1] = static_cast<double>(j) * c[j];

    const auto horner = [](const std::vector<Complex>& a, Complex x) {
      Complex acc = a.back();
      for (std::size_t j = a.size() - 1; j > 0; --j) acc = acc * x + a[j - 1];
      return acc;
    };

    bool converged = false;
    for (int sweep = 0; sweep < 1000 && !converged; ++sweep) {
      converged = true;
      for (int i = 0; i < d; ++i) {
        const Complex pv = horner(c, z[i]);
        Complex dv = horner(dc, z[i]);
        if (dv == Complex{0.0}) dv = Complex{1e-30};
        const Complex w = pv / dv;
        Complex s{0.0};
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          Complex diff = z[i] - z[j];
          if (diff == Complex{0.0}) diff = Complex{1e-30};
          s += 1.0 / diff;
        }
        const Complex denom = 1.0 - w * s;
        const Complex step = (denom == Complex{0.0}) ? w : w / denom;
        z[i] -= step;
        if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
      }
    }
    for (int i = 0; i < d; ++i) {
      // Backward-stable residual bound: for |root| >> 1 the evaluation
      // itself is conditioned like sum |a_j||z|^j, so an absolute bound on
      // |p(root)| is not representable in doubles.
      double eval_scale = std::abs(c[d]);
      for (int j = d; j-- > 0;) eval_scale = eval_scale * std::abs(z[i]) + std::abs(c[j]);
      if (std::abs(horner(c, z[i])) > 1e-10 * std::max(scale, eval_scale))
        throw numerical_error("find_roots: residual above tolerance after 1000 sweeps");
      roots.push_back(z[i]);
    }
  }
  return roots;
}

ZeroLocationReport count_zeros_unit_disk(const ComplexPolynomial& p, ZeroMethod mode) {
  if (p.degree() < 1) throw error("count_zeros_unit_disk: degree must be >= 1");
  ZeroLocationReport rep;
  rep.degree = p.degree();

  if (mode == ZeroMethod::cohn_chain) return cohn_chain(p).report;

  if (mode == ZeroMethod::schur_cohn || mode == ZeroMethod::auto_select) {
    std::vector<double> dets = schur_cohn_determinants(p);
    const bool all_positive =
        std::all_of(dets.begin(), dets.end(), [](double m) { return m > kInconclusiveDet; });
    if (all_positive) {
      rep.inside = rep.degree;
      rep.determinants = std::move(dets);
      rep.method = ZeroMethod::schur_cohn;
      rep.verdict = ZeroVerdict::all_inside;
      return rep;
    }
    // A vanishing M_k is inconclusive (boundary zeros make the block
    // singular) and a negative one only certifies "not all inside";
    // either way the oracle supplies the counts.
  }

  classify_roots(find_roots(p), rep);
  rep.method = ZeroMethod::root_oracle;
  rep.verdict = verdict_from_counts(rep);
  return rep;
}

ComplexPolynomial factor_out_root(const ComplexPolynomial& p, Complex z0) {
  const int d = p.degree();
  if (d < 1) throw error("factor_out_root: degree must be >= 1");
  const double scale = std::max(1e-300, p.scale());
  if (std::abs(p(z0)) > 1e-9 * scale)
    throw error("factor_out_root: given point is not a root");
  std::vector<Complex> q(static_cast<std::size_t>(d));
  Complex carry = p.coeff(d);
  for (int j = d - 1; j >= 0; --j) {
    q[j] = carry;
    carry = p.coeff(j) + z0 * carry;
  }
  ComplexPolynomial out(std::move(q));
  // p must reconstruct as (z - z0) q to coefficient tolerance.
  for (int j = 0; j <= d; ++j) {
    const Complex rebuilt = (j > 0 ? out.coeff(j - 1) : Complex{0.0}) - z0 * out.coeff(j);
    if (std::abs(rebuilt - p.coeff(j)) > 1e-10 * scale)
      throw numerical_error("factor_out_root: deflation residual above tolerance");
  }
  return out;
}

namespace {

double parse_double_strict(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw error("parse_complex: bad number '" + s + "'");
  }
  if (pos != s.size()) throw error("parse_complex: trailing characters in '" + s + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw error("parse_complex: empty literal");

  if (s.back() != 'i' && s.back() != 'I') return Complex{parse_double_strict(s), 0.0};

  s.pop_back();  // strip the trailing i
  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t j = s.size(); j-- > 1;) {
    if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
      split = j;
      break;
    }
  }
  if (split == std::string::npos) {
    if (s.empty() || s == "+") return Complex{0.0, 1.0};
    if (s == "-") return Complex{0.0, -1.0};
    return Complex{0.0, parse_double_strict(s)};
  }
  const std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex{parse_double_strict(re), parse_double_strict(im)};
}

ComplexPolynomial parse_polynomial(const std::string& text) {
  std::vector<Complex> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_complex(item));
  if (coeffs.empty()) throw error("parse_polynomial: no coefficients");
  return ComplexPolynomial(std::move(coeffs));
}

}  // namespace hconv
