#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hconv {

using Complex = std::complex<double>;

class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation cannot vouch for its own result (root solver
/// failed to converge, a determinant that must be real is not, ...).
/// Callers must not swallow it and continue with the bad value.
class numerical_error : public error {
  using error::error;
};

/// Trailing coefficients with magnitude below this (relative to the largest
/// coefficient) are trimmed; defines the canonical degree. Series-derived
/// polynomials carry float dust in the high-order terms.
inline constexpr double kTrailingTrim = 1e-14;

/// A root rho counts as "on" the unit circle when ||rho|-1| <= this.
inline constexpr double kUnitCircleTol = 1e-8;

/// |M_k| at or below this is treated as an inconclusive sign and triggers
/// the root-oracle fallback.
inline constexpr double kInconclusiveDet = 1e-12;

/// Margin for the strict |a_0| < |a_d| precondition of a Cohn reduction.
inline constexpr double kCohnMargin = 1e-12;

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  static Matrix identity(int n);

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

/// Polynomial with complex coefficients, stored in ascending powers.
/// Canonical form: the leading coefficient is nonzero unless the polynomial
/// is identically zero (see kTrailingTrim).
class ComplexPolynomial {
 public:
  ComplexPolynomial() : coeffs_{Complex{0.0}} {}
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  static ComplexPolynomial from_roots(std::span<const Complex> roots,
                                      Complex leading = Complex{1.0});

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0}; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// Coefficient of z^j; zero beyond the degree.
  Complex coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : Complex{0.0};
  }
  /// Largest coefficient magnitude (0 for the zero polynomial).
  double scale() const;

  Complex operator()(Complex z) const;
  ComplexPolynomial derivative() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation of p at z.
inline Complex evaluate(const ComplexPolynomial& p, Complex z) { return p(z); }

/// z^n_ref * conj(p(1/conj(z))): reverses and conjugates the coefficients
/// relative to the reference degree n_ref (>= degree of p).
ComplexPolynomial conjugate_reciprocal(const ComplexPolynomial& p, int n_ref);

/// True when the strict precondition |a_0| < |a_d| holds with margin.
bool cohn_reducible(const ComplexPolynomial& t);

/// One Cohn reduction step: (conj(a_d) t(z) - a_0 t*(z)) / z, of degree d-1.
/// Requires cohn_reducible(t); the constant term of the numerator vanishes
/// identically and is asserted below 1e-12 * scale before dividing by z.
ComplexPolynomial cohn_reduce(const ComplexPolynomial& t);

enum class ZeroMethod { schur_cohn, cohn_chain, root_oracle, auto_select };
enum class ZeroVerdict { all_inside, boundary_cases, has_outside };

struct ZeroLocationReport {
  int degree = 0;
  int inside = 0;
  int on_circle = 0;
  int outside = 0;
  std::vector<double> determinants;  // empty when the oracle path was used
  ZeroMethod method = ZeroMethod::root_oracle;
  ZeroVerdict verdict = ZeroVerdict::all_inside;
};

struct CohnChainResult {
  /// chain[0] is the input; each later entry is one reduction of the previous.
  std::vector<ComplexPolynomial> chain;
  ZeroLocationReport report;
};

/// Iterated Cohn reductions. Each successful reduction accounts for exactly
/// one zero inside the unit circle; when the chain reaches degree 0 or the
/// strict precondition fails, the remaining zeros of the residual are
/// resolved with find_roots.
CohnChainResult cohn_chain(const ComplexPolynomial& t);

struct SchurCohnMatrices {
  int k = 0;
  Matrix A;      // upper triangular, (i,j) = a_{j-i}
  Matrix B;      // upper triangular, (i,j) = conj(a_{d-(j-i)}), d = degree
  Matrix block;  // 2k x 2k block matrix [conj(B)^T, A; conj(A)^T, B]
};

/// Builds the k-th pair of triangular matrices for p and assembles the
/// 2k x 2k block whose determinant is M_k. Requires 1 <= k <= degree(p).
SchurCohnMatrices schur_cohn_matrix(const ComplexPolynomial& p, int k);

/// Determinant by Gaussian elimination with partial pivoting. Takes the
/// matrix by value as scratch space. Returns 0 after pivot underflow.
Complex determinant(Matrix m);

/// M_1..M_degree for p. Each determinant must be real: an imaginary part
/// above 1e-9 * (1 + |M_k|) throws numerical_error; otherwise it is
/// discarded. All zeros of p lie strictly inside |z|=1 iff all are positive.
std::vector<double> schur_cohn_determinants(const ComplexPolynomial& p);

/// Alternate route for M_k via the Schur complement of the B block:
/// det(B_k) * det(conj(B_k)^T - A_k B_k^{-1} conj(A_k)^T). Cross-check only.
Complex schur_cohn_determinant_complement(const ComplexPolynomial& p, int k);

/// All degree(p) roots by simultaneous (Aberth-Ehrlich) iteration.
///
/// Deterministic: starting points sit equally spaced on a circle of radius
/// 1 + max|a_j/a_d|, rotated by the fixed angle 0.6180339887498949 rad to
/// break symmetry; sweeps run in index order. Exact zero constant terms are
/// deflated as roots at the origin first. Throws numerical_error if after
/// 1000 sweeps some residual exceeds 1e-10 * max(max|a_j|, sum |a_j||z|^j),
/// the attainable backward-stable bound.
std::vector<Complex> find_roots(const ComplexPolynomial& p);

/// Locates the zeros of p relative to the unit circle.
///
/// auto_select and schur_cohn try the determinant test first: all M_k
/// positive settles the report without computing any root. A non-positive
/// or inconclusive determinant (|M_k| <= kInconclusiveDet) falls back to the
/// root oracle, which also classifies boundary zeros (kUnitCircleTol).
ZeroLocationReport count_zeros_unit_disk(const ComplexPolynomial& p,
                                         ZeroMethod mode = ZeroMethod::auto_select);

/// Synthetic division of p by (z - z0). Refuses unless |p(z0)| <= 1e-9 * scale.
ComplexPolynomial factor_out_root(const ComplexPolynomial& p, Complex z0);

/// Parses "x+yi" (also plain reals, "yi", "i", "-i").
Complex parse_complex(const std::string& text);

/// Parses the comma-separated ascending-coefficient form "a0,a1,...,ad".
ComplexPolynomial parse_polynomial(const std::string& text);

}  // namespace hconv
