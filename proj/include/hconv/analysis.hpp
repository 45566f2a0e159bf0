#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hconv/complex_poly.hpp"
#include "hconv/harmonic.hpp"

namespace hconv {

/// The verifiable statements; tokens are the wire names used by the CLI and
/// the JSON documents.
enum class Statement {
  monomial_family,   // "thm22": f_a * f_n locally univalent for a >= (n-2)/(n+2)
  moebius_pair,      // "thm24": f_a * f_b for b >= -(1+3a)/(3+a)
  self_convolution,  // "cor25": f_a * f_a for a >= -3+2sqrt(2)
  zero_shift,        // "remark22": a = 0 works exactly for n in {1,2}
  counterexample,    // "example23": n=1, a=-0.34, theta=pi fails
};
std::string statement_token(Statement s);

enum class VerifyBranch { generic, identity_boundary, odd_pi_chain, schur_cohn };
std::string branch_token(VerifyBranch b);

/// A point where the convolution dilatation exceeds unit modulus.
struct ModulusWitness {
  Complex z;
  double modulus = 0.0;
};

struct TheoremVerdict {
  Statement statement = Statement::monomial_family;
  std::vector<std::pair<std::string, double>> params;
  VerifyBranch branch = VerifyBranch::generic;
  bool pass = false;
  std::vector<ModulusWitness> witnesses;       // filled on failure
  std::vector<double> determinants;            // Schur-Cohn branch only
  double max_modulus = 0.0;                    // grid maximum of |dilatation|
  std::vector<ZeroLocationReport> reports;
};

/// Closed form for the Schur-Cohn determinant M_k of the monomial-kernel
/// convolution polynomial:
///   k <= n:   (1/4)^k n^{k-1} (n+2k) (2-n+2a+an)^k (1-a)^k
///   k = n+1:  (1/4)^{n+1} n^n (1-a)^{n+1} (2-n+2a+an)^{n+1} (4+4 cos theta)
/// For n = 1 the two k values reduce to 3/4 (1-a)(1+3a) and
/// 1/2 (1-a)^2 (1+3a)^2 cos^2(theta/2).
double closed_form_determinant(int n, double a, double theta, int k);

struct ScanResult {
  double max_modulus = 0.0;
  Complex argmax{0.0};
  int skipped = 0;  // grid points where the denominator was singular
};

/// Maximum of |d(z)| over a polar grid; singular grid points are skipped
/// and counted.
ScanResult scan_modulus(const DilatationRational& d, const PolarGrid& grid = {});

/// Grid scan of the monomial-kernel convolution dilatation in rational form.
ScanResult counterexample_scan(double a, int n, double theta, const PolarGrid& grid = {});

/// Verifies that f_a * f_n is locally univalent and sense-preserving, i.e.
/// all zeros of the dilatation numerator lie in the closed unit disk.
///
/// Dispatch: a at the boundary (n-2)/(n+2) -> coefficient identity
/// p = e^{-i theta} p*; theta = pi (mod 2pi) -> factor out z = 1 and run the
/// Cohn chain on the cofactor, whose terminal zero must be -2/(3n-2) for
/// n >= 2 (-(1-3a)/2 for n = 1); otherwise -> Schur-Cohn determinants, all
/// positive and matching closed_form_determinant to relative 1e-8.
/// A rational grid scan is always recorded; failures carry witnesses.
TheoremVerdict verify_monomial_convolution(int n, double a, double theta);

/// Verifies f_a * f_b via one Cohn reduction of m(z): its zero
/// z0 = (3/2)(a+b)/(1+ab) - 1/2 must satisfy |z0| <= 1, cross-checked by the
/// independent zero location of m. Passes exactly when b >= -(1+3a)/(3+a)
/// (with 1e-12 slack at equality).
TheoremVerdict verify_moebius_convolution(double a, double b);

/// Self-convolution f_a * f_a: delegates to verify_moebius_convolution(a, a)
/// and additionally locates the pass/fail threshold by bisection, asserting
/// it equals -3+2sqrt(2) within 1e-10. The located value is recorded in
/// params under "threshold".
TheoremVerdict verify_self_convolution(double a);

/// Bisection for the a where verify_moebius_convolution(a, a) flips.
double self_convolution_threshold(double tol = 1e-10);

/// The fixed failing configuration n=1, a=-0.34, theta=pi: the rational
/// dilatation must equal -z (z^2+0.01z-1.01)/(1+0.01z-1.01z^2) to 1e-12 and
/// the grid scan must exceed unit modulus. pass = counterexample confirmed.
TheoremVerdict verify_counterexample();

/// a = 0 sharpness: n in {1,2} pass for 8 sampled theta; n = 3, theta = pi
/// exceeds unit modulus on the grid. pass = both observations hold.
TheoremVerdict verify_zero_shift_family();

/// Maximum pairwise discrepancy among the three dilatation routes (pointwise
/// kernel formula, rational closed form, series g'/h' of the convolution) at
/// random points |z| <= 0.7, truncation kDefaultTruncation.
double consistency_check(double a, const KernelSpec& kernel, int points,
                         std::uint64_t seed = 0x5eedULL);

}  // namespace hconv
