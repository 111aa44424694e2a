#pragma once

// The trinomial (z-2)^k - lambda (z-1)^(k-1) = 0. At lambda = -1 its roots
// are the nontrivial chromatic roots of K_{2,k}. Under zeta = (z-1)/(z-2) it
// becomes zeta^k - zeta^(k-1) - lambda = 0.
//
// Near zeta = 1 the roots are parametrized by w = W_b(k lambda) as
//   zeta = exp(tau (1 + xi)),  tau = w/k,  v = 1/(1 + w),
// where xi solves the fundamental equation
//   (1 - exp(-tau (1 + xi))) / tau = exp((1 - 1/v) xi).

#include <array>
#include <vector>

#include "theta/roots.hpp"

namespace theta {

inline constexpr int kMaxDenseTrinomialDegree = 2000;

Complex zeta_from_z(Complex z);
Complex z_from_zeta(Complex zeta);

struct K2kRoots {
  /// The k roots of (z-2)^k + (z-1)^(k-1); rho is max |z - 1| over them.
  RootSet roots;
  /// z = 0 and z = 1, which every K_{2,k} also has.
  std::array<Complex, 2> trivial{Complex(0.0, 0.0), Complex(1.0, 0.0)};
};

/// Chromatic roots of K_{2,k}, 2 <= k <= 2000, solved in zeta and mapped back.
K2kRoots k2k_chromatic_roots(int k);

/// Roots of zeta^k - zeta^(k-1) - lambda. All k of them for k <= 2000; for
/// larger k only the branch-0 root near zeta = 1 (theta = arg lambda), by
/// Newton from the asymptotic predictor. rho is max |zeta|.
RootSet trinomial_roots_zeta(int k, Complex lambda);

/// g_1..g_lmax (lmax <= 3) of the series xi = sum g_l(v) tau^l.
std::vector<Complex> g_coefficients(Complex v, int lmax);

/// Sum of the first `terms` series terms g_l(v) tau^l.
Complex xi_series(Complex v, Complex tau, int terms = 3);

/// log((1 - e^{-z}) / z), via -z/2 + log(sinh(z/2)/(z/2)); accurate for small z.
Complex log_one_minus_exp_ratio(Complex z);

/// |(1 - e^{-tau(1+xi)})/tau - e^{(1 - 1/v) xi}|. Requires tau, v != 0.
double fundamental_residual(Complex xi, Complex v, Complex tau);

struct RoucheTriple {
  double A = 0.0;  ///< |tau| <= A
  double B = 0.0;  ///< |v| <= B
  double R = 0.0;  ///< |xi| <= R
};

/// Found by grid search over R at A = 1/2 (maximum B is about 0.8469 at
/// R ~ 0.474), then rounded down.
inline constexpr RoucheTriple kCertifiedTriple{0.5, 0.84, 0.47};

struct RoucheCheck {
  double lhs = 0.0;
  bool ok = false;
};

/// B [A(1+R)/2 + log((A(1+R)/2)/sin(A(1+R)/2)) - log(1-R) - R] against R.
/// Requires 0 < A < 2 pi, B > 0, 0 < R < min(1, 2 pi/A - 1).
RoucheCheck rouche_condition(double A, double B, double R);

/// Largest B (and its R) admitted at fixed A, by scanning `grid` values of R.
RoucheTriple maximize_rouche_B(double A, int grid);

/// The fixed point of xi = -v [log((1 - e^{-tau(1+xi)})/(tau(1+xi))) + log(1+xi) - xi]
/// with |xi| <= triple.R, by direct iteration from g_1(v) tau. Requires
/// |tau| <= A and |v| <= B. Throws CertificateViolation if an iterate leaves
/// the disc, ConvergenceError after 200 iterations.
Complex xi_solve(Complex v, Complex tau, const RoucheTriple& triple = kCertifiedTriple);

struct AsymptoticSolution {
  int k = 0;
  double theta = 0.0;
  int branch = 0;
  Complex w;
  Complex tau;
  Complex v;
  Complex xi;  ///< three-term series
  Complex zeta_pred;
  Complex z_pred;
  Complex z_exact;
  double rel_error = 0.0;  ///< |z_pred - z_exact| / |z_exact|
  /// |xi_exact| / (|tau| |v|), the measured constant in |xi| <= C |tau| |v|.
  double xi_ratio = 0.0;
};

/// Root of (z-2)^k - e^{i theta} (z-1)^(k-1) attached to W-branch `branch`
/// of k e^{i theta}, theta taken on the Riemann surface of log. Throws
/// DomainError (naming the smallest admissible k) when (tau, v) is outside
/// the certified domain.
AsymptoticSolution asymptotic_root(int k, double theta, int branch = 0);

/// The exact root in the log variable u = log zeta: Newton on
/// (k-1) u + log(expm1(u)) = log_lambda, seeded at u0.
Complex trinomial_log_root(int k, Complex log_lambda, Complex u0);

/// Leading-order closed form k/(log k - loglog k) (1 - i theta/log k).
Complex leading_order_root(int k, double theta);

struct LocusPoint {
  double theta = 0.0;
  Complex zeta;
  Complex z;
  int lambda_flag = 0;  ///< +1 at lambda = 1, -1 at lambda = -1, else 0
};

/// All k roots for each lambda = e^{i theta}, theta = 2 pi j / samples.
/// Requires 2 <= k <= 2000 and samples >= 16.
std::vector<LocusPoint> locus(int k, int samples);

}  // namespace theta
