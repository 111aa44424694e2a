#pragma once

// Lambert W: the inverse of w -> w e^w. Branches are numbered as in
// Corless, Gonnet, Hare, Jeffrey and Knuth (1996), with branch cuts closed
// under counterclockwise continuity.

#include <cstdint>

#include "theta/polyalg.hpp"

namespace theta {

struct WValue {
  int branch = 0;
  Complex argument;
  Complex value;
  /// |w e^w - x|
  double residual = 0.0;
  /// Set near the branch point -1/e, where the residual bound is not promised.
  bool reduced_accuracy = false;
};

inline constexpr int kHalleyIterations = 60;

/// Principal real branch on [-1/e, inf).
double w_real(double x);

/// Branch `branch` at complex x != 0. Throws ConvergenceError when Halley
/// fails to reach |w e^w - x| <= 1e-13 (1 + |x|) away from the branch point.
WValue w_complex(Complex x, int branch);

/// W evaluated on the Riemann surface of the logarithm: the argument is
/// exp(log_modulus + i*arg) with arg unreduced, and the branch is the one
/// continuous with log W ~ log x for large |x|. Equivalent to
/// w_complex(x, branch + n) where arg = principal(arg) + 2 pi n.
WValue w_on_log_surface(double log_modulus, double arg, int branch = 0);

/// Signed Stirling numbers of the first kind s(n, m), 0 <= m <= n <= 8.
std::int64_t stirling_first(int n, int m);

/// log x - loglog x + sum_{n=1..terms} sum_{j=1..n} (-1)^(n+1) s(n, n-j+1)/j!
///   (loglog x)^j / (log x)^n.
/// Requires x > e and 0 <= terms <= 6.
double w_asymptotic(double x, int terms);

/// log x - loglog x < W(x) < log x, strictly, for x > e.
bool sandwich_lemma_check(double x);

}  // namespace theta
