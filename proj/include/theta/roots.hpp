#pragma once

#include <functional>
#include <vector>

#include "theta/polyalg.hpp"

namespace theta {

/// All roots of one polynomial, with multiplicity.
struct RootSet {
  std::vector<Complex> roots;
  /// |p(root)| / sum_j |a_j| |root|^j, evaluated on the input polynomial.
  std::vector<double> residuals;
  /// max |root|. In the y variable this is max |z - 1|.
  double rho = 0.0;

  std::size_t size() const { return roots.size(); }
  double max_residual() const;
};

struct AberthOptions {
  int max_iterations = 500;
  /// Stop once every correction is below this, relative to max(1, |root|).
  double update_tolerance = 1e-14;
  int polish_steps = 3;
  /// Every scaled residual must end up below this.
  double residual_tolerance = 1e-8;
};

/// Cauchy radius: the positive root of |a_n| R^n - sum_{j<n} |a_j| R^j.
/// Every root of p lies in |y| <= cauchy_bound(p).
double cauchy_bound(const IntPolynomial& p);

/// Every complex root. Integer roots 0, 1 and -1 are first removed exactly
/// (with multiplicity); the rest come from Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing with compensated evaluation.
/// Throws ConvergenceError if the iteration cap is hit or a residual stays
/// above tolerance.
RootSet all_roots(const IntPolynomial& p, const AberthOptions& options = {});

/// Aberth-Ehrlich on double coefficients (lowest degree first). Used for
/// sparse or structured polynomials whose coefficients are not integers.
std::vector<Complex> aberth(const std::vector<Complex>& coeffs, const std::vector<Complex>& start,
                            const AberthOptions& options = {});

inline constexpr double kDefaultRootTolerance = 1e-12;

/// The unique positive root of a polynomial whose coefficient sequence has
/// exactly one sign change: positive leading coefficient, every other
/// coefficient <= 0, at least one < 0. Throws DomainError otherwise.
double unique_positive_root(const IntPolynomial& p, double tolerance = kDefaultRootTolerance);

/// Bisection on a function with fn(lo) > 0 > fn(hi) (decreasing minus
/// increasing, so the sign change is unique). Returns the midpoint of the
/// final bracket. Throws DomainError on an invalid bracket.
double bracketed_monotone_root(const std::function<double(double)>& fn, double lo, double hi,
                               double width = 1e-13);

}  // namespace theta
