#pragma once

// Upper bounds on rho(s_1..s_k) = max |z - 1| over chromatic roots.

#include "theta/roots.hpp"
#include "theta/thetapoly.hpp"

namespace theta {

/// One row of the comparison table: the true value and its three bounds.
struct BoundReport {
  PathLengths paths;
  double rho = 0.0;     ///< max |z - 1| over chromatic roots
  double r = 0.0;       ///< positive root of h
  double rtilde = 0.0;  ///< positive root of htilde
  double calR = 0.0;    ///< fixed point of prod Xtilde_{s_i}(R) = R
};

/// (R^s + R) / (R^s - 1), the closed-form majorant of X_s(R). s >= 2, R > 1.
double xtilde(int s, double R);

struct XsSup {
  double value = 0.0;
  double angle = 0.0;  ///< maximizing arg y in [0, 2 pi)
};

/// sup over |y| = R of |(y^s - y)/(y^s - 1)|, by sampling `samples` angles
/// (at least 8s) and golden-section refinement around the three best.
XsSup xs_sup(int s, double R, int samples);

/// Unique R > 1 with prod_i Xtilde_{s_i}(R) = R. Nondegenerate paths only.
double calR(const PathLengths& paths);

/// Root of (R/(R-1))^k = R on (1, inf); equals calR of k paths of length 2.
double calR_2k(int k);

struct SandwichCheck {
  int k = 0;
  double lower = 0.0;  ///< k / W(k)
  double value = 0.0;  ///< calR_2k(k)
  double upper = 0.0;  ///< (k-1)/W(k-1) + 1
  bool ok = false;
  /// k / log k < value; vacuously true for k = 2.
  bool log_lower_ok = false;
};

SandwichCheck sandwich_check(int k);

/// max |z - 1| over all chromatic roots, for any path lengths (degenerate
/// ones included). The root z = 0 always contributes 1.
double rho(const PathLengths& paths, const AberthOptions& options = {});

/// rho, r, rtilde and calR for nondegenerate paths. Throws
/// InvariantViolation if rho <= r <= rtilde or rho <= calR fails.
BoundReport bound_report(const PathLengths& paths, double tolerance = kDefaultRootTolerance);

}  // namespace theta
