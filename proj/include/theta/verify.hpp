#pragma once

// The finite case analysis showing that, for 3 <= k <= 8, the all-2 theta
// graph maximizes rho among k-ary theta graphs; and the published table of
// rho with its three upper bounds.

#include <array>
#include <string>
#include <vector>

#include "theta/bounds.hpp"

namespace theta {

struct Comparison {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  ///< lhs < rhs
};

struct TheoremCertificate {
  int k = 0;
  std::vector<Comparison> comparisons;
  bool overall = false;  ///< every comparison holds
};

/// Requires 3 <= k <= 8. Compares the named frontier cases against
/// rho(2,...,2), and spot-checks that rtilde decreases when a frontier
/// length grows. Solver failures are rethrown with the case label.
TheoremCertificate verify_theorem_k(int k);

/// Why the argument stops at k = 9: rtilde(2^(k-1)), the limit of
/// rtilde(2,...,2,s) as s grows, already exceeds rho(2^k).
struct LimitObstruction {
  int k = 0;
  double rtilde_limit = 0.0;  ///< rtilde of k-1 paths of length 2
  double rho_all_two = 0.0;   ///< rho of k paths of length 2
  bool obstructs = false;     ///< rtilde_limit > rho_all_two
};

LimitObstruction limit_obstruction(int k);

struct Table1Row {
  std::vector<int> paths;
  std::array<double, 4> printed;  ///< rho, r, rtilde, calR
};

/// The 35 published rows, k = 3..9.
const std::vector<Table1Row>& table1_rows();

inline constexpr double kTable1Tolerance = 5e-10;

struct Table1Check {
  Table1Row row;
  BoundReport computed;
  std::array<double, 4> deviation{};  ///< |computed - printed| per column
  bool ok = false;
};

Table1Check check_table1_row(const Table1Row& row, double tolerance = kDefaultRootTolerance);

/// Every row, in table order.
std::vector<Table1Check> reproduce_table1(double tolerance = kDefaultRootTolerance);

}  // namespace theta
