#pragma once

// Polynomials attached to the generalized theta graph: two endvertices joined
// by k internally disjoint paths of lengths s_1..s_k.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "theta/polyalg.hpp"

namespace theta {

/// Multiset of path lengths, kept sorted ascending. Every length is >= 1.
class PathLengths {
 public:
  explicit PathLengths(std::vector<int> lengths);

  /// Parses "2,2,3" (whitespace tolerated). Throws DomainError on bad input.
  static PathLengths parse(std::string_view text);
  /// k copies of length s.
  static PathLengths uniform(int s, int k);

  std::span<const int> lengths() const { return s_; }
  int k() const { return static_cast<int>(s_.size()); }
  int operator[](std::size_t i) const { return s_[i]; }
  int total_length() const;
  /// Endvertices plus internal path vertices.
  int vertex_count() const;
  /// k >= 3 and every length >= 2: the regime the bound polynomials assume.
  bool nondegenerate() const;

  /// A copy with one more path of length s.
  PathLengths with_extra(int s) const;
  /// A copy with lengths[i] incremented (the result is re-sorted).
  PathLengths incremented(std::size_t i) const;

  /// "(2, 2, 3)"
  std::string to_string() const;

  friend bool operator==(const PathLengths&, const PathLengths&) = default;

 private:
  std::vector<int> s_;
};

/// Chromatic polynomial of the theta graph, in z.
IntPolynomial chromatic_polynomial(const PathLengths& paths);

/// f(y) = prod(y^s_i - 1) - y^-1 prod(y^s_i - y), with y = 1 - z.
IntPolynomial f_polynomial(const PathLengths& paths);

/// f / (y - 1), built from the subset-sum closed form. Requires the
/// nondegenerate regime.
IntPolynomial phi_polynomial(const PathLengths& paths);

/// phi with every subleading coefficient replaced by -|coefficient|.
IntPolynomial h_polynomial(const PathLengths& paths);

/// The subset-sum form of phi with all sign cancellation dropped.
IntPolynomial htilde_polynomial(const PathLengths& paths);

/// Number of subsets of the path lengths, by size m and sum d:
/// counts[m][d]. Built from the product of (1 + t y^s_i) graded by t.
std::vector<std::vector<BigInt>> subset_sum_counts(const PathLengths& paths);

inline constexpr int kBruteForceMaxVertices = 16;
inline constexpr int kBruteForceMaxColors = 6;

/// Counts proper z-colorings by enumeration. Throws BudgetExceeded beyond
/// 16 vertices or 6 colors.
std::uint64_t brute_force_chromatic(const PathLengths& paths, int z);

}  // namespace theta
