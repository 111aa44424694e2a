#pragma once

// Dense univariate polynomials with exact integer coefficients, plus
// binary64 complex evaluation.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Coefficients are stored lowest degree first. The zero polynomial is {0}
/// with degree 0; every other polynomial has a nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{BigInt(0)} {}
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  static IntPolynomial constant(const BigInt& c) { return monomial(c, 0); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  /// Coefficient of the y^j term; zero past the degree.
  BigInt coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }

  /// Exact value at an integer point.
  BigInt operator()(const BigInt& y) const;

  /// Largest |coefficient| rounded to double.
  double max_abs_coeff() const;

  /// Coefficients rounded to binary64.
  std::vector<double> to_double() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest degree first: "y^5 - 3y^2 - y - 1".
  std::string to_string(std::string_view var = "y") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Exact product. Multiplication by the zero polynomial gives zero.
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial power(const IntPolynomial& p, unsigned n);

struct Deflation {
  IntPolynomial quotient;
  unsigned multiplicity = 0;
};

/// Strips the maximal power of (y - root): p = (y - root)^m * quotient.
/// Requires p nonzero.
Deflation deflate_linear(const IntPolynomial& p, const BigInt& root);

/// Exact division by (y - root)^times. Throws DomainError when the remainder
/// is nonzero.
IntPolynomial divide_linear(const IntPolynomial& p, const BigInt& root, unsigned times = 1);

/// p(a + b*x) as a polynomial in x.
IntPolynomial compose_linear(const IntPolynomial& p, const BigInt& a, const BigInt& b);

/// Horner evaluation with coefficients rounded to binary64. Throws
/// EvaluationOverflow when the value is not finite.
Complex eval_complex(const IntPolynomial& p, Complex y);

struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};

/// p(y) and p'(y) in one Horner sweep.
ValueAndDerivative eval_with_derivative(const IntPolynomial& p, Complex y);

/// p(y) evaluated in double-double arithmetic (exact integer coefficients
/// split into two doubles), then rounded. Accurate to about one ulp unless the
/// polynomial is ill-conditioned beyond roughly 1e16 at y.
Complex eval_complex_compensated(const IntPolynomial& p, Complex y);

/// Sum over j of |a_j| |y|^j; the natural scale for residuals at y.
double absolute_scale(const IntPolynomial& p, double abs_y);

}  // namespace theta
