#include "theta/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BigInt IntPolynomial::operator()(const BigInt& y) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

double IntPolynomial::max_abs_coeff() const {
  BigInt best = 0;
  for (const auto& c : coeffs_) best = std::max(best, BigInt(abs(c)));
  return best.convert_to<double>();
}

std::vector<double> IntPolynomial::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = multiply(*this, o);
  return *this;
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) out << mag;
    if (d >= 1) out << var;
    if (d >= 2) out << '^' << d;
  }
  return out.str();
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial{};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial power(const IntPolynomial& p, unsigned n) {
  IntPolynomial result{1};
  IntPolynomial base = p;
  while (n > 0) {
    if (n & 1u) result = multiply(result, base);
    n >>= 1u;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

namespace {

// Synthetic division by (y - root). Returns false when the remainder is nonzero.
bool divide_once(const std::vector<BigInt>& c, const BigInt& root, std::vector<BigInt>& quotient) {
  const std::size_t n = c.size() - 1;
  if (n == 0) return c[0] == 0;
  quotient.assign(n, BigInt(0));
  quotient[n - 1] = c[n];
  for (std::size_t j = n - 1; j > 0; --j) quotient[j - 1] = c[j] + root * quotient[j];
  return c[0] + root * quotient[0] == 0;
}

}  // namespace

Deflation deflate_linear(const IntPolynomial& p, const BigInt& root) {
  if (p.is_zero()) throw DomainError("deflate_linear: zero polynomial has no finite multiplicity");
  Deflation d{p, 0};
  std::vector<BigInt> q;
  while (d.quotient.degree() > 0 && divide_once(d.quotient.coeffs(), root, q)) {
    d.quotient = IntPolynomial(q);
    ++d.multiplicity;
  }
  return d;
}

IntPolynomial divide_linear(const IntPolynomial& p, const BigInt& root, unsigned times) {
  IntPolynomial cur = p;
  std::vector<BigInt> q;
  for (unsigned t = 0; t < times; ++t) {
    if (cur.is_zero()) return cur;
    if (cur.degree() == 0 || !divide_once(cur.coeffs(), root, q))
      throw DomainError("divide_linear: polynomial is not divisible by (y - " + root.str() + ")^" +
                        std::to_string(times));
    cur = IntPolynomial(q);
  }
  return cur;
}

IntPolynomial compose_linear(const IntPolynomial& p, const BigInt& a, const BigInt& b) {
  const IntPolynomial x_map(std::vector<BigInt>{a, b});
  IntPolynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = multiply(acc, x_map) + IntPolynomial::constant(*it);
  return acc;
}

Complex eval_complex(const IntPolynomial& p, Complex y) {
  const auto& c = p.coeffs();
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + it->convert_to<double>();
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw EvaluationOverflow("eval_complex: value leaves the binary64 range");
  return acc;
}

ValueAndDerivative eval_with_derivative(const IntPolynomial& p, Complex y) {
  const auto& c = p.coeffs();
  Complex value = 0.0, deriv = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * y + value;
    value = value * y + it->convert_to<double>();
  }
  if (!std::isfinite(std::abs(value)) || !std::isfinite(std::abs(deriv)))
    throw EvaluationOverflow("eval_with_derivative: value leaves the binary64 range");
  return {value, deriv};
}

namespace {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble mul(DoubleDouble a, double b) {
  const double p = a.hi * b;
  double e = std::fma(a.hi, b, -p);
  e += a.lo * b;
  return quick_two_sum(p, e);
}

inline DoubleDouble neg(DoubleDouble a) { return {-a.hi, -a.lo}; }

DoubleDouble split(const BigInt& c) {
  const double hi = c.convert_to<double>();
  if (!std::isfinite(hi)) throw EvaluationOverflow("coefficient exceeds the binary64 range");
  const double lo = BigInt(c - BigInt(hi)).convert_to<double>();
  return {hi, lo};
}

}  // namespace

Complex eval_complex_compensated(const IntPolynomial& p, Complex y) {
  const auto& c = p.coeffs();
  DoubleDouble re, im;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const DoubleDouble new_re = add(mul(re, y.real()), neg(mul(im, y.imag())));
    const DoubleDouble new_im = add(mul(re, y.imag()), mul(im, y.real()));
    re = add(new_re, split(*it));
    im = new_im;
  }
  const Complex out(re.hi + re.lo, im.hi + im.lo);
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
    throw EvaluationOverflow("eval_complex_compensated: value leaves the binary64 range");
  return out;
}

double absolute_scale(const IntPolynomial& p, double abs_y) {
  const auto& c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * abs_y + std::abs(it->convert_to<double>());
  return acc;
}

}  // namespace theta
