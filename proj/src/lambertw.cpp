#include "theta/lambertw.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "theta/errors.hpp"

namespace theta {

namespace {

constexpr double kInvE = 0.36787944117144233;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

double residual_bound(Complex x) { return 1e-13 * (1.0 + std::abs(x)); }

double residual_of(Complex w, Complex x) { return std::abs(w * std::exp(w) - x); }

// Halley's method on w e^w - x.
Complex halley(Complex x, Complex w) {
  for (int iter = 0; iter < kHalleyIterations; ++iter) {
    const Complex ew = std::exp(w);
    const Complex f = w * ew - x;
    const Complex wp1 = w + 1.0;
    const Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const Complex step = f / denom;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

// Guess from the branch-point expansion in p = sqrt(2 (e x + 1)).
Complex branch_point_guess(Complex x, double sign) {
  const Complex p = sign * std::sqrt(2.0 * (std::numbers::e * x + 1.0));
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

// Winitzki's approximation to the principal branch.
Complex principal_guess(Complex x) {
  const Complex l = std::log(1.0 + x);
  return l * (1.0 - std::log(1.0 + l) / (2.0 + l));
}

Complex asymptotic_guess(Complex log_x_on_branch) {
  const Complex l1 = log_x_on_branch;
  const Complex l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

WValue finish(Complex x, int branch, Complex w, bool near_branch_point) {
  WValue out{branch, x, w, residual_of(w, x), false};
  if (out.residual > residual_bound(x)) {
    if (near_branch_point) {
      out.reduced_accuracy = true;
    } else {
      throw ConvergenceError("lambert W: Halley iteration did not converge on branch " + std::to_string(branch), w,
                             out.residual);
    }
  }
  if (near_branch_point && std::abs(x + kInvE) < 1e-3) out.reduced_accuracy = true;
  return out;
}

// Which sign of p, if any, makes the branch-point expansion valid for this branch.
int branch_point_sign(Complex x, int branch) {
  if (branch == 0) return 1;
  if (branch == -1 && x.imag() >= 0.0) return -1;
  if (branch == 1 && x.imag() < 0.0) return -1;
  return 0;
}

}  // namespace

double w_real(double x) {
  if (!(x >= -kInvE)) {
    // -1/e itself may arrive rounded a hair low.
    if (x > -kInvE - 1e-15) return -1.0;
    throw DomainError("w_real: x must be >= -1/e");
  }
  if (x == 0.0) return 0.0;
  double w;
  if (x < -0.25) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 3.0) {
    w = std::log1p(x);
    w *= 1.0 - std::log1p(w) / (2.0 + w);
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int iter = 0; iter < kHalleyIterations; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!std::isfinite(step)) break;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

WValue w_complex(Complex x, int branch) {
  if (x == Complex(0.0, 0.0)) {
    if (branch == 0) return WValue{0, x, 0.0, 0.0, false};
    throw DomainError("w_complex: W_b(0) is -infinity for b != 0");
  }
  const bool near_branch_point = std::abs(x + kInvE) < 0.3;
  const int sign = branch_point_sign(x, branch);
  Complex w0;
  if (near_branch_point && sign != 0) {
    w0 = branch_point_guess(x, sign);
  } else if (branch == 0 && std::abs(x) < kInvE) {
    w0 = x * (1.0 + x * (-1.0 + x * (1.5 - x * 8.0 / 3.0)));
  } else if (branch == 0 && std::abs(x) < 20.0) {
    w0 = principal_guess(x);
  } else {
    w0 = asymptotic_guess(std::log(x) + kTwoPi * static_cast<double>(branch) * kI);
  }
  return finish(x, branch, halley(x, w0), near_branch_point && sign != 0);
}

WValue w_on_log_surface(double log_modulus, double arg, int branch) {
  const double total = arg + kTwoPi * branch;
  // total = reduced + 2 pi n with reduced in (-pi, pi]
  const double n_real = std::ceil((total - std::numbers::pi) / kTwoPi);
  const int n = static_cast<int>(n_real);
  const double reduced = total - kTwoPi * n_real;
  const Complex x = std::polar(std::exp(log_modulus), reduced);
  if (std::abs(x + kInvE) < 0.3 || std::abs(x) < kInvE) return w_complex(x, n);
  const Complex w = halley(x, asymptotic_guess(Complex(log_modulus, total)));
  return finish(x, n, w, false);
}

std::int64_t stirling_first(int n, int m) {
  static const auto table = [] {
    std::array<std::array<std::int64_t, 9>, 9> s{};
    s[0][0] = 1;
    for (int k = 0; k < 8; ++k)
      for (int j = 1; j <= k + 1; ++j) s[k + 1][j] = s[k][j - 1] - k * s[k][j];
    return s;
  }();
  if (n < 0 || n > 8 || m < 0 || m > 8) throw DomainError("stirling_first: table covers 0 <= n, m <= 8");
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

double w_asymptotic(double x, int terms) {
  if (!(x > std::numbers::e)) throw DomainError("w_asymptotic: x must exceed e");
  if (terms < 0 || terms > 6) throw DomainError("w_asymptotic: 0 <= terms <= 6");
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  double w = l1 - l2;
  for (int n = 1; n <= terms; ++n) {
    double inner = 0.0;
    double factorial = 1.0;
    for (int j = 1; j <= n; ++j) {
      factorial *= j;
      const double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
      inner += sign * static_cast<double>(stirling_first(n, n - j + 1)) / factorial * std::pow(l2, j);
    }
    w += inner / std::pow(l1, n);
  }
  return w;
}

bool sandwich_lemma_check(double x) {
  if (!(x > std::numbers::e)) throw DomainError("sandwich_lemma_check: x must exceed e");
  const double w = w_real(x);
  const double l1 = std::log(x);
  return l1 - std::log(l1) < w && w < l1;
}

}  // namespace theta
