#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "theta/errors.hpp"
#include "theta/lambertw.hpp"

using namespace theta;

namespace {

double bound(Complex x) { return 1e-13 * (1.0 + std::abs(x)); }

// Independent of Halley: w = x e^{-w} contracts while W(x) < 1, i.e. x < e.
double fixed_point_w(double x) {
  double w = 0.5;
  for (int i = 0; i < 5000; ++i) w = x * std::exp(-w);
  return w;
}

}  // namespace

TEST_SUITE("lambertw") {
  TEST_CASE("w_real values") {
    CHECK(w_real(0.0) == 0.0);
    CHECK(std::abs(w_real(std::numbers::e) - 1.0) < 1e-15);
    CHECK(std::abs(w_real(2.0) - 0.8526055020) < 5e-11);
    CHECK(std::abs(w_real(2.0) - fixed_point_w(2.0)) < 1e-14);
    CHECK(std::abs(w_real(-1.0 / std::numbers::e) + 1.0) < 1e-7);
    CHECK_THROWS_AS(w_real(-0.5), DomainError);
  }

  TEST_CASE("w_real and x / w_real increase") {
    double prev_w = w_real(0.1), prev_ratio = 0.1 / prev_w;
    for (double x = 0.2; x < 1e9; x *= 1.37) {
      const double w = w_real(x);
      CHECK(w > prev_w);
      CHECK(x / w > prev_ratio);
      prev_w = w;
      prev_ratio = x / w;
    }
  }

  TEST_CASE("complex branches satisfy the defining equation") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> logmod(-4.0, 12.0), angle(-std::numbers::pi, std::numbers::pi);
    for (int b = -3; b <= 3; ++b)
      for (int trial = 0; trial < 40; ++trial) {
        const Complex x = std::polar(std::exp(logmod(rng)), angle(rng));
        const WValue w = w_complex(x, b);
        CHECK(w.branch == b);
        if (!w.reduced_accuracy) CHECK(w.residual <= bound(x));
      }
  }

  TEST_CASE("branch identity W_b + Log W_b = Log x + 2 pi i b") {
    // Holds off the negative real axis, which is where the cuts live.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> logmod(-4.0, 12.0), angle(-3.0, 3.0);
    for (int b = -3; b <= 3; ++b)
      for (int trial = 0; trial < 40; ++trial) {
        const Complex x = std::polar(std::exp(logmod(rng)), angle(rng));
        const Complex w = w_complex(x, b).value;
        const Complex gap = w + std::log(w) - std::log(x) - Complex(0.0, 2.0 * std::numbers::pi * b);
        CHECK_MESSAGE(std::abs(gap) < 1e-10, "b = ", b, " x = ", x.real(), "+", x.imag(), "i");
      }
  }

  TEST_CASE("principal branch on the positive axis matches w_real") {
    for (double x : {0.01, 0.5, 2.0, 40.0, 1e6}) CHECK(std::abs(w_complex(x, 0).value - w_real(x)) < 1e-13 * (1.0 + x));
  }

  TEST_CASE("k e^{i pi}") {
    const Complex x = std::polar(10.0, std::numbers::pi);
    CHECK(w_complex(x, 0).residual <= bound(x));
  }

  TEST_CASE("conjugate symmetry") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> re(-20.0, 20.0);
    for (int trial = 0; trial < 20; ++trial) {
      const Complex x(re(rng), re(rng));
      for (int b : {1, 2}) {
        const Complex lhs = std::conj(w_complex(x, b).value);
        const Complex rhs = w_complex(std::conj(x), -b).value;
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
      }
    }
  }

  TEST_CASE("branch stratification away from the origin and the cuts") {
    // For |x| >= e^2 and Re x > 0 the imaginary part of W_b sits in
    // ((2b-1) pi, (2b+1) pi). Nearer the origin it need not.
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> logmod(2.0, 10.0), angle(-1.4, 1.4);
    for (int b : {-2, -1, 1, 2})
      for (int trial = 0; trial < 25; ++trial) {
        const double im = w_complex(std::polar(std::exp(logmod(rng)), angle(rng)), b).value.imag();
        CHECK(im > (2 * b - 1) * std::numbers::pi);
        CHECK(im < (2 * b + 1) * std::numbers::pi);
      }
  }

  TEST_CASE("stratification fails near the origin") {
    CHECK(w_complex(Complex(0.0, -0.01), 1).value.imag() < std::numbers::pi);
    CHECK(w_complex(std::polar(1.0, -1.4), 2).value.imag() < 3.0 * std::numbers::pi);
  }

  TEST_CASE("branch zero at the origin only") {
    CHECK(w_complex(0.0, 0).value == Complex(0.0, 0.0));
    CHECK_THROWS_AS(w_complex(0.0, 1), DomainError);
  }

  TEST_CASE("near the branch point") {
    const Complex x(-1.0 / std::numbers::e + 1e-5, 1e-6);
    const WValue w0 = w_complex(x, 0), wm = w_complex(x, -1);
    CHECK(std::abs(w0.value + 1.0) < 0.02);
    CHECK(std::abs(wm.value + 1.0) < 0.02);
    CHECK(std::abs(w0.value - wm.value) > 1e-4);
    CHECK(w0.residual < 1e-12);
  }

  TEST_CASE("log surface") {
    const double L = std::log(1000.0);
    for (double theta : {0.0, 1.0, 3.0, -3.0}) {
      const WValue plain = w_complex(std::polar(1000.0, theta), 0);
      CHECK(std::abs(w_on_log_surface(L, theta, 0).value - plain.value) < 1e-12);
    }
    // arg + 2 pi lands on branch 1.
    const WValue up = w_on_log_surface(L, 0.5 + 2.0 * std::numbers::pi, 0);
    CHECK(up.branch == 1);
    CHECK(std::abs(up.value - w_complex(std::polar(1000.0, 0.5), 1).value) < 1e-12);
    CHECK(w_on_log_surface(L, 0.5, -1).branch == -1);
  }

  TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling_first(0, 0) == 1);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(4, 1) == -6);
    CHECK(stirling_first(5, 3) == 35);
    CHECK(stirling_first(8, 1) == -5040);
    // sum_m s(n, m) x^m = x (x - 1) ... (x - n + 1), which vanishes at x = 1.
    for (int n = 2; n <= 8; ++n) {
      std::int64_t sum = 0;
      for (int m = 0; m <= n; ++m) sum += stirling_first(n, m);
      CHECK(sum == 0);
    }
    CHECK_THROWS_AS(stirling_first(9, 1), DomainError);
  }

  TEST_CASE("asymptotic series") {
    for (double x : {1e3, 1e6, 1e9}) {
      const double L1 = std::log(x), L2 = std::log(L1);
      CHECK(w_asymptotic(x, 0) == doctest::Approx(L1 - L2).epsilon(1e-15));
      const double two = L1 - L2 + L2 / L1 + L2 * L2 / (2.0 * L1 * L1) - L2 / (L1 * L1);
      CHECK(w_asymptotic(x, 2) == doctest::Approx(two).epsilon(1e-14));
      const double w = w_real(x);
      CHECK(std::abs(w_asymptotic(x, 2) - w) < std::abs(w_asymptotic(x, 0) - w));
    }
    CHECK_THROWS_AS(w_asymptotic(2.0, 1), DomainError);
  }

  TEST_CASE("sandwich lemma") {
    CHECK(sandwich_lemma_check(std::numbers::e + 1e-9));
    CHECK(sandwich_lemma_check(100.0));
    CHECK(sandwich_lemma_check(1e9));
    const double w = w_real(100.0);
    CHECK(std::abs(w - 3.3856) < 1e-4);
    CHECK_THROWS_AS(sandwich_lemma_check(2.0), DomainError);
  }
}
