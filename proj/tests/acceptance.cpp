// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "theta/bounds.hpp"
#include "theta/errors.hpp"
#include "theta/lambertw.hpp"
#include "theta/thetapoly.hpp"
#include "theta/trinomial.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

constexpr double kTableTol = 5e-10;
constexpr double kTableSeconds = 30.0;
constexpr double kSandwichSeconds = 5.0;
constexpr double kEvenEqualTol = 1e-10;
constexpr double kSlopeMin = 3.9;
constexpr double kFundamentalTol = 1e-12;
constexpr double kAsymptoticSeconds = 10.0;
constexpr double kResidualFactor = 1e-8;
constexpr double kMatchTol = 1e-8;
constexpr double kWResidual = 1e-13;
constexpr double kWExact = 1e-14;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome table1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = reproduce_table1();
  const double secs = seconds_since(t0);
  double worst = 0.0;
  int ok = 0;
  for (const auto& c : checks) {
    ok += c.ok;
    for (double d : c.deviation) worst = std::max(worst, d);
  }
  const bool pass = ok == static_cast<int>(checks.size()) && worst <= kTableTol && secs < kTableSeconds;
  return {pass, std::to_string(ok) + "/" + std::to_string(checks.size()) + " rows, max deviation " +
                    fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s"};
}

Outcome oracle_equivalence() {
  std::vector<PathLengths> cases;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int min_s) {
    if (!cur.empty()) cases.emplace_back(cur);
    if (cur.size() == 4) return;
    for (int s = min_s;; ++s) {
      cur.push_back(s);
      const bool fits = PathLengths(cur).vertex_count() <= kBruteForceMaxVertices;
      if (fits) rec(s);
      cur.pop_back();
      if (!fits) break;
    }
  };
  rec(1);
  int mismatches = 0;
  for (const auto& p : cases) {
    const IntPolynomial pi = chromatic_polynomial(p);
    for (int z = 0; z <= 5; ++z)
      if (BigInt(brute_force_chromatic(p, z)) != pi(BigInt(z))) ++mismatches;
  }
  return {mismatches == 0 && cases.size() >= 40,
          std::to_string(cases.size()) + " path sets, z = 0..5, " + std::to_string(mismatches) + " mismatches"};
}

Outcome certificate() {
  bool pass = true;
  std::string detail;
  for (int k = 3; k <= 8; ++k) {
    const bool ok = verify_theorem_k(k).overall;
    pass = pass && ok;
    if (!ok) detail += "k=" + std::to_string(k) + " failed; ";
  }
  const LimitObstruction o = limit_obstruction(9);
  const bool obs = o.obstructs && std::abs(o.rtilde_limit - 3.7959050193) <= kTableTol &&
                   std::abs(o.rho_all_two - 3.7468849281) <= kTableTol;
  pass = pass && obs;
  detail += "k=3..8 certified; k=9 " + fmt("%.10f", o.rtilde_limit) + (o.obstructs ? " > " : " <= ") +
            fmt("%.10f", o.rho_all_two);
  return {pass, detail};
}

Outcome sandwich() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (int k = 2; k <= 1000; ++k) {
    const SandwichCheck s = sandwich_check(k);
    if (!s.ok || (k >= 3 && !s.log_lower_ok)) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kSandwichSeconds,
          "k = 2..1000, " + std::to_string(bad) + " violations, " + fmt("%.2f", secs) + " s"};
}

Outcome xs_vs_xtilde() {
  double worst_even = 0.0, min_odd_margin = 1e9;
  for (int s = 2; s <= 9; ++s)
    for (double R : {1.2, 2.0, 5.0}) {
      const double sup = xs_sup(s, R, 64 * s).value;
      const double tilde = xtilde(s, R);
      if (s % 2 == 0) {
        // At y = -R the ratio is exactly xtilde.
        const Complex y(-R, 0.0);
        const double at_minus_r = std::abs((std::pow(y, s) - y) / (std::pow(y, s) - 1.0));
        worst_even = std::max({worst_even, std::abs(at_minus_r - tilde), std::abs(sup - tilde)});
      } else {
        min_odd_margin = std::min(min_odd_margin, tilde - sup);
      }
    }
  return {worst_even <= kEvenEqualTol && min_odd_margin > 0.0,
          "even max |X - Xtilde| " + fmt("%.2e", worst_even) + ", odd min margin " + fmt("%.3e", min_odd_margin)};
}

Outcome xi_series_order() {
  double min_slope = 1e9;
  const std::vector<double> taus = {1e-1, std::pow(10.0, -1.5), 1e-2, std::pow(10.0, -2.5), 1e-3};
  for (const Complex v : {Complex(0.2, 0.0), Complex(0.0, 0.4), Complex(-0.3, 0.0)}) {
    // least-squares slope of log err against log tau
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double t : taus) {
      const double x = std::log(t), y = std::log(std::abs(xi_solve(v, t) - xi_series(v, t)));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(taus.size());
    min_slope = std::min(min_slope, (n * sxy - sx * sy) / (n * sxx - sx * sx));
  }

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double two_pi = 2.0 * std::numbers::pi;
    const Complex tau = std::polar(kCertifiedTriple.A * std::sqrt(unit(rng)), two_pi * unit(rng));
    const Complex v = std::polar(kCertifiedTriple.B * std::max(std::sqrt(unit(rng)), 1e-3), two_pi * unit(rng));
    worst = std::max(worst, fundamental_residual(xi_solve(v, tau), v, tau));
  }
  return {min_slope >= kSlopeMin && worst <= kFundamentalTol,
          "min slope " + fmt("%.3f", min_slope) + ", max fundamental residual " + fmt("%.2e", worst)};
}

Outcome corollary() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> scaled;
  bool below = true;
  std::string detail = "scaled errors";
  for (int k : {100, 1000, 10000, 100000}) {
    const AsymptoticSolution s = asymptotic_root(k, std::numbers::pi, 0);
    const double L = std::log(static_cast<double>(k));
    const Complex lead = leading_order_root(k, std::numbers::pi);
    const double rel = std::abs(lead - s.z_exact) / std::abs(s.z_exact);
    scaled.push_back(rel * L * L / std::log(L));
    below = below && std::abs(s.z_exact - 1.0) < calR_2k(k);
    detail += " " + fmt("%.4f", scaled.back());
  }
  bool non_increasing = true;
  for (std::size_t i = 1; i < scaled.size(); ++i) non_increasing = non_increasing && scaled[i] <= scaled[i - 1];
  const double secs = seconds_since(t0);
  detail += below ? "; |z-1| < calR_2k" : "; |z-1| >= calR_2k somewhere";
  detail += ", " + fmt("%.2f", secs) + " s";
  return {non_increasing && below && secs < kAsymptoticSeconds, detail};
}

Outcome root_soundness() {
  int sets = 0, bad = 0;
  auto check = [&](const IntPolynomial& p) {
    const RootSet rs = all_roots(p);
    ++sets;
    if (rs.size() != p.degree()) ++bad;
    for (double r : rs.residuals)
      if (!(r <= kResidualFactor * (1.0 + p.max_abs_coeff()))) ++bad;
  };
  for (const Table1Row& row : table1_rows()) check(deflate_linear(f_polynomial(PathLengths(row.paths)), 1).quotient);
  for (int k = 3; k <= 30; ++k) check(deflate_linear(f_polynomial(PathLengths::uniform(2, k)), 1).quotient);

  double worst_match = 0.0;
  for (int k = 3; k <= 30; ++k) {
    const IntPolynomial q = deflate_linear(f_polynomial(PathLengths::uniform(2, k)), 1).quotient;
    std::vector<Complex> from_f;
    for (const Complex& y : all_roots(q).roots) from_f.push_back(1.0 - y);
    const K2kRoots direct = k2k_chromatic_roots(k);
    ++sets;
    if (direct.roots.size() != static_cast<std::size_t>(k) || from_f.size() != direct.roots.size()) {
      ++bad;
      continue;
    }
    for (double r : direct.roots.residuals)
      if (!(r <= kResidualFactor * 2.0)) ++bad;
    for (const Complex& z : direct.roots.roots) {
      auto it = std::min_element(from_f.begin(), from_f.end(),
                                 [&](Complex a, Complex b) { return std::abs(a - z) < std::abs(b - z); });
      worst_match = std::max(worst_match, std::abs(*it - z));
      from_f.erase(it);
    }
  }
  return {bad == 0 && worst_match <= kMatchTol, std::to_string(sets) + " root sets, " + std::to_string(bad) +
                                                    " failures, K_{2,k} match " + fmt("%.2e", worst_match)};
}

Outcome lambert() {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> logmod(-5.0, 15.0), angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  int points = 0, flagged = 0;
  for (int b = -2; b <= 2; ++b)
    for (int i = 0; i < 40; ++i) {
      const Complex x = std::polar(std::exp(logmod(rng)), angle(rng));
      const WValue w = w_complex(x, b);
      ++points;
      flagged += w.reduced_accuracy;
      worst = std::max(worst, w.residual / (1.0 + std::abs(x)));
    }
  const bool exact = std::abs(w_real(std::numbers::e) - 1.0) <= kWExact && w_real(0.0) == 0.0 &&
                     std::abs(w_complex(0.0, 0).value) == 0.0;
  bool decreasing = true;
  for (double x : {1e3, 1e6, 1e9}) {
    const double w = w_real(x);
    const double e0 = std::abs(w_asymptotic(x, 0) - w), e1 = std::abs(w_asymptotic(x, 1) - w),
                 e2 = std::abs(w_asymptotic(x, 2) - w);
    decreasing = decreasing && e1 < e0 && e2 < e1;
  }
  return {worst <= kWResidual && exact && decreasing,
          std::to_string(points) + " points, max scaled residual " + fmt("%.2e", worst) + ", " +
              std::to_string(flagged) + " near the branch point"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"published table reproduction", table1},
      {"chromatic polynomial vs brute force", oracle_equivalence},
      {"extremality certificate k = 3..8, obstruction at k = 9", certificate},
      {"calR_2k sandwich k = 2..1000", sandwich},
      {"X_s versus Xtilde_s", xs_vs_xtilde},
      {"xi series order and fundamental residual", xi_series_order},
      {"K_{2,k} rightmost root asymptotics", corollary},
      {"root-finder soundness", root_soundness},
      {"Lambert W", lambert},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d %s: %s (%s)\n", index++, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
