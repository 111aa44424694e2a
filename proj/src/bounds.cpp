#include "theta/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "theta/errors.hpp"
#include "theta/lambertw.hpp"

namespace theta {

namespace {

constexpr double kChainMargin = 1e-12;

// log Xtilde_s(R) = log1p((R + 1)/(R^s - 1)), stable as R -> 1.
double log_xtilde(int s, double R) { return std::log1p((R + 1.0) / std::expm1(s * std::log(R))); }

double modulus_ratio(int s, double R, double angle) {
  const Complex y = std::polar(R, angle);
  const Complex ys = std::pow(y, s);
  return std::abs((ys - y) / (ys - 1.0));
}

}  // namespace

double xtilde(int s, double R) {
  if (s < 2) throw DomainError("xtilde: s must be >= 2");
  if (!(R > 1.0)) throw DomainError("xtilde: R must exceed 1");
  const double Rs = std::pow(R, s);
  return (Rs + R) / (Rs - 1.0);
}

XsSup xs_sup(int s, double R, int samples) {
  if (s < 2) throw DomainError("xs_sup: s must be >= 2");
  if (!(R > 1.0)) throw DomainError("xs_sup: R must exceed 1");
  if (samples < 8 * s) throw DomainError("xs_sup: need at least 8s samples");

  const double h = 2.0 * std::numbers::pi / samples;
  std::vector<std::pair<double, double>> grid;  // (value, angle)
  grid.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) grid.emplace_back(modulus_ratio(s, R, j * h), j * h);
  std::partial_sort(grid.begin(), grid.begin() + 3, grid.end(), std::greater<>());

  XsSup best{grid[0].first, grid[0].second};
  constexpr double kGolden = 0.6180339887498949;
  for (int c = 0; c < 3; ++c) {
    double a = grid[static_cast<std::size_t>(c)].second - h;
    double b = grid[static_cast<std::size_t>(c)].second + h;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = modulus_ratio(s, R, x1), f2 = modulus_ratio(s, R, x2);
    while (b - a > 1e-12) {
      if (f1 > f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = modulus_ratio(s, R, x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = modulus_ratio(s, R, x2);
      }
    }
    const double mid = 0.5 * (a + b);
    const double fm = modulus_ratio(s, R, mid);
    if (fm > best.value) best = {fm, mid};
  }
  best.angle = std::fmod(best.angle + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  return best;
}

double calR(const PathLengths& paths) {
  if (!paths.nondegenerate())
    throw DomainError("calR: requires k >= 3 and every path length >= 2, got " + paths.to_string());
  auto fn = [&](double R) {
    double sum = 0.0;
    for (int s : paths.lengths()) sum += log_xtilde(s, R);
    return sum - std::log(R);
  };
  return bracketed_monotone_root(fn, 1.0 + 1e-9, paths.k() + 2.0);
}

double calR_2k(int k) {
  if (k < 2) throw DomainError("calR_2k: k must be >= 2");
  auto fn = [k](double R) { return -k * std::log1p(-1.0 / R) - std::log(R); };
  return bracketed_monotone_root(fn, 1.0 + 1e-9, k + 2.0);
}

SandwichCheck sandwich_check(int k) {
  if (k < 2) throw DomainError("sandwich_check: k must be >= 2");
  SandwichCheck out;
  out.k = k;
  out.lower = k / w_real(k);
  out.upper = (k - 1) / w_real(k - 1) + 1.0;
  out.value = calR_2k(k);
  out.ok = out.lower < out.value && out.value < out.upper;
  out.log_lower_ok = k < 3 || k / std::log(static_cast<double>(k)) < out.value;
  return out;
}

double rho(const PathLengths& paths, const AberthOptions& options) {
  const Deflation d = deflate_linear(f_polynomial(paths), 1);
  if (d.quotient.degree() == 0) return 1.0;
  return std::max(1.0, all_roots(d.quotient, options).rho);
}

BoundReport bound_report(const PathLengths& paths, double tolerance) {
  if (!paths.nondegenerate())
    throw DomainError("bound_report: requires k >= 3 and every path length >= 2, got " + paths.to_string());
  BoundReport rep{paths};
  rep.rho = rho(paths);
  rep.r = unique_positive_root(h_polynomial(paths), tolerance);
  rep.rtilde = unique_positive_root(htilde_polynomial(paths), tolerance);
  rep.calR = calR(paths);
  if (!(rep.rho <= rep.r + kChainMargin && rep.r <= rep.rtilde + kChainMargin))
    throw InvariantViolation("bound_report: rho <= r <= rtilde fails for " + paths.to_string());
  if (!(rep.rho <= rep.calR + kChainMargin))
    throw InvariantViolation("bound_report: rho <= calR fails for " + paths.to_string());
  return rep;
}

}  // namespace theta
