#include "theta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "theta/errors.hpp"

namespace theta {

double RootSet::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Fixed irrational offset for the starting circle; symmetric starts stall on
// the near-symmetric root constellations of theta polynomials.
constexpr double kStartRotation = 0.6180339887498949;

double real_value_compensated(const IntPolynomial& p, double y) {
  return eval_complex_compensated(p, Complex(y, 0.0)).real();
}

std::vector<Complex> circle_start(std::size_t n, double radius) {
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + kStartRotation;
    z[j] = std::polar(radius, angle);
  }
  return z;
}

template <class Eval>
void aberth_iterate(std::size_t degree, std::vector<Complex>& z, Eval&& eval, const AberthOptions& options) {
  const std::size_t n = degree;
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto [value, deriv, noise] = eval(z[i]);
      if (std::abs(value) <= noise) {
        done[i] = true;
        continue;
      }
      const Complex ratio = value / deriv;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        // a coincident pair; nudge and retry next sweep
        z[i] += std::polar(1e-8 * std::max(1.0, std::abs(z[i])), kStartRotation * static_cast<double>(i + 1));
        all_done = false;
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= options.update_tolerance * std::max(1.0, std::abs(z[i])))
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) return;
  }
  // Report the worst remaining root.
  double worst = -1.0;
  Complex worst_z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const double r = std::abs(std::get<0>(eval(z[i])));
    if (r > worst) {
      worst = r;
      worst_z = z[i];
    }
  }
  throw ConvergenceError("aberth: no convergence after " + std::to_string(options.max_iterations) + " iterations",
                         worst_z, worst);
}

}  // namespace

double cauchy_bound(const IntPolynomial& p) {
  if (p.degree() == 0) throw DomainError("cauchy_bound: constant polynomial");
  std::vector<BigInt> c = p.coeffs();
  for (auto& a : c) a = abs(a);
  for (std::size_t j = 0; j + 1 < c.size(); ++j) c[j] = -c[j];
  const IntPolynomial majorant(std::move(c));
  bool any = false;
  for (std::size_t j = 0; j < majorant.degree(); ++j) any = any || majorant.coeff(j) != 0;
  if (!any) return 0.0;
  return unique_positive_root(majorant, 1e-10);
}

std::vector<Complex> aberth(const std::vector<Complex>& coeffs, const std::vector<Complex>& start,
                            const AberthOptions& options) {
  if (coeffs.size() < 2) throw DomainError("aberth: degree must be >= 1");
  const std::size_t n = coeffs.size() - 1;
  if (start.size() != n) throw DomainError("aberth: need one starting point per root");
  std::vector<Complex> z = start;
  auto eval = [&](Complex y) {
    Complex v = 0.0, d = 0.0;
    double scale = 0.0;
    const double ay = std::abs(y);
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      d = d * y + v;
      v = v * y + coeffs[j];
      scale = scale * ay + std::abs(coeffs[j]);
    }
    return std::tuple{v, d, 4.0 * kEps * scale};
  };
  aberth_iterate(n, z, eval, options);
  return z;
}

RootSet all_roots(const IntPolynomial& p, const AberthOptions& options) {
  if (p.degree() < 1) throw DomainError("all_roots: degree must be >= 1");

  RootSet out;
  IntPolynomial rest = p;
  for (int r : {0, 1, -1}) {
    if (rest.degree() == 0) break;
    const Deflation d = deflate_linear(rest, r);
    for (unsigned m = 0; m < d.multiplicity; ++m) out.roots.emplace_back(static_cast<double>(r), 0.0);
    rest = d.quotient;
  }

  if (rest.degree() >= 1) {
    const std::vector<double> c = rest.to_double();
    const double radius = std::max(cauchy_bound(rest), 1e-3);
    std::vector<Complex> z = circle_start(rest.degree(), radius);

    auto eval = [&](Complex y) {
      Complex v = 0.0, d = 0.0;
      double scale = 0.0;
      const double ay = std::abs(y);
      for (std::size_t j = c.size(); j-- > 0;) {
        d = d * y + v;
        v = v * y + c[j];
        scale = scale * ay + std::abs(c[j]);
      }
      return std::tuple{v, d, 4.0 * kEps * scale};
    };
    aberth_iterate(rest.degree(), z, eval, options);

    for (Complex& root : z) {
      Complex best = root;
      double best_res = std::abs(eval_complex_compensated(rest, root));
      for (int step = 0; step < options.polish_steps && best_res > 0.0; ++step) {
        const Complex value = eval_complex_compensated(rest, best);
        const Complex deriv = eval_with_derivative(rest, best).derivative;
        const Complex candidate = best - value / deriv;
        const double res = std::abs(eval_complex_compensated(rest, candidate));
        if (!(res < best_res)) break;
        best = candidate;
        best_res = res;
      }
      out.roots.push_back(best);
    }
  }

  out.residuals.reserve(out.roots.size());
  for (const Complex& root : out.roots) {
    const double scale = absolute_scale(p, std::abs(root));
    const double res = scale > 0.0 ? std::abs(eval_complex_compensated(p, root)) / scale : 0.0;
    out.residuals.push_back(res);
    out.rho = std::max(out.rho, std::abs(root));
    if (!(res <= options.residual_tolerance))
      throw ConvergenceError("all_roots: residual " + std::to_string(res) + " above tolerance", root, res);
  }
  return out;
}

double unique_positive_root(const IntPolynomial& p, double tolerance) {
  const std::size_t n = p.degree();
  if (n < 1 || p.leading() <= 0)
    throw DomainError("unique_positive_root: need a positive leading coefficient and degree >= 1");
  bool any_negative = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (p.coeff(j) > 0) throw DomainError("unique_positive_root: more than one sign change");
    any_negative = any_negative || p.coeff(j) < 0;
  }
  if (!any_negative) throw DomainError("unique_positive_root: no sign change");

  const double lead = p.leading().convert_to<double>();
  double max_ratio = 0.0;
  for (std::size_t j = 0; j < n; ++j) max_ratio = std::max(max_ratio, std::abs(p.coeff(j).convert_to<double>()) / lead);
  double lo = 0.0;
  double hi = 1.0 + max_ratio;

  // Coarse bisection, then safeguarded Newton.
  while (hi - lo > 1e-6 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (real_value_compensated(p, mid) > 0.0 ? hi : lo) = mid;
  }
  double y = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double value = real_value_compensated(p, y);
    if (value == 0.0) return y;
    (value > 0.0 ? hi : lo) = y;
    const double deriv = eval_with_derivative(p, Complex(y, 0.0)).derivative.real();
    double next = y - value / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - y);
    y = next;
    if (step <= 0.25 * tolerance || hi - lo <= 0.25 * tolerance || step <= 4.0 * kEps * y) break;
  }
  return y;
}

double bracketed_monotone_root(const std::function<double(double)>& fn, double lo, double hi, double width) {
  if (!(lo < hi)) throw DomainError("bracketed_monotone_root: need lo < hi");
  const double flo = fn(lo);
  const double fhi = fn(hi);
  if (!(flo > 0.0 && fhi < 0.0))
    throw DomainError("bracketed_monotone_root: need fn(lo) > 0 > fn(hi), got " + std::to_string(flo) + ", " +
                      std::to_string(fhi));
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    (fm > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace theta
