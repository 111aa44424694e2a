#include "theta/trinomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "theta/bounds.hpp"
#include "theta/errors.hpp"
#include "theta/lambertw.hpp"

namespace theta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI(0.0, 1.0);
constexpr int kXiIterations = 200;

Complex ipow(Complex base, unsigned n) {
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

Complex expm1(Complex z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

Complex log1p(Complex s) {
  const double re = 0.5 * std::log1p(2.0 * s.real() + std::norm(s));
  return {re, std::atan2(s.imag(), 1.0 + s.real())};
}

// log(1 + xi) - xi
Complex log1p_minus_identity(Complex xi) {
  if (std::abs(xi) < 0.05) {
    Complex term = xi;
    Complex sum = 0.0;
    for (int n = 2; n <= 24; ++n) {
      term *= xi;
      sum += (n % 2 == 0 ? -1.0 : 1.0) * term / static_cast<double>(n);
    }
    return sum;
  }
  return log1p(xi) - xi;
}

// log(sinh(u)/u)
Complex log_sinhc(Complex u) {
  if (std::abs(u) < 0.5) {
    // sinh(u)/u - 1 = sum_{n>=1} u^{2n}/(2n+1)!
    const Complex u2 = u * u;
    Complex term = 1.0;
    Complex sum = 0.0;
    for (int n = 1; n <= 12; ++n) {
      term *= u2 / static_cast<double>((2 * n) * (2 * n + 1));
      sum += term;
    }
    return log1p(sum);
  }
  return std::log(std::sinh(u) / u);
}

// zeta^k - zeta^(k-1) - lambda and its derivative, with the absolute scale.
struct TrinomialEval {
  Complex value;
  Complex derivative;
  double scale;
};

TrinomialEval eval_trinomial(int k, Complex lambda, Complex zeta) {
  const Complex pkm2 = ipow(zeta, static_cast<unsigned>(k - 2));
  const Complex pkm1 = pkm2 * zeta;
  return {pkm1 * (zeta - 1.0) - lambda, pkm2 * (static_cast<double>(k) * zeta - static_cast<double>(k - 1)),
          std::abs(pkm1) * (std::abs(zeta) + 1.0) + std::abs(lambda)};
}

double trinomial_start_radius(int k, double abs_lambda) {
  // positive root of R^k - R^(k-1) - |lambda|
  auto g = [&](double R) { return abs_lambda + std::pow(R, k - 1) - std::pow(R, k); };
  return bracketed_monotone_root(g, 1.0, 2.0 + abs_lambda, 1e-10);
}

std::vector<Complex> dense_trinomial_roots(int k, Complex lambda) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(k + 1), 0.0);
  coeffs[0] = -lambda;
  coeffs[static_cast<std::size_t>(k - 1)] = -1.0;
  coeffs[static_cast<std::size_t>(k)] = 1.0;
  const double radius = trinomial_start_radius(k, std::abs(lambda));
  std::vector<Complex> start(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) start[static_cast<std::size_t>(j)] = std::polar(radius, kTwoPi * j / k + 0.6180339887498949);
  std::vector<Complex> roots = aberth(coeffs, start);
  for (Complex& r : roots) {
    for (int step = 0; step < 2; ++step) {
      const TrinomialEval e = eval_trinomial(k, lambda, r);
      if (e.value == Complex(0.0, 0.0)) break;
      const Complex cand = r - e.value / e.derivative;
      if (!(std::abs(eval_trinomial(k, lambda, cand).value) < std::abs(e.value))) break;
      r = cand;
    }
  }
  return roots;
}

bool in_domain(Complex tau, Complex v, const RoucheTriple& t) { return std::abs(tau) <= t.A && std::abs(v) <= t.B; }

bool admissible(long long k, double theta, int branch) {
  const Complex w = w_on_log_surface(std::log(static_cast<double>(k)), theta, branch).value;
  return in_domain(w / static_cast<double>(k), 1.0 / (1.0 + w), kCertifiedTriple);
}

long long minimal_admissible_k(double theta, int branch) {
  long long hi = 2;
  while (!admissible(hi, theta, branch)) {
    if (hi > (1LL << 50)) return -1;
    hi *= 2;
  }
  long long lo = hi / 2;
  if (lo < 2 || admissible(lo, theta, branch)) return hi == 2 ? 2 : lo;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    (admissible(mid, theta, branch) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

Complex zeta_from_z(Complex z) {
  if (z == Complex(2.0, 0.0)) throw DomainError("zeta_from_z: pole at z = 2");
  return (z - 1.0) / (z - 2.0);
}

Complex z_from_zeta(Complex zeta) {
  if (zeta == Complex(1.0, 0.0)) throw DomainError("z_from_zeta: pole at zeta = 1");
  return (2.0 * zeta - 1.0) / (zeta - 1.0);
}

RootSet trinomial_roots_zeta(int k, Complex lambda) {
  if (k < 2) throw DomainError("trinomial_roots_zeta: k must be >= 2");
  if (lambda == Complex(0.0, 0.0)) throw DomainError("trinomial_roots_zeta: lambda must be nonzero");
  RootSet out;
  if (k <= kMaxDenseTrinomialDegree) {
    out.roots = dense_trinomial_roots(k, lambda);
  } else {
    const double log_abs = std::log(std::abs(lambda));
    const double arg = std::arg(lambda);
    const Complex w = w_on_log_surface(std::log(static_cast<double>(k)) + log_abs, arg, 0).value;
    const Complex tau = w / static_cast<double>(k);
    const Complex u0 = tau * (1.0 + xi_series(1.0 / (1.0 + w), tau));
    out.roots = {std::exp(trinomial_log_root(k, Complex(log_abs, arg), u0))};
  }
  for (const Complex& r : out.roots) {
    const TrinomialEval e = eval_trinomial(k, lambda, r);
    out.residuals.push_back(std::abs(e.value) / e.scale);
    out.rho = std::max(out.rho, std::abs(r));
  }
  return out;
}

K2kRoots k2k_chromatic_roots(int k) {
  if (k < 2 || k > kMaxDenseTrinomialDegree) throw DomainError("k2k_chromatic_roots: need 2 <= k <= 2000");
  const RootSet zetas = trinomial_roots_zeta(k, Complex(-1.0, 0.0));
  K2kRoots out;
  for (const Complex& zeta : zetas.roots) {
    const Complex z = z_from_zeta(zeta);
    const Complex a = ipow(z - 2.0, static_cast<unsigned>(k));
    const Complex b = ipow(z - 1.0, static_cast<unsigned>(k - 1));
    out.roots.roots.push_back(z);
    out.roots.residuals.push_back(std::abs(a + b) / (std::abs(a) + std::abs(b)));
    out.roots.rho = std::max(out.roots.rho, std::abs(z - 1.0));
  }
  return out;
}

std::vector<Complex> g_coefficients(Complex v, int lmax) {
  if (lmax < 1 || lmax > 3) throw DomainError("g_coefficients: 1 <= lmax <= 3");
  const Complex v2 = v * v, v3 = v2 * v;
  std::vector<Complex> g;
  g.push_back(v / 2.0);
  if (lmax >= 2) g.push_back((-v + 6.0 * v2 + 3.0 * v3) / 24.0);
  if (lmax >= 3) g.push_back((-3.0 * v2 + 5.0 * v3 + 7.0 * v2 * v2 + 3.0 * v3 * v2) / 48.0);
  return g;
}

Complex xi_series(Complex v, Complex tau, int terms) {
  const auto g = g_coefficients(v, terms);
  Complex sum = 0.0, tau_power = 1.0;
  for (const Complex& gl : g) {
    tau_power *= tau;
    sum += gl * tau_power;
  }
  return sum;
}

Complex log_one_minus_exp_ratio(Complex z) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  return -0.5 * z + log_sinhc(0.5 * z);
}

double fundamental_residual(Complex xi, Complex v, Complex tau) {
  if (tau == Complex(0.0, 0.0) || v == Complex(0.0, 0.0))
    throw DomainError("fundamental_residual: tau and v must be nonzero");
  const Complex lhs = -expm1(-tau * (1.0 + xi)) / tau;
  const Complex rhs = std::exp((1.0 - 1.0 / v) * xi);
  return std::abs(lhs - rhs);
}

RoucheCheck rouche_condition(double A, double B, double R) {
  if (!(A > 0.0 && A < kTwoPi)) throw DomainError("rouche_condition: need 0 < A < 2 pi");
  if (!(B > 0.0)) throw DomainError("rouche_condition: need B > 0");
  if (!(R > 0.0 && R < std::min(1.0, kTwoPi / A - 1.0)))
    throw DomainError("rouche_condition: need 0 < R < min(1, 2 pi/A - 1)");
  const double a = A * (1.0 + R) / 2.0;
  const double lhs = B * (a + std::log(a / std::sin(a)) - std::log1p(-R) - R);
  return {lhs, lhs < R};
}

RoucheTriple maximize_rouche_B(double A, int grid) {
  if (grid < 2) throw DomainError("maximize_rouche_B: grid must be >= 2");
  const double r_max = std::min(1.0, kTwoPi / A - 1.0);
  RoucheTriple best{A, 0.0, 0.0};
  for (int i = 1; i < grid; ++i) {
    const double R = r_max * i / grid;
    // lhs is linear in B, so the admissible B at this R is R / (lhs at B = 1).
    const double B = R / rouche_condition(A, 1.0, R).lhs;
    if (B > best.B) best = {A, B, R};
  }
  return best;
}

Complex xi_solve(Complex v, Complex tau, const RoucheTriple& triple) {
  if (!in_domain(tau, v, triple))
    throw DomainError("xi_solve: (tau, v) outside the certified domain |tau| <= " + std::to_string(triple.A) +
                      ", |v| <= " + std::to_string(triple.B));
  if (v == Complex(0.0, 0.0) || tau == Complex(0.0, 0.0)) return 0.0;
  Complex xi = g_coefficients(v, 1)[0] * tau;
  for (int iter = 0; iter < kXiIterations; ++iter) {
    const Complex next = -v * (log_one_minus_exp_ratio(tau * (1.0 + xi)) + log1p_minus_identity(xi));
    if (std::abs(next) > triple.R) throw CertificateViolation("xi_solve: iterate left the disc |xi| <= R");
    const double step = std::abs(next - xi);
    xi = next;
    if (step <= 2.0 * kEps * std::abs(xi) || step == 0.0) return xi;
  }
  throw ConvergenceError("xi_solve: no convergence after 200 iterations", xi, fundamental_residual(xi, v, tau));
}

Complex trinomial_log_root(int k, Complex log_lambda, Complex u0) {
  Complex u = u0;
  const double km1 = k - 1.0;
  for (int iter = 0; iter < 100; ++iter) {
    const Complex em1 = expm1(u);
    const Complex g = km1 * u + std::log(em1) - log_lambda;
    const Complex dg = km1 + (em1 + 1.0) / em1;
    const Complex step = g / dg;
    u -= step;
    if (std::abs(step) <= 4.0 * kEps * std::abs(u)) return u;
  }
  throw ConvergenceError("trinomial_log_root: Newton did not converge", u, 0.0);
}

AsymptoticSolution asymptotic_root(int k, double theta, int branch) {
  if (k < 2) throw DomainError("asymptotic_root: k must be >= 2");
  AsymptoticSolution s;
  s.k = k;
  s.theta = theta;
  s.branch = branch;
  s.w = w_on_log_surface(std::log(static_cast<double>(k)), theta, branch).value;
  s.tau = s.w / static_cast<double>(k);
  s.v = 1.0 / (1.0 + s.w);
  if (!in_domain(s.tau, s.v, kCertifiedTriple)) {
    const long long kmin = minimal_admissible_k(theta, branch);
    throw DomainError("asymptotic_root: (tau, v) outside the certified domain for k = " + std::to_string(k) +
                      "; smallest admissible k is about " + (kmin > 0 ? std::to_string(kmin) : std::string("unknown")));
  }
  s.xi = xi_series(s.v, s.tau);
  const Complex u_pred = s.tau * (1.0 + s.xi);
  s.zeta_pred = std::exp(u_pred);
  s.z_pred = 2.0 + 1.0 / expm1(u_pred);

  const Complex log_lambda = kI * (theta + kTwoPi * branch);
  const Complex u = trinomial_log_root(k, log_lambda, u_pred);
  s.z_exact = 2.0 + 1.0 / expm1(u);
  s.rel_error = std::abs(s.z_pred - s.z_exact) / std::abs(s.z_exact);
  s.xi_ratio = std::abs(u / s.tau - 1.0) / (std::abs(s.tau) * std::abs(s.v));
  return s;
}

Complex leading_order_root(int k, double theta) {
  const double L = std::log(static_cast<double>(k));
  return k / (L - std::log(L)) * (1.0 - kI * theta / L);
}

std::vector<LocusPoint> locus(int k, int samples) {
  if (k < 2 || k > kMaxDenseTrinomialDegree) throw DomainError("locus: need 2 <= k <= 2000");
  if (samples < 16) throw DomainError("locus: need samples >= 16");
  std::vector<LocusPoint> out;
  out.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = kTwoPi * j / samples;
    int flag = 0;
    Complex lambda = std::polar(1.0, theta);
    if (j == 0) {
      flag = 1;
      lambda = 1.0;
    } else if (2 * j == samples) {
      flag = -1;
      lambda = -1.0;
    }
    std::vector<Complex> zetas = trinomial_roots_zeta(k, lambda).roots;
    std::sort(zetas.begin(), zetas.end(), [](Complex a, Complex b) {
      const double aa = std::arg(a), ab = std::arg(b);
      return aa != ab ? aa < ab : std::abs(a) < std::abs(b);
    });
    for (const Complex& zeta : zetas) out.push_back({theta, zeta, z_from_zeta(zeta), flag});
  }
  return out;
}

}  // namespace theta
