#include "hyppoisson/quadrature.hpp"

#include <cmath>
#include <string>

namespace hyppoisson {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Legendre P_k and P_k' at x by the standard recurrence.
void legendre_pair(int k, double x, double& p, double& dp) {
  double pm1 = 1.0;
  double pc = x;
  for (int j = 2; j <= k; ++j) {
    const double next = ((2.0 * j - 1.0) * x * pc - (j - 1.0) * pm1) / j;
    pm1 = pc;
    pc = next;
  }
  p = pc;
  dp = k * (x * pc - pm1) / (x * x - 1.0);
}

}  // namespace

Quad1D gauss_legendre(int k) {
  if (k < 1 || k > 2048) {
    throw DomainError("gauss_legendre: k must lie in [1, 2048]");
  }
  Quad1D rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  if (k == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (k + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(k, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre_pair(k, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[k - 1 - i] = x;
    rule.weights[k - 1 - i] = w;
  }
  if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
  return rule;
}

Quad1D gauss_legendre_mapped(int k, double a, double b) {
  Quad1D rule = gauss_legendre(k);
  const double mid = 0.5 * (a + b);
  const double len = 0.5 * (b - a);
  for (int i = 0; i < k; ++i) {
    rule.nodes[i] = mid + len * rule.nodes[i];
    rule.weights[i] *= len;
  }
  return rule;
}

double total_mass(int n) {
  if (n < 2) throw DomainError("total_mass: n >= 2");
  return kPi / 4.0 * std::tgamma(2.0) * std::tgamma(2.0 * n - 2.0) /
         std::tgamma(2.0 * n);
}

ZonalGrid ZonalGrid::build(int n, int points_per_dim) {
  if (n < 2) throw DomainError("ZonalGrid: n >= 2");
  if (points_per_dim < 2 || points_per_dim > 2048) {
    throw DomainError("ZonalGrid: points_per_dim in [2, 2048]");
  }
  ZonalGrid g;
  g.n_ = n;
  g.r_ = gauss_legendre_mapped(points_per_dim, 0.0, 1.0);
  g.theta_ = gauss_legendre_mapped(points_per_dim, 0.0, kPi);
  g.wdens_.resize(static_cast<std::size_t>(points_per_dim) * points_per_dim);
  std::size_t idx = 0;
  for (int i = 0; i < points_per_dim; ++i) {
    const double r = g.r_.nodes[i];
    const double rad = g.r_.weights[i] *
                       std::pow(1.0 - r * r, 2.0 * n - 3.0) * r * r * r;
    for (int j = 0; j < points_per_dim; ++j, ++idx) {
      const double st = std::sin(g.theta_.nodes[j]);
      g.wdens_[idx] = rad * g.theta_.weights[j] * st * st;
    }
  }
  return g;
}

double ZonalGrid::c_n() const {
  if (!c_n_) {
    throw NotNormalized("ZonalGrid: call normalize_measure before integrating");
  }
  return *c_n_;
}

double normalize_measure(ZonalGrid& grid) {
  const double raw =
      detail::pairwise_sum(std::span<const double>(grid.weighted_density()));
  const double c = total_mass(grid.n()) / raw;
  grid.set_c_n(c);
  return c;
}

Complex zonal_integral(const std::function<Complex(double, double)>& g,
                       const ZonalGrid& grid) {
  return zonal_integral_fn(g, grid);
}

namespace {

Complex takahashi_quadrature(Complex alpha, Complex beta, double eta, int k) {
  const Quad1D rule = gauss_legendre_mapped(k, -kPi, kPi);
  std::vector<Complex> terms(k);
  for (int i = 0; i < k; ++i) {
    const double t = rule.nodes[i];
    const Complex eit(std::cos(t), std::sin(t));
    const Complex f = std::exp(-alpha * std::log(1.0 + eta * eit)) *
                      std::exp(-beta * std::log(1.0 + eta * std::conj(eit)));
    terms[i] = rule.weights[i] * std::sin(t) * f;
  }
  return detail::pairwise_sum(std::span<const Complex>(terms));
}

}  // namespace

std::pair<Complex, Complex> takahashi_check(Complex alpha, Complex beta,
                                            double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw DomainError("takahashi_check: eta in [0, 1)");
  }
  Complex lhs = takahashi_quadrature(alpha, beta, eta, 64);
  bool converged = false;
  for (int k = 128; k <= 2048; k *= 2) {
    const Complex refined = takahashi_quadrature(alpha, beta, eta, k);
    const double delta = std::abs(refined - lhs);
    lhs = refined;
    if (delta <= 1e-12 * std::max(1.0, std::abs(refined))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("takahashi_check: quadrature refinement stalled");
  }
  const Complex rhs = (beta - alpha) * eta * kPi * Complex(0.0, 1.0) *
                      hyp2f1(alpha, beta, Complex(2.0, 0.0), eta * eta);
  return {lhs, rhs};
}

namespace {

Complex bateman_quadrature(Complex a, Complex b, Complex sp, Complex c,
                           double z, int k) {
  // Substitution x = sin^2(pi u / 2) doubles the endpoint exponents, so the
  // x^{sp-1} (1-x)^{c-sp-1} weight stays quadrature-friendly down to small
  // positive real parts.
  const Quad1D rule = gauss_legendre_mapped(k, 0.0, 1.0);
  std::vector<Complex> terms(k);
  for (int i = 0; i < k; ++i) {
    const double u = rule.nodes[i];
    const double snh = std::sin(kPi * u / 2.0);
    const double x = snh * snh;
    const double jac = kPi / 2.0 * std::sin(kPi * u);
    const Complex weight = std::exp((sp - 1.0) * std::log(x)) *
                           std::exp((c - sp - 1.0) * std::log1p(-x));
    terms[i] = rule.weights[i] * jac * weight * hyp2f1(a, b, sp, x * z);
  }
  return detail::pairwise_sum(std::span<const Complex>(terms));
}

}  // namespace

std::pair<Complex, Complex> bateman_check(Complex a, Complex b, Complex c,
                                          Complex sp, double z) {
  if (!(c.real() > sp.real() && sp.real() > 0.0)) {
    throw DomainError("bateman_check: requires Re(c) > Re(sp) > 0");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("bateman_check: z in [0, 1)");
  }
  const Complex lhs = hyp2f1(a, b, c, z);
  Complex integral = bateman_quadrature(a, b, sp, c, z, 64);
  bool converged = false;
  for (int k = 128; k <= 2048; k *= 2) {
    const Complex refined = bateman_quadrature(a, b, sp, c, z, k);
    const double delta = std::abs(refined - integral);
    integral = refined;
    if (delta <= 1e-11 * std::max(1.0, std::abs(refined))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("bateman_check: quadrature refinement stalled");
  }
  const Complex rhs = complex_gamma(c) /
                      (complex_gamma(sp) * complex_gamma(c - sp)) * integral;
  return {lhs, rhs};
}

}  // namespace hyppoisson
