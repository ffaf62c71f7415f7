#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyppoisson/special_functions.hpp"

namespace hyppoisson {

namespace detail {

// Pairwise (cascade) summation with a fixed recursion pattern, so results
// are bit-reproducible for a given term order.
template <class T>
T pairwise_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T acc{};
    for (const auto& t : v) acc += t;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

}  // namespace detail

struct Quad1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; nodes accurate to ~1e-15, exact through
// degree 2k-1.  1 <= k <= 2048.
Quad1D gauss_legendre(int k);

// Affinely mapped rule on [a, b].
Quad1D gauss_legendre_mapped(int k, double a, double b);

// Total boundary mass under this measure normalization:
//   (pi/4) Gamma(2) Gamma(2n-2) / Gamma(2n).
double total_mass(int n);

// Product Gauss-Legendre grid for the reduced measure
//   c_n (1-r^2)^{2n-3} r^3 sin^2(theta) dtheta dr   on [0,1) x [0,pi].
// The constant c_n must be fitted by normalize_measure before the grid can
// integrate (zonal_integral throws NotNormalized otherwise).
class ZonalGrid {
 public:
  static ZonalGrid build(int n, int points_per_dim);

  int n() const { return n_; }
  int points_per_dim() const { return static_cast<int>(r_.nodes.size()); }

  const Quad1D& r_rule() const { return r_; }
  const Quad1D& theta_rule() const { return theta_; }
  // weight_r * weight_theta * (1-r^2)^{2n-3} r^3 sin^2(theta), row-major
  // over (r index, theta index).
  const std::vector<double>& weighted_density() const { return wdens_; }

  bool normalized() const { return c_n_.has_value(); }
  double c_n() const;
  void set_c_n(double c) { c_n_ = c; }

 private:
  int n_ = 2;
  Quad1D r_;
  Quad1D theta_;
  std::vector<double> wdens_;
  std::optional<double> c_n_;
};

// Fits c_n so that the quadrature of the l = 0, t = 0 spherical-function
// integrand (identically 1) reproduces the closed-form boundary mass, then
// freezes it on the grid.  Returns the fitted constant (analytically 1 in
// this realization of the reduced measure).
double normalize_measure(ZonalGrid& grid);

// c_n * sum_ij w_ij g(r_i, theta_j) density_ij with pairwise summation.
template <class F>
Complex zonal_integral_fn(F&& g, const ZonalGrid& grid) {
  const double cn = grid.c_n();  // throws NotNormalized if unfitted
  const auto& rs = grid.r_rule().nodes;
  const auto& ts = grid.theta_rule().nodes;
  const auto& wd = grid.weighted_density();
  std::vector<Complex> terms(rs.size() * ts.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j, ++idx) {
      terms[idx] = wd[idx] * g(rs[i], ts[j]);
    }
  }
  return cn * detail::pairwise_sum(std::span<const Complex>(terms));
}

Complex zonal_integral(const std::function<Complex(double, double)>& g,
                       const ZonalGrid& grid);

// Takahashi's integral:
//   int_{-pi}^{pi} sin(t) dt / ((1+eta e^{it})^alpha (1+eta e^{-it})^beta)
//     = (beta - alpha) eta pi i 2F1(alpha, beta; 2; eta^2).
// Returns {quadrature lhs, closed-form rhs}; the suite compares them.
std::pair<Complex, Complex> takahashi_check(Complex alpha, Complex beta,
                                            double eta);

// Bateman's integral formula for Re(c) > Re(sp) > 0:
//   2F1(a,b;c;z) = Gamma(c)/(Gamma(sp)Gamma(c-sp))
//                  int_0^1 x^{sp-1} (1-x)^{c-sp-1} 2F1(a,b;sp;xz) dx.
// Returns {series lhs, quadrature rhs}.
std::pair<Complex, Complex> bateman_check(Complex a, Complex b, Complex c,
                                          Complex sp, double z);

}  // namespace hyppoisson
