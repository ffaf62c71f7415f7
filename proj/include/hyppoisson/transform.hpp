#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hyppoisson/harmonics.hpp"
#include "hyppoisson/kernel.hpp"
#include "hyppoisson/quadrature.hpp"
#include "hyppoisson/spherical.hpp"

namespace hyppoisson {

// Finite linear combination of zonal K-type representatives: the computable
// stand-in for boundary data.  Indices must be valid and pairwise distinct.
struct KFiniteFunction {
  std::vector<std::pair<KTypeIndex, Complex>> terms;

  KFiniteFunction() = default;
  explicit KFiniteFunction(std::vector<std::pair<KTypeIndex, Complex>> t);

  static KFiniteFunction single(const KTypeIndex& kt, Complex coeff = 1.0);
  KFiniteFunction scaled(Complex factor) const;

  // Pointwise value sum_t c_t phi_t at reduced coordinates (rp = cos xi).
  double real_profile(int n, double rp, double phi) const;
};

// Spectral form of the transform:
//   (P_{lambda,l} f)(r u) = sum_t c_t Phi_{lambda,l,p,q}(r) phi_{p,q}(u).
Complex poisson_spectral(const SpectralParams& params, const KFiniteFunction& f,
                         double r, const BoundaryPoint& pt);

// Direct quadrature form at x = r e_1 for zonal boundary data f(xi, phi);
// this is the oracle the spectral form is validated against.
Complex poisson_quadrature(const SpectralParams& params,
                           const std::function<Complex(double, double)>& f_zonal,
                           double r, const ZonalGrid& grid);

// Transform at x = r u for the rotated base point u = (cos a + i sin a) e_1.
// The extra degree of freedom enters the kernel only through the first
// imaginary coordinate of the quaternion direction, whose marginal under
// the sphere measure is uniform on [-1, 1], so one more Gauss rule of
// y_points nodes suffices.  Used to test that P^r is scalar on H_{p,q}.
Complex poisson_quadrature_rotated(
    const SpectralParams& params,
    const std::function<Complex(double, double)>& f_zonal, double r,
    double angle, const ZonalGrid& grid, int y_points = 48);

struct HardyNormResult {
  double value = 0.0;
  double argmax_r = 0.0;
  std::vector<std::pair<double, double>> samples;  // (r, scaled norm)
};

// sup over the r grid of (1-r^2)^{-(2n+1-Re i lambda)/2} || (P f)(r .) ||_p.
// The scaling exponent is negative: the spherical functions decay like
// (1-r^2)^{+(2n+1-Re i lambda)/2}, so only this sign gives a finite nonzero
// sup (the growth norm as used in the estimates, not the misprinted sign).
HardyNormResult hardy_norm(const SpectralParams& params,
                           const KFiniteFunction& f, double p_exp,
                           std::span<const double> r_grid,
                           const ZonalGrid& grid);

struct SandwichResult {
  bool lower_ok = false;
  bool upper_ok = false;
  double lower_bound = 0.0;   // |C_l(lambda)| ||f||_p
  double hardy = 0.0;         // ||P f||_{lambda,*,p}
  double upper_bound = 0.0;   // delta_l(lambda) ||f||_p
  double f_norm = 0.0;
  std::vector<double> ratios;  // {lower/hardy, hardy/upper}
};

// rel_slack covers the bias of a finite r grid: the lower bound is attained
// only in the r -> 1 limit, so the grid sup sits below it by
// O((1 - r_max^2)^{min(1, Re i lambda)} log(...)).  The default absorbs that
// gap for r_max ~ 0.9999 across the Re(i lambda) >= 1 range the suite uses;
// the measured ratios are reported either way.
SandwichResult sandwich_check(const SpectralParams& params,
                              const KFiniteFunction& f, double p_exp,
                              std::span<const double> r_grid,
                              const ZonalGrid& grid, double rel_slack = 1e-2);

// g_r with coefficients (1-r^2)^{-(2n+1-Re i lambda)} |Phi_{p,q}(r)|^2 c_t;
// the inversion formula divides by |C_l(lambda)|^2 and lets r -> 1.
// The scale factors are nonnegative reals by construction.
KFiniteFunction inversion_approx(const SpectralParams& params,
                                 const KFiniteFunction& f, double r);

// || phi_{p,q} ||_2^2 under the fitted measure.
double harmonic_norm_sq(const KTypeIndex& kt, int n, const ZonalGrid& grid);

// Coefficient-space L2 norm (K-types are orthogonal).
double kfinite_l2_norm(const KFiniteFunction& f, int n, const ZonalGrid& grid);

// Grid L^p norm of the pointwise combination, p_exp >= 1.
double kfinite_lp_norm(const KFiniteFunction& f, int n, const ZonalGrid& grid,
                       double p_exp);

// || f - g ||_2 in coefficient space over the union of K-types.
double kfinite_l2_distance(const KFiniteFunction& f, const KFiniteFunction& g,
                           int n, const ZonalGrid& grid);

}  // namespace hyppoisson
