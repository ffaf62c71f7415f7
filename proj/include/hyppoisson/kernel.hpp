#pragma once

#include <random>
#include <vector>

#include "hyppoisson/quaternion.hpp"
#include "hyppoisson/special_functions.hpp"

namespace hyppoisson {

// Vector in H^n with the Hermitian pairing <x, w> = sum_j conj(x_j) w_j.
// Only this pairing convention is used; on the zonal slice x = t e_1 it
// matches the closed forms everywhere.
struct HVector {
  std::vector<Quaternion> coords;

  HVector() = default;
  explicit HVector(std::vector<Quaternion> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double norm_sq() const {
    double s = 0.0;
    for (const auto& q : coords) s += q.norm_sq();
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  // t * e_1 in H^n.
  static HVector scaled_e1(int n, double t) {
    std::vector<Quaternion> c(n);
    c[0] = Quaternion(t, 0.0, 0.0, 0.0);
    return HVector(std::move(c));
  }
};

Quaternion pairing(const HVector& x, const HVector& omega);

// Spectral data (n, l, lambda) with rho = 2n+1 and s = (i lambda + rho)/2.
// l is stored doubled so half-integral K-types stay exact.
struct SpectralParams {
  int n;
  int twice_l;
  Complex lambda;

  SpectralParams(int n_, int twice_l_, Complex lambda_);

  int rho() const { return 2 * n + 1; }
  double l() const { return 0.5 * twice_l; }
  Complex i_lambda() const { return Complex(-lambda.imag(), lambda.real()); }
  Complex s() const { return (i_lambda() + static_cast<double>(rho())) / 2.0; }

  bool has_decay() const { return i_lambda().real() > 0.0; }
  // Asymptotic operations (Hardy norms, sandwich constants, inversion)
  // require Re(i lambda) > 0.
  void require_decay(const char* who) const;

  // Same (n, l) with i*lambda replaced by its real part; used for the L^1
  // kernel-norm profile behind delta_l.
  SpectralParams with_real_i_lambda() const;
};

// chi_l(q/|q|) = C^1_{2l}(Re(q/|q|)).
double chi_l(int twice_l, const Quaternion& q);

// Generalized Poisson kernel
//   P_{lambda,l}(x, w) = ((1-|x|^2)/|1-<x,w>|^2)^s chi_l((1-<x,w>)/|1-<x,w>|)
// for |x| < 1 and |w| = 1.  The base is a positive real, so the complex
// power is branch-free.
Complex poisson_kernel(const SpectralParams& params, const HVector& x,
                       const HVector& omega);

// Kernel at x = t e_1 against a boundary point whose first coordinate q has
// modulus m and Re(conj(u1) q) = re_pair for the evaluation direction u1.
// For the zonal direction u1 = 1 this is re_pair = m cos(theta).  Everything
// the kernel needs reduces to these two scalars.
Complex poisson_kernel_radial(const SpectralParams& params, double t, double m,
                              double re_pair);

// Element of K = Sp(n) x Sp(1) acting on H^n by v -> (A v) conj(D).
struct KElement {
  std::vector<std::vector<Quaternion>> a;  // n x n, columns orthonormal
  Quaternion d;                            // |d| = 1
};

HVector apply(const KElement& k, const HVector& v);

// Haar-ish random element: Gaussian quaternionic matrix, Gram-Schmidt over
// the quaternionic pairing, plus a random unit quaternion for the Sp(1) slot.
KElement random_k_element(int n, std::mt19937_64& rng);

// max_ij |(conj(A)^T A - I)_ij| -- membership defect used by the tests.
double sp_unitarity_defect(const KElement& k);

}  // namespace hyppoisson
