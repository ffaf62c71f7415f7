#pragma once

#include <vector>

#include "hyppoisson/kernel.hpp"
#include "hyppoisson/quaternion.hpp"

namespace hyppoisson {

// Peter-Weyl index (p, q) with q - p a nonnegative even integer.
struct KTypeIndex {
  int p = 0;
  int q = 0;

  bool valid() const { return p >= 0 && q >= p && (q - p) % 2 == 0; }
  void require_valid() const;

  friend bool operator==(const KTypeIndex& a, const KTypeIndex& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const KTypeIndex& a, const KTypeIndex& b) {
    return a.p < b.p || (a.p == b.p && a.q < b.q);
  }
};

// All (p, q) with q <= max_degree, sorted lexicographically.
std::vector<KTypeIndex> ktype_enumerate(int max_degree);

// Boundary point of B(H^n) in the (xi, phi) coordinates:
//   w_1 = cos(xi) (cos(phi) + y sin(phi)),  w_j = eta_j sin(xi),
// with y a unit imaginary quaternion and eta a unit vector in H^{n-1}.
// The zonal harmonics depend only on (xi, phi); y and eta are carried so
// tests can randomize them and assert exactly that.
struct BoundaryPoint {
  double xi = 0.0;
  double phi = 0.0;
  Quaternion y{0.0, 1.0, 0.0, 0.0};
  std::vector<Quaternion> eta;  // empty means "first coordinate of H^{n-1}"

  static BoundaryPoint zonal(double xi, double phi);

  // The induced vector in H^n (unit norm by construction).
  HVector induced_vector(int n) const;
};

// Zonal spherical harmonic phi_{p,q}.  Evaluated through the transformed
// polynomial form
//   cos^p(xi)/(p+1) * U_p(cos phi) * 2F1(-(q-p)/2, (p+q)/2+2n-1; 2n-2; sin^2 xi)
// which is finite everywhere (the printed -tan^2 xi form is indeterminate
// at xi = pi/2); the phi-factor is the degree-p Chebyshev U polynomial, so
// phi in {0, pi} needs no special casing.
double zonal_harmonic(const KTypeIndex& kt, int n, const BoundaryPoint& pt);

// Same function on the reduced ball coordinates: rp = cos(xi) in [0, 1],
// phi the quaternion angle.  This is the form the quadrature grid consumes.
double zonal_harmonic_radial(const KTypeIndex& kt, int n, double rp,
                             double phi);

// The series as printed (argument -tan^2 xi); requires xi < pi/2.
// Kept for cross-checks against the transformed form.
double zonal_harmonic_printed(const KTypeIndex& kt, int n, double xi,
                              double phi);

}  // namespace hyppoisson
