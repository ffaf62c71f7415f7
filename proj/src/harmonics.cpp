#include "hyppoisson/harmonics.hpp"

#include <cmath>
#include <string>

#include "hyppoisson/special_functions.hpp"

namespace hyppoisson {

void KTypeIndex::require_valid() const {
  if (!valid()) {
    throw DomainError("KTypeIndex (" + std::to_string(p) + ", " +
                      std::to_string(q) + "): need q - p in 2N");
  }
}

std::vector<KTypeIndex> ktype_enumerate(int max_degree) {
  if (max_degree < 0) throw DomainError("ktype_enumerate: max_degree >= 0");
  std::vector<KTypeIndex> out;
  for (int p = 0; p <= max_degree; ++p) {
    for (int q = p; q <= max_degree; q += 2) {
      out.push_back(KTypeIndex{p, q});
    }
  }
  return out;
}

BoundaryPoint BoundaryPoint::zonal(double xi, double phi) {
  BoundaryPoint pt;
  pt.xi = xi;
  pt.phi = phi;
  return pt;
}

HVector BoundaryPoint::induced_vector(int n) const {
  if (n < 2) throw DomainError("BoundaryPoint::induced_vector: n >= 2");
  std::vector<Quaternion> w(n);
  const double c = std::cos(xi);
  const double s = std::sin(xi);
  w[0] = c * (Quaternion(std::cos(phi), 0, 0, 0) + std::sin(phi) * y);
  if (eta.empty()) {
    w[1] = Quaternion(s, 0, 0, 0);
  } else {
    if (static_cast<int>(eta.size()) != n - 1) {
      throw DomainError("BoundaryPoint: eta must have n-1 coordinates");
    }
    for (int j = 1; j < n; ++j) w[j] = s * eta[j - 1];
  }
  return HVector(std::move(w));
}

double zonal_harmonic_radial(const KTypeIndex& kt, int n, double rp,
                             double phi) {
  kt.require_valid();
  if (n < 2) throw DomainError("zonal_harmonic: n >= 2 required");
  const int N = (kt.q - kt.p) / 2;
  const double poly = detail::hyp2f1_terminating_real(
      N, 0.5 * (kt.p + kt.q) + 2.0 * n - 1.0, 2.0 * n - 2.0,
      1.0 - rp * rp);
  return std::pow(rp, kt.p) / (kt.p + 1) * gegenbauer_c1(kt.p, std::cos(phi)) *
         poly;
}

double zonal_harmonic(const KTypeIndex& kt, int n, const BoundaryPoint& pt) {
  return zonal_harmonic_radial(kt, n, std::cos(pt.xi), pt.phi);
}

double zonal_harmonic_printed(const KTypeIndex& kt, int n, double xi,
                              double phi) {
  kt.require_valid();
  const double t = std::tan(xi);
  const int N = (kt.q - kt.p) / 2;
  const double series = detail::hyp2f1_terminating_real(
      N, -0.5 * (kt.p + kt.q + 2.0), 2.0 * n - 2.0, -t * t);
  return std::pow(std::cos(xi), kt.q) / (kt.p + 1) *
         gegenbauer_c1(kt.p, std::cos(phi)) * series;
}

}  // namespace hyppoisson
