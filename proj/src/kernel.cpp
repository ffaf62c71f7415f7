#include "hyppoisson/kernel.hpp"

#include <cmath>
#include <string>

namespace hyppoisson {

Quaternion pairing(const HVector& x, const HVector& omega) {
  if (x.dim() != omega.dim()) {
    throw DomainError("pairing: dimension mismatch");
  }
  Quaternion acc;
  for (int j = 0; j < x.dim(); ++j) {
    acc = acc + x.coords[j].conj() * omega.coords[j];
  }
  return acc;
}

SpectralParams::SpectralParams(int n_, int twice_l_, Complex lambda_)
    : n(n_), twice_l(twice_l_), lambda(lambda_) {
  if (n < 2) throw DomainError("SpectralParams: n >= 2 required");
  if (twice_l < 0) throw DomainError("SpectralParams: twice_l >= 0 required");
}

void SpectralParams::require_decay(const char* who) const {
  if (!has_decay()) {
    throw DomainError(std::string(who) + ": requires Re(i*lambda) > 0");
  }
}

SpectralParams SpectralParams::with_real_i_lambda() const {
  // i*lambda' = Re(i*lambda)  <=>  lambda' = -i Re(i*lambda).
  return SpectralParams(n, twice_l, Complex(0.0, -i_lambda().real()));
}

double chi_l(int twice_l, const Quaternion& q) {
  const double norm = q.norm();
  if (norm == 0.0) throw ZeroQuaternion("chi_l: zero quaternion");
  return gegenbauer_c1(twice_l, q.real() / norm);
}

Complex poisson_kernel(const SpectralParams& params, const HVector& x,
                       const HVector& omega) {
  const double xn = x.norm();
  if (!(xn < 1.0 - 1e-12)) {
    throw DomainError("poisson_kernel: x must lie in the open unit ball");
  }
  if (std::abs(omega.norm() - 1.0) > 1e-12) {
    throw DomainError("poisson_kernel: omega must lie on the unit sphere");
  }
  const Quaternion pair = pairing(x, omega);
  const Quaternion u(1.0 - pair.w, -pair.x, -pair.y, -pair.z);
  const double mod = u.norm();
  // Cauchy-Schwarz gives |1 - <x,w>| >= 1 - |x| > 0.
  const double base = (1.0 - xn * xn) / (mod * mod);
  const Complex power = std::exp(params.s() * std::log(base));
  return power * chi_l(params.twice_l, u);
}

Complex poisson_kernel_radial(const SpectralParams& params, double t, double m,
                              double re_pair) {
  const double mod2 = 1.0 - 2.0 * t * re_pair + t * t * m * m;
  const double base = (1.0 - t * t) / mod2;
  const double cosw = (1.0 - t * re_pair) / std::sqrt(mod2);
  return std::exp(params.s() * std::log(base)) *
         gegenbauer_c1(params.twice_l, cosw);
}

HVector apply(const KElement& k, const HVector& v) {
  const int n = v.dim();
  std::vector<Quaternion> out(n);
  const Quaternion dbar = k.d.conj();
  for (int i = 0; i < n; ++i) {
    Quaternion acc;
    for (int j = 0; j < n; ++j) acc = acc + k.a[i][j] * v.coords[j];
    out[i] = acc * dbar;
  }
  return HVector(std::move(out));
}

KElement random_k_element(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_q = [&] {
    return Quaternion(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  };

  // Columns of A drawn Gaussian, then Gram-Schmidt with the quaternionic
  // pairing <u, v> = sum conj(u_i) v_i.  Scalars multiply from the right so
  // orthogonality survives noncommutativity.
  std::vector<std::vector<Quaternion>> cols(n, std::vector<Quaternion>(n));
  for (auto& col : cols) {
    for (auto& q : col) q = random_q();
  }
  for (int jc = 0; jc < n; ++jc) {
    for (int prev = 0; prev < jc; ++prev) {
      Quaternion proj;
      for (int i = 0; i < n; ++i) {
        proj = proj + cols[prev][i].conj() * cols[jc][i];
      }
      for (int i = 0; i < n; ++i) {
        cols[jc][i] = cols[jc][i] - cols[prev][i] * proj;
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += cols[jc][i].norm_sq();
    nrm = std::sqrt(nrm);
    for (int i = 0; i < n; ++i) cols[jc][i] = (1.0 / nrm) * cols[jc][i];
  }

  KElement k;
  k.a.assign(n, std::vector<Quaternion>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k.a[i][j] = cols[j][i];
  }
  k.d = random_q().unit();
  return k;
}

double sp_unitarity_defect(const KElement& k) {
  const int n = static_cast<int>(k.a.size());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Quaternion acc;
      for (int m = 0; m < n; ++m) {
        acc = acc + k.a[m][i].conj() * k.a[m][j];
      }
      if (i == j) acc.w -= 1.0;
      worst = std::max(worst, acc.norm());
    }
  }
  worst = std::max(worst, std::abs(k.d.norm() - 1.0));
  return worst;
}

}  // namespace hyppoisson
