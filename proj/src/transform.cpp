#include "hyppoisson/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hyppoisson {

namespace {

// Per-grid-node values of each zonal harmonic appearing in f.
std::vector<std::vector<double>> harmonic_values_on_grid(
    const KFiniteFunction& f, int n, const ZonalGrid& grid) {
  const auto& rs = grid.r_rule().nodes;
  const auto& ts = grid.theta_rule().nodes;
  std::vector<std::vector<double>> values;
  values.reserve(f.terms.size());
  for (const auto& [kt, coeff] : f.terms) {
    std::vector<double> v(rs.size() * ts.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j, ++idx) {
        v[idx] = zonal_harmonic_radial(kt, n, rs[i], ts[j]);
      }
    }
    values.push_back(std::move(v));
  }
  return values;
}

// L^p norm over the boundary of the combination sum_t w_t * (values_t) for
// already-merged complex node weights.
double lp_norm_from_node_values(const std::vector<Complex>& node_values,
                                const ZonalGrid& grid, double p_exp) {
  const double cn = grid.c_n();
  const auto& wd = grid.weighted_density();
  std::vector<double> terms(node_values.size());
  for (std::size_t i = 0; i < node_values.size(); ++i) {
    terms[i] = wd[i] * std::pow(std::norm(node_values[i]), 0.5 * p_exp);
  }
  const double integral =
      cn * detail::pairwise_sum(std::span<const double>(terms));
  return std::pow(integral, 1.0 / p_exp);
}

}  // namespace

KFiniteFunction::KFiniteFunction(std::vector<std::pair<KTypeIndex, Complex>> t)
    : terms(std::move(t)) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i].first.require_valid();
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].first == terms[j].first) {
        throw DomainError("KFiniteFunction: duplicate K-type index");
      }
    }
  }
}

KFiniteFunction KFiniteFunction::single(const KTypeIndex& kt, Complex coeff) {
  return KFiniteFunction({{kt, coeff}});
}

KFiniteFunction KFiniteFunction::scaled(Complex factor) const {
  KFiniteFunction out = *this;
  for (auto& [kt, coeff] : out.terms) coeff *= factor;
  return out;
}

double KFiniteFunction::real_profile(int n, double rp, double phi) const {
  double acc = 0.0;
  for (const auto& [kt, coeff] : terms) {
    acc += coeff.real() * zonal_harmonic_radial(kt, n, rp, phi);
  }
  return acc;
}

Complex poisson_spectral(const SpectralParams& params, const KFiniteFunction& f,
                         double r, const BoundaryPoint& pt) {
  Complex acc(0.0, 0.0);
  for (const auto& [kt, coeff] : f.terms) {
    acc += coeff * generalized_spherical(params, kt, r) *
           zonal_harmonic(kt, params.n, pt);
  }
  return acc;
}

Complex poisson_quadrature(const SpectralParams& params,
                           const std::function<Complex(double, double)>& f_zonal,
                           double r, const ZonalGrid& grid) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("poisson_quadrature: r in [0, 1)");
  }
  return zonal_integral_fn(
      [&](double rp, double theta) {
        const Complex kernel = poisson_kernel_radial(
            params, r, rp, rp * std::cos(theta));
        return kernel * f_zonal(std::acos(std::min(rp, 1.0)), theta);
      },
      grid);
}

Complex poisson_quadrature_rotated(
    const SpectralParams& params,
    const std::function<Complex(double, double)>& f_zonal, double r,
    double angle, const ZonalGrid& grid, int y_points) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("poisson_quadrature_rotated: r in [0, 1)");
  }
  const Quad1D yrule = gauss_legendre(y_points);
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  return zonal_integral_fn(
      [&](double rp, double theta) {
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        Complex avg(0.0, 0.0);
        for (int m = 0; m < y_points; ++m) {
          const double re_pair =
              rp * (ca * ct + sa * st * yrule.nodes[m]);
          avg += yrule.weights[m] *
                 poisson_kernel_radial(params, r, rp, re_pair);
        }
        avg *= 0.5;  // uniform marginal of y_1 on [-1, 1]
        return avg * f_zonal(std::acos(std::min(rp, 1.0)), theta);
      },
      grid);
}

HardyNormResult hardy_norm(const SpectralParams& params,
                           const KFiniteFunction& f, double p_exp,
                           std::span<const double> r_grid,
                           const ZonalGrid& grid) {
  params.require_decay("hardy_norm");
  if (p_exp < 2.0) throw DomainError("hardy_norm: p_exp >= 2");
  const int n = params.n;
  const double scale_exp =
      -0.5 * (2.0 * n + 1.0 - params.i_lambda().real());

  const auto values = harmonic_values_on_grid(f, n, grid);
  const std::size_t node_count =
      values.empty() ? 0 : values.front().size();

  HardyNormResult out;
  out.samples.reserve(r_grid.size());
  for (const double r : r_grid) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw DomainError("hardy_norm: r grid must lie in [0, 1)");
    }
    double norm = 0.0;
    if (!f.terms.empty()) {
      std::vector<Complex> node_values(node_count, Complex(0.0, 0.0));
      for (std::size_t t = 0; t < f.terms.size(); ++t) {
        const Complex w = f.terms[t].second *
                          generalized_spherical(params, f.terms[t].first, r);
        for (std::size_t i = 0; i < node_count; ++i) {
          node_values[i] += w * values[t][i];
        }
      }
      norm = lp_norm_from_node_values(node_values, grid, p_exp);
    }
    const double scaled = std::pow(1.0 - r * r, scale_exp) * norm;
    out.samples.emplace_back(r, scaled);
    if (scaled >= out.value) {
      out.value = scaled;
      out.argmax_r = r;
    }
  }
  return out;
}

SandwichResult sandwich_check(const SpectralParams& params,
                              const KFiniteFunction& f, double p_exp,
                              std::span<const double> r_grid,
                              const ZonalGrid& grid, double rel_slack) {
  params.require_decay("sandwich_check");
  SandwichResult out;
  out.f_norm = kfinite_lp_norm(f, params.n, grid, p_exp);
  out.hardy = hardy_norm(params, f, p_exp, r_grid, grid).value;
  out.lower_bound = std::abs(c_constant(params)) * out.f_norm;
  out.upper_bound = delta_constant(params) * out.f_norm;
  const double slack = rel_slack * std::max(out.lower_bound, out.hardy);
  out.lower_ok = out.lower_bound <= out.hardy + slack;
  out.upper_ok = out.hardy <= out.upper_bound + slack;
  if (out.hardy > 0.0 && out.upper_bound > 0.0) {
    out.ratios = {out.lower_bound / out.hardy, out.hardy / out.upper_bound};
  }
  return out;
}

KFiniteFunction inversion_approx(const SpectralParams& params,
                                 const KFiniteFunction& f, double r) {
  params.require_decay("inversion_approx");
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("inversion_approx: r in [0, 1)");
  }
  const double mu = params.i_lambda().real();
  const double scale = std::pow(1.0 - r * r, -(2.0 * params.n + 1.0 - mu));
  KFiniteFunction out = f;
  for (auto& [kt, coeff] : out.terms) {
    const double mag = std::norm(generalized_spherical(params, kt, r));
    coeff *= scale * mag;
  }
  return out;
}

double harmonic_norm_sq(const KTypeIndex& kt, int n, const ZonalGrid& grid) {
  kt.require_valid();
  const double cn = grid.c_n();
  const auto& rs = grid.r_rule().nodes;
  const auto& ts = grid.theta_rule().nodes;
  const auto& wd = grid.weighted_density();
  std::vector<double> terms(wd.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j, ++idx) {
      const double v = zonal_harmonic_radial(kt, n, rs[i], ts[j]);
      terms[idx] = wd[idx] * v * v;
    }
  }
  return cn * detail::pairwise_sum(std::span<const double>(terms));
}

double kfinite_l2_norm(const KFiniteFunction& f, int n, const ZonalGrid& grid) {
  double acc = 0.0;
  for (const auto& [kt, coeff] : f.terms) {
    acc += std::norm(coeff) * harmonic_norm_sq(kt, n, grid);
  }
  return std::sqrt(acc);
}

double kfinite_lp_norm(const KFiniteFunction& f, int n, const ZonalGrid& grid,
                       double p_exp) {
  if (p_exp < 1.0) throw DomainError("kfinite_lp_norm: p_exp >= 1");
  const auto values = harmonic_values_on_grid(f, n, grid);
  const std::size_t node_count = values.empty() ? 0 : values.front().size();
  if (node_count == 0) return 0.0;
  std::vector<Complex> node_values(node_count, Complex(0.0, 0.0));
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    for (std::size_t i = 0; i < node_count; ++i) {
      node_values[i] += f.terms[t].second * values[t][i];
    }
  }
  return lp_norm_from_node_values(node_values, grid, p_exp);
}

double kfinite_l2_distance(const KFiniteFunction& f, const KFiniteFunction& g,
                           int n, const ZonalGrid& grid) {
  std::map<std::pair<int, int>, Complex> diff;
  for (const auto& [kt, coeff] : f.terms) diff[{kt.p, kt.q}] += coeff;
  for (const auto& [kt, coeff] : g.terms) diff[{kt.p, kt.q}] -= coeff;
  double acc = 0.0;
  for (const auto& [pq, coeff] : diff) {
    acc += std::norm(coeff) *
           harmonic_norm_sq(KTypeIndex{pq.first, pq.second}, n, grid);
  }
  return std::sqrt(acc);
}

}  // namespace hyppoisson
