#include "hyppoisson/spherical.hpp"

#include <array>
#include <cmath>

namespace hyppoisson {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex power_of_one_minus_r2(Complex s, double r) {
  return std::exp(s * std::log1p(-r * r));
}

}  // namespace

Complex elementary_spherical(const SpectralParams& params, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("elementary_spherical: r in [0, 1)");
  }
  const int n = params.n;
  int pole = 0;
  if (detail::near_nonpositive_integer(Complex(2.0 * n, 0.0), pole)) {
    throw ParameterPole("elementary_spherical: 2n at a pole");
  }
  const Complex s = params.s();
  const double l = params.l();
  const double pref = kPi / 4.0 * (2.0 * l + 1.0) * std::tgamma(2.0) *
                      std::tgamma(2.0 * n - 2.0) / std::tgamma(2.0 * n);
  return pref * power_of_one_minus_r2(s, r) *
         hyp2f1(s + l, s - l - 1.0, Complex(2.0 * n, 0.0), r * r);
}

GenSphericalTerms generalized_spherical_terms(const SpectralParams& params,
                                              const KTypeIndex& kt, double r,
                                              RadialExponent exponent) {
  kt.require_valid();
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("generalized_spherical: r in [0, 1)");
  }
  const int n = params.n;
  const int p = kt.p;
  const int q = kt.q;
  const int half_sum = (p + q) / 2;
  const int half_diff = (q - p) / 2;
  const Complex s = params.s();
  const double l = params.l();
  const Complex c(static_cast<double>(q + 2 * n), 0.0);
  const double z = r * r;

  GenSphericalTerms terms;
  terms.radial_exponent = (exponent == RadialExponent::derived_q) ? q : p;
  terms.poch1a = pochhammer(s + l, half_sum + 1);
  terms.poch1b = pochhammer(s - l - 1.0, half_diff);
  terms.poch2a = pochhammer(s - l - 1.0, half_sum + 1);
  terms.poch2b = pochhammer(s + l, half_diff);
  const double hs = static_cast<double>(half_sum);
  const double hd = static_cast<double>(half_diff);
  terms.f1 = hyp2f1(s - l - 1.0 + hd, s + l + 1.0 + hs, c, z);
  terms.f2 = hyp2f1(s + l + hd, s - l + hs, c, z);
  terms.prefactor = kPi / (4.0 * (p + 1)) * std::tgamma(2.0) *
                    std::tgamma(2.0 * n - 2.0) / std::tgamma(q + 2.0 * n) *
                    power_of_one_minus_r2(s, r) *
                    std::pow(r, terms.radial_exponent);
  return terms;
}

Complex generalized_spherical(const SpectralParams& params,
                              const KTypeIndex& kt, double r) {
  return generalized_spherical_terms(params, kt, r).value();
}

Complex c_constant(const SpectralParams& params) {
  params.require_decay("c_constant");
  const Complex s = params.s();
  const double l = params.l();
  return kPi / 4.0 * (2.0 * l + 1.0) * std::tgamma(2.0 * params.n - 2.0) *
         complex_gamma(params.i_lambda()) /
         (complex_gamma(s + l) * complex_gamma(s - l - 1.0));
}

Complex c_constant_gamma2s_form(const SpectralParams& params) {
  params.require_decay("c_constant");
  const Complex s = params.s();
  const double l = params.l();
  return kPi / 4.0 * (2.0 * l + 1.0) * std::tgamma(2.0 * params.n - 2.0) *
         complex_gamma(2.0 * s - 2.0 * params.n - 1.0) /
         (complex_gamma(s + l) * complex_gamma(s - l - 1.0));
}

double delta_constant(const SpectralParams& params) {
  params.require_decay("delta_constant");
  const double mu = params.i_lambda().real();
  const double l = params.l();
  const double smu = 0.5 * (2.0 * params.n + 1.0 + mu);
  const Complex denom = complex_gamma(Complex(smu - l - 1.0, 0.0)) *
                        complex_gamma(Complex(smu + l, 0.0));
  const Complex num = complex_gamma(Complex(2.0 * params.n, 0.0)) *
                      complex_gamma(Complex(mu, 0.0));
  return kPi / 4.0 * (2.0 * l + 1.0) * (num / denom).real();
}

Complex extrapolate_to_limit(std::span<const std::pair<double, Complex>> samples,
                             Complex correction_exponent) {
  if (samples.empty()) {
    throw DomainError("extrapolate_to_limit: no samples");
  }
  if (samples.size() == 1) return samples[0].second;
  if (samples.size() == 2) {
    const auto& [h1, s1] = samples[samples.size() - 2];
    const auto& [h2, s2] = samples[samples.size() - 1];
    return (s2 * h1 - s1 * h2) / (h1 - h2);
  }
  const auto& [h1, s1] = samples[samples.size() - 3];
  const auto& [h2, s2] = samples[samples.size() - 2];
  const auto& [h3, s3] = samples[samples.size() - 1];

  const Complex e = correction_exponent;
  auto f2 = [&](double h) -> Complex {
    if (e.real() >= 1.75) return Complex(h * h, 0.0);
    if (std::abs(e - 1.0) <= 0.2) return Complex(h * std::log(h), 0.0);
    return std::exp(e * std::log(h));
  };

  // Solve the 3x3 system {1, h, f2(h)} by elimination of the constant row.
  const Complex a12(h1, 0.0), a13 = f2(h1);
  const Complex a22(h2, 0.0), a23 = f2(h2);
  const Complex a32(h3, 0.0), a33 = f2(h3);
  // Subtract rows to eliminate L, solve 2x2 for (A, B), back out L.
  const Complex b12 = a12 - a32, b13 = a13 - a33;
  const Complex b22 = a22 - a32, b23 = a23 - a33;
  const Complex r1 = s1 - s3;
  const Complex r2 = s2 - s3;
  const Complex det = b12 * b23 - b13 * b22;
  if (std::abs(det) == 0.0) {
    throw NoConvergence("extrapolate_to_limit: degenerate sample spacing");
  }
  const Complex A = (r1 * b23 - r2 * b13) / det;
  const Complex B = (b12 * r2 - b22 * r1) / det;
  return s3 - A * a32 - B * a33;
}

LimitLawResult limit_law_check(Complex a, Complex b, Complex c, int alpha,
                               int beta, std::span<const double> z_seq) {
  if (alpha < 0 || beta < 0) {
    throw DomainError("limit_law_check: alpha, beta nonnegative integers");
  }
  if (z_seq.empty()) throw DomainError("limit_law_check: empty z sequence");
  const Complex e = a + b + static_cast<double>(alpha + beta) - c - 1.0;
  if (!(e.real() > 0.0)) {
    throw DomainError("limit_law_check: requires Re(a+b+alpha+beta-c-1) > 0");
  }

  const Complex pa_alpha = pochhammer(a, alpha);
  const Complex pb_beta = pochhammer(b, beta);
  const Complex pa_beta = pochhammer(a, beta);
  const Complex pb_alpha = pochhammer(b, alpha);

  std::vector<std::pair<double, Complex>> samples;
  samples.reserve(z_seq.size());
  for (const double z : z_seq) {
    if (!(z > 0.0 && z < 1.0)) {
      throw DomainError("limit_law_check: z values must lie in (0, 1)");
    }
    const double da = static_cast<double>(alpha);
    const double db = static_cast<double>(beta);
    const Complex bracket = pa_alpha * pb_beta * hyp2f1(a + da, b + db, c, z) -
                            pa_beta * pb_alpha * hyp2f1(a + db, b + da, c, z);
    const double h = 1.0 - z;
    samples.emplace_back(h, std::exp(e * std::log(h)) * bracket);
  }

  LimitLawResult out;
  out.extrapolated = extrapolate_to_limit(samples, e);
  out.closed_form = complex_gamma(c) / (complex_gamma(a) * complex_gamma(b)) *
                    complex_gamma(e) * (a - b) *
                    static_cast<double>(alpha - beta);

  if (samples.size() >= 3) {
    // Stabilization guard: the final three-term fit must agree with the
    // two-point fit on the smallest steps to 1e-4 (relative to the larger
    // of 1 and the limit).
    std::span<const std::pair<double, Complex>> tail(
        samples.data() + samples.size() - 2, 2);
    const Complex two_point = extrapolate_to_limit(tail, e);
    const double stab = std::abs(out.extrapolated - two_point) /
                        std::max(1.0, std::abs(out.extrapolated));
    if (stab > 1e-4) {
      throw NoConvergence("limit_law_check: extrapolation unstable (" +
                          std::to_string(stab) + ")");
    }
  }
  return out;
}

}  // namespace hyppoisson
