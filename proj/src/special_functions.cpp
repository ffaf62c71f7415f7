#include "hyppoisson/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace hyppoisson {

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

Complex lanczos_gamma_half_plane(Complex z) {
  // Requires Re(z) >= 0.5.
  const Complex zz = z - 1.0;
  Complex acc(kLanczos[0], 0.0);
  for (int k = 1; k < static_cast<int>(kLanczos.size()); ++k) {
    acc += kLanczos[k] / (zz + static_cast<double>(k));
  }
  const Complex t = zz + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zz + 0.5) * std::exp(-t) * acc;
}

}  // namespace

namespace detail {

bool near_nonpositive_integer(Complex x, int& n, double tol) {
  if (std::abs(x.imag()) > tol) return false;
  const double r = std::round(x.real());
  if (r > 0.5) return false;
  if (std::abs(x.real() - r) > tol) return false;
  n = static_cast<int>(-r);
  return true;
}

double hyp2f1_terminating_real(int N, double b, double c, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < N; ++k) {
    term *= (static_cast<double>(-N + k) * (b + k)) /
            ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace detail

Complex complex_gamma(Complex z) {
  int pole_index = 0;
  if (detail::near_nonpositive_integer(z, pole_index, 1e-12)) {
    throw PoleError("complex_gamma: argument within 1e-12 of pole at -" +
                    std::to_string(pole_index));
  }
  if (z.real() >= 0.5) return lanczos_gamma_half_plane(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const Complex s = std::sin(kPi * z);
  return kPi / (s * lanczos_gamma_half_plane(1.0 - z));
}

Complex pochhammer(Complex a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative index");
  Complex prod(1.0, 0.0);
  for (int j = 0; j < k; ++j) prod *= a + static_cast<double>(j);
  return prod;
}

namespace {

// Plain power series sum_k (a)_k (b)_k / ((c)_k k!) z^k.  The term update
// is symmetric in (a, b) by construction.  Stops once two consecutive terms
// fall below tol in modulus; the recurrence value of the term keeps
// shrinking even after the partial sum saturates, so an absolute bound on
// the first omitted term is reachable.
SeriesResult series_2f1(Complex a, Complex b, Complex c, double z,
                        double tol) {
  int cpole = 0;
  if (detail::near_nonpositive_integer(c, cpole)) {
    throw ParameterPole("gauss_2f1: c is a nonpositive integer (-" +
                        std::to_string(cpole) + ")");
  }
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  int small_streak = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
            ((c + static_cast<double>(k)) * (k + 1.0)) * z;
    const double mag = std::abs(term);
    if (mag <= tol) {
      if (++small_streak >= 2 || mag == 0.0) {
        return SeriesResult{sum, k + 1, mag};
      }
    } else {
      small_streak = 0;
    }
    sum += term;
  }
  throw NoConvergence("gauss_2f1: series did not reach tolerance within " +
                      std::to_string(kMaxSeriesTerms) + " terms");
}

bool is_terminating(Complex a, Complex b, int& n) {
  int na = 0, nb = 0;
  const bool ta = detail::near_nonpositive_integer(a, na);
  const bool tb = detail::near_nonpositive_integer(b, nb);
  if (ta && tb) {
    n = std::min(na, nb);
    return true;
  }
  if (ta) { n = na; return true; }
  if (tb) { n = nb; return true; }
  return false;
}

}  // namespace

SeriesResult gauss_2f1(Complex a, Complex b, Complex c, double z, double tol) {
  if (!(z >= 0.0 && z < 1.0) || !std::isfinite(z)) {
    throw DomainError("gauss_2f1: z must lie in [0, 1)");
  }
  int nterm = 0;
  const bool terminating = is_terminating(a, b, nterm);
  const Complex cab = c - a - b;
  if (z > 0.85 && cab.real() <= 0.0 && !terminating) {
    // Euler transformation: flips c-a-b to -(c-a-b), giving a series whose
    // terms eventually decrease even as z -> 1.
    const Complex factor = std::exp(cab * std::log1p(-z));
    const double fmag = std::abs(factor);
    SeriesResult inner = series_2f1(c - a, c - b, c, z, tol / fmag);
    return SeriesResult{factor * inner.value, inner.terms_used,
                        fmag * inner.truncation_bound};
  }
  return series_2f1(a, b, c, z, tol);
}

Complex hyp2f1(Complex a, Complex b, Complex c, double z, double tol) {
  return gauss_2f1(a, b, c, z, tol).value;
}

Complex hyp2f1_ext(Complex a, Complex b, Complex c, double x, double tol) {
  if (!(x < 1.0) || !std::isfinite(x)) {
    throw DomainError("hyp2f1_ext: argument must be < 1");
  }
  if (x >= 0.0) return gauss_2f1(a, b, c, x, tol).value;
  int nterm = 0;
  if (is_terminating(a, b, nterm)) {
    int cpole = 0;
    if (detail::near_nonpositive_integer(c, cpole)) {
      throw ParameterPole("hyp2f1_ext: c is a nonpositive integer");
    }
    Complex term(1.0, 0.0);
    Complex sum(1.0, 0.0);
    for (int k = 0; k < nterm; ++k) {
      term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
              ((c + static_cast<double>(k)) * (k + 1.0)) * x;
      sum += term;
    }
    return sum;
  }
  // Pfaff in the second parameter: F(a,b;c;x) = (1-x)^{-b} F(c-a,b;c;w),
  // w = x/(x-1) in (0,1) for x < 0.
  const double w = x / (x - 1.0);
  const Complex factor = std::exp(-b * std::log1p(-x));
  return factor * gauss_2f1(c - a, b, c, w, tol).value;
}

Complex pfaff_transform(Complex a, Complex b, Complex c, double z) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("pfaff_transform: z must lie in [0, 1)");
  }
  if (z == 0.0) return Complex(1.0, 0.0);
  const double w = z / (z - 1.0);
  const Complex factor = std::exp(-a * std::log1p(-z));
  return factor * hyp2f1_ext(a, c - b, c, w);
}

double gegenbauer_c1(int m, double x) {
  if (m < 0) throw DomainError("gegenbauer_c1: negative degree");
  if (std::abs(x) > 1.0 + 1e-12) {
    throw DomainError("gegenbauer_c1: |x| > 1");
  }
  x = std::clamp(x, -1.0, 1.0);
  // C^1_m is the Chebyshev polynomial of the second kind.
  double um1 = 1.0;
  if (m == 0) return um1;
  double u = 2.0 * x;
  for (int j = 2; j <= m; ++j) {
    const double next = 2.0 * x * u - um1;
    um1 = u;
    u = next;
  }
  return u;
}

double jacobi_poly(int n, double alpha, double beta, double x) {
  if (n < 0) throw DomainError("jacobi_poly: negative degree");
  if (alpha <= -1.0 || beta <= -1.0) {
    throw DomainError("jacobi_poly: requires alpha, beta > -1");
  }
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
  for (int j = 2; j <= n; ++j) {
    const double a1 = 2.0 * j * (j + alpha + beta) * (2.0 * j + alpha + beta - 2.0);
    const double a2 = (2.0 * j + alpha + beta - 1.0) *
                      (alpha * alpha - beta * beta);
    const double a3 = (2.0 * j + alpha + beta - 1.0) * (2.0 * j + alpha + beta) *
                      (2.0 * j + alpha + beta - 2.0);
    const double a4 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) *
                      (2.0 * j + alpha + beta);
    const double next = ((a2 + a3 * x) * p - a4 * pm1) / a1;
    pm1 = p;
    p = next;
  }
  return p;
}

double contiguous_relation_residual(Complex a, Complex b, Complex c, double z,
                                    ContiguousSign sign) {
  const Complex f_ap = hyp2f1(a + 1.0, b, c, z);
  const Complex f_bp = hyp2f1(a, b + 1.0, c, z);
  const Complex f = hyp2f1(a, b, c, z);
  const Complex lhs = a * f_ap - b * f_bp;
  const Complex coeff = (sign == ContiguousSign::classical) ? (a - b) : (b - a);
  const Complex rhs = coeff * f;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

}  // namespace hyppoisson
