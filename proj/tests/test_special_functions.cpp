#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "hyppoisson/special_functions.hpp"

using namespace hyppoisson;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Polynomial (Neville) extrapolation of samples (h_i, S_i) to h = 0.
Complex neville_to_zero(std::vector<double> h, std::vector<Complex> s) {
  const std::size_t m = h.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      s[i] = (h[i - j] * s[i] - h[i] * s[i - 1]) / (h[i - j] - h[i]);
      if (i == j) break;
    }
  }
  return s[m - 1];
}

}  // namespace

TEST_SUITE("complex_gamma") {
  TEST_CASE("classical values") {
    CHECK(rel(complex_gamma(Complex(5.0, 0.0)), Complex(24.0, 0.0)) < 1e-13);
    CHECK(rel(complex_gamma(Complex(0.5, 0.0)),
              Complex(std::sqrt(kPi), 0.0)) < 1e-13);
    CHECK(rel(complex_gamma(Complex(1.0, 0.0)), Complex(1.0, 0.0)) < 1e-13);
  }

  TEST_CASE("recurrence oracle at 1.5 + 2i") {
    const Complex z(0.5, 2.0);
    const Complex lhs = complex_gamma(z + 1.0);
    const Complex rhs = z * complex_gamma(z);
    CHECK(rel(lhs, rhs) < 1e-13);
  }

  TEST_CASE("functional equation on random arguments") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> box(-10.0, 10.0);
    int tested = 0;
    while (tested < 200) {
      const Complex z(box(rng), box(rng));
      if (std::abs(z) > 10.0) continue;
      // Stay away from the poles and from huge reflection cancellation.
      int idx = 0;
      if (detail::near_nonpositive_integer(z, idx, 1e-3)) continue;
      ++tested;
      CHECK(rel(complex_gamma(z + 1.0), z * complex_gamma(z)) < 1e-12);
    }
  }

  TEST_CASE("reflection formula spot check") {
    const Complex z(-1.3, 0.4);
    const Complex product = complex_gamma(z) * complex_gamma(1.0 - z);
    const Complex expected = kPi / std::sin(kPi * z);
    CHECK(rel(product, expected) < 1e-12);
  }

  TEST_CASE("poles raise") {
    CHECK_THROWS_AS(complex_gamma(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(complex_gamma(Complex(-3.0, 0.0)), PoleError);
    CHECK_THROWS_AS(complex_gamma(Complex(-1.0, 1e-13)), PoleError);
    CHECK_NOTHROW(complex_gamma(Complex(-1.5, 0.0)));
  }
}

TEST_SUITE("pochhammer") {
  TEST_CASE("empty product and factorial") {
    CHECK(pochhammer(Complex(2.3, -0.7), 0) == Complex(1.0, 0.0));
    CHECK(rel(pochhammer(Complex(1.0, 0.0), 6), Complex(720.0, 0.0)) < 1e-15);
  }

  TEST_CASE("splitting identity (a)_{k+n} = (a)_k (a+k)_n") {
    const Complex a(0.3, 0.7);
    const Complex lhs = pochhammer(a, 7);
    const Complex rhs = pochhammer(a, 3) * pochhammer(a + 3.0, 4);
    CHECK(rel(lhs, rhs) < 1e-14);
  }
}

TEST_SUITE("gauss_2f1") {
  TEST_CASE("value 1 at z = 0") {
    const SeriesResult r = gauss_2f1(Complex(1.3, 0.4), Complex(-0.2, 1.0),
                                     Complex(2.5, 0.0), 0.0);
    CHECK(r.value == Complex(1.0, 0.0));
  }

  TEST_CASE("logarithm oracle: 2F1(1,1;2;z) = -log(1-z)/z") {
    for (const double z : {0.1, 0.5, 0.85, 0.97}) {
      const Complex got = hyp2f1(1.0, 1.0, 2.0, z);
      const double want = -std::log1p(-z) / z;
      CHECK(rel(got, Complex(want, 0.0)) < 1e-13);
    }
  }

  TEST_CASE("terminating series stops after N+1 terms") {
    const SeriesResult r = gauss_2f1(Complex(-3.0, 0.0), Complex(1.7, 0.3),
                                     Complex(3.1, 0.0), 0.6);
    CHECK(r.terms_used == 4);
    CHECK(r.truncation_bound == 0.0);
    // Compare against the explicit cubic.
    Complex expect(0.0, 0.0);
    Complex term(1.0, 0.0);
    for (int k = 0; k <= 3; ++k) {
      expect += term;
      term *= (Complex(-3.0, 0.0) + static_cast<double>(k)) *
              (Complex(1.7, 0.3) + static_cast<double>(k)) /
              ((Complex(3.1, 0.0) + static_cast<double>(k)) * (k + 1.0)) * 0.6;
    }
    CHECK(rel(r.value, expect) < 1e-15);
  }

  TEST_CASE("symmetric in (a, b) bitwise") {
    const Complex a(1.1, -0.6), b(0.4, 0.9), c(3.2, 0.1);
    for (const double z : {0.3, 0.9}) {  // plain and Euler-routed branches
      CHECK(hyp2f1(a, b, c, z) == hyp2f1(b, a, c, z));
    }
  }

  TEST_CASE("truncation bound honors the tolerance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
      const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
      const Complex c(2.0 + std::abs(u(rng)), u(rng));
      const double z = 0.45 * (u(rng) + 2.0) / 2.0;
      const double tol = 1e-12;
      const SeriesResult r = gauss_2f1(a, b, c, z, tol);
      CHECK(r.truncation_bound <= tol);
    }
  }

  TEST_CASE("Gauss summation via Richardson extrapolation to z = 1") {
    const Complex a(0.3, 0.2), b(0.9, -0.2), c(10.5, 0.0);
    std::vector<double> hs = {0.32, 0.16, 0.08, 0.04, 0.02, 0.01};
    std::vector<Complex> vals;
    for (const double h : hs) vals.push_back(hyp2f1(a, b, c, 1.0 - h));
    const Complex extrapolated = neville_to_zero(hs, vals);
    const Complex gauss = complex_gamma(c) * complex_gamma(c - a - b) /
                          (complex_gamma(c - a) * complex_gamma(c - b));
    CHECK(rel(extrapolated, gauss) < 1e-8);
  }

  TEST_CASE("near-one arguments meet tolerance through the Euler route") {
    // Re(c-a-b) < 0 here, so z > 0.85 evaluations switch representation;
    // cross-check against the raw series at a stricter tolerance.
    const Complex a(2.1, 0.5), b(1.4, -0.5), c(3.0, 0.0);
    for (const double z : {0.9, 0.99, 0.998}) {
      const Complex accel = hyp2f1(a, b, c, z, 1e-12);
      const Complex raw = [&] {
        Complex term(1.0, 0.0), sum(1.0, 0.0);
        for (int k = 0; k < 2000000; ++k) {
          term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                  ((c + static_cast<double>(k)) * (k + 1.0)) * z;
          sum += term;
          if (std::abs(term) < 1e-16 * std::abs(sum)) break;
        }
        return sum;
      }();
      CHECK(rel(accel, raw) < 1e-11);
    }
  }

  TEST_CASE("error taxonomy") {
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, Complex(0.0, 0.0), 0.5), ParameterPole);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, Complex(-2.0, 0.0), 0.5), ParameterPole);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, -0.1), DomainError);
    // Re(c-a-b) barely positive keeps the raw series, which cannot reach
    // tolerance before the term cap this close to 1.
    CHECK_THROWS_AS(gauss_2f1(Complex(0.5, 0.0), Complex(0.45, 0.0),
                              Complex(1.0, 0.0), 0.99999),
                    NoConvergence);
  }
}

TEST_SUITE("pfaff_transform") {
  TEST_CASE("z = 0 gives 1") {
    CHECK(pfaff_transform(Complex(0.7, 0.1), Complex(1.2, 0.0),
                          Complex(2.0, 0.0), 0.0) == Complex(1.0, 0.0));
  }

  TEST_CASE("agrees with the direct series on [0, 0.8]") {
    const Complex a(0.5, 0.0), b(0.5, 0.0), c(1.0, 0.0);
    CHECK(rel(pfaff_transform(a, b, c, 0.5), hyp2f1(a, b, c, 0.5)) < 1e-10);
    const Complex a2(1.3, 0.4), b2(0.6, -0.2), c2(2.7, 0.3);
    for (const double z : {0.1, 0.35, 0.55, 0.7, 0.8}) {
      CHECK(rel(pfaff_transform(a2, b2, c2, z), hyp2f1(a2, b2, c2, z)) < 1e-10);
    }
  }

  TEST_CASE("terminating transformation identity with negative argument") {
    // 2F1((p-q)/2, -(p+q+2)/2; 2n-2; (r^2-1)/r^2)
    //   = r^{p-q} 2F1((p-q)/2, (p+q)/2+2n-1; 2n-2; 1-r^2)
    // at (p, q, n, r) = (1, 3, 2, 0.7).
    const double r = 0.7;
    const double x = (r * r - 1.0) / (r * r);
    const Complex lhs = hyp2f1_ext(Complex(-1.0, 0.0), Complex(-3.0, 0.0),
                                   Complex(2.0, 0.0), x);
    const Complex rhs = std::pow(r, -2.0) *
                        hyp2f1(Complex(-1.0, 0.0), Complex(5.0, 0.0),
                               Complex(2.0, 0.0), 1.0 - r * r);
    CHECK(rel(lhs, rhs) < 1e-13);
  }

  TEST_CASE("negative-argument extension against terminating sums") {
    // Nonterminating parameters at x < -1 go through the Pfaff map; compare
    // with a terminating case computable both ways.
    const Complex a(-2.0, 0.0), b(1.7, 0.0), c(3.5, 0.0);
    const double x = -2.3;
    const Complex direct = hyp2f1_ext(a, b, c, x);
    Complex expect(1.0, 0.0);
    expect += a * b / c * x;
    expect += a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0) * 2.0) * x * x;
    CHECK(rel(direct, expect) < 1e-14);
    // Nonterminating spot value via the transform identity itself:
    // F(a,b;c;x) = (1-x)^{-b} F(c-a, b; c; x/(x-1)) evaluated both ways.
    const Complex an(0.8, 0.3), bn(1.1, -0.2), cn(2.4, 0.0);
    const Complex via_ext = hyp2f1_ext(an, bn, cn, x);
    const Complex manual = std::pow(Complex(1.0 - x, 0.0), -bn) *
                           hyp2f1(cn - an, bn, cn, x / (x - 1.0));
    CHECK(rel(via_ext, manual) < 1e-14);
  }
}

TEST_SUITE("gegenbauer_c1") {
  TEST_CASE("degree zero and endpoint values") {
    CHECK(gegenbauer_c1(0, -0.3) == 1.0);
    for (const int m : {1, 4, 9}) {
      CHECK(gegenbauer_c1(m, 1.0) == doctest::Approx(m + 1.0).epsilon(1e-14));
      CHECK(gegenbauer_c1(m, -1.0) ==
            doctest::Approx((m % 2 == 0 ? 1.0 : -1.0) * (m + 1.0))
                .epsilon(1e-14));
    }
  }

  TEST_CASE("trigonometric oracle") {
    const double theta = 0.3;
    const double want = std::sin(5.0 * theta) / std::sin(theta);
    CHECK(gegenbauer_c1(4, std::cos(theta)) ==
          doctest::Approx(want).epsilon(1e-12));
  }

  TEST_CASE("sin((m+1)theta) identity across degrees") {
    for (int m = 0; m <= 10; ++m) {
      for (double theta = 0.01; theta < kPi - 0.01; theta += 0.237) {
        const double lhs = gegenbauer_c1(m, std::cos(theta)) * std::sin(theta);
        const double rhs = std::sin((m + 1.0) * theta);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }

  TEST_CASE("domain guard") {
    CHECK_THROWS_AS(gegenbauer_c1(3, 1.5), DomainError);
  }
}

TEST_SUITE("jacobi_poly") {
  TEST_CASE("low degrees") {
    CHECK(jacobi_poly(0, 0.5, 1.5, 0.2) == 1.0);
    const double alpha = 0.7, beta = 2.1, x = -0.4;
    const double want = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    CHECK(jacobi_poly(1, alpha, beta, x) == doctest::Approx(want).epsilon(1e-14));
  }

  TEST_CASE("matches terminating 2F1 definition up to N = 20") {
    // Reference sum in extended precision: the alternating terminating
    // series cancels badly in plain double for large N.
    auto terminating_ld = [](int N, long double b, long double c,
                             long double x) {
      long double term = 1.0L, sum = 1.0L;
      for (int k = 0; k < N; ++k) {
        term *= (static_cast<long double>(-N + k) * (b + k)) /
                ((c + k) * (k + 1.0L)) * x;
        sum += term;
      }
      return static_cast<double>(sum);
    };
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(-0.6, 2.5);
    std::uniform_real_distribution<double> ut(0.0, 0.7);
    for (int N = 0; N <= 20; ++N) {
      const double alpha = ua(rng), beta = ua(rng), t = ut(rng);
      const double binom =
          pochhammer(Complex(alpha + 1.0, 0.0), N).real() / std::tgamma(N + 1.0);
      const double via_2f1 =
          binom * terminating_ld(N, N + alpha + beta + 1.0, alpha + 1.0, t * t);
      const double direct = jacobi_poly(N, alpha, beta, 1.0 - 2.0 * t * t);
      CHECK(std::abs(direct - via_2f1) <=
            1e-11 * std::max(1.0, std::abs(via_2f1)));
    }
  }

  TEST_CASE("parameter guard") {
    CHECK_THROWS_AS(jacobi_poly(3, -1.0, 0.5, 0.1), DomainError);
  }
}

TEST_SUITE("contiguous_relation") {
  TEST_CASE("a = b is exact by symmetry") {
    const Complex a(1.3, 0.4);
    CHECK(contiguous_relation_residual(a, a, Complex(2.7, 0.0), 0.55) == 0.0);
  }

  TEST_CASE("classical sign fits, printed sign does not") {
    const Complex a(1.2, 0.5), b(0.4, 0.0), c(3.0, 0.0);
    const double z = 0.6;
    CHECK(contiguous_relation_residual(a, b, c, z) < 1e-10);
    CHECK(contiguous_relation_residual(a, b, c, z, ContiguousSign::printed) >
          0.1);
  }

  TEST_CASE("z = 0 adjudicates the sign algebraically") {
    // All three functions are 1 at z = 0, so LHS = a-b; the printed RHS
    // (b-a) leaves a residual of 2|a-b| / max(1, |b-a|).
    const Complex a(1.9, 0.0), b(0.3, 0.0);
    const double printed =
        contiguous_relation_residual(a, b, Complex(2.0, 0.0), 0.0,
                                     ContiguousSign::printed);
    CHECK(printed == doctest::Approx(2.0 * std::abs(a - b) /
                                     std::max(1.0, std::abs(b - a)))
                         .epsilon(1e-12));
    CHECK(contiguous_relation_residual(a, b, Complex(2.0, 0.0), 0.0) < 1e-15);
  }
}
