#include <cmath>
#include <random>

#include <doctest.h>

#include "hyppoisson/harmonics.hpp"
#include "hyppoisson/quadrature.hpp"
#include "hyppoisson/special_functions.hpp"

using namespace hyppoisson;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("ktype_enumerate") {
  TEST_CASE("smallest cases") {
    const auto zero = ktype_enumerate(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == KTypeIndex{0, 0});

    const auto two = ktype_enumerate(2);
    REQUIRE(two.size() == 4);
    CHECK(two[0] == KTypeIndex{0, 0});
    CHECK(two[1] == KTypeIndex{0, 2});
    CHECK(two[2] == KTypeIndex{1, 1});
    CHECK(two[3] == KTypeIndex{2, 2});
  }

  TEST_CASE("count matches brute force at degree 10") {
    int count = 0;
    for (int p = 0; p <= 10; ++p) {
      for (int q = 0; q <= 10; ++q) {
        if (q >= p && (q - p) % 2 == 0) ++count;
      }
    }
    CHECK(static_cast<int>(ktype_enumerate(10).size()) == count);
    for (const auto& kt : ktype_enumerate(10)) CHECK(kt.valid());
  }

  TEST_CASE("validation") {
    CHECK(!KTypeIndex{5, 2}.valid());
    CHECK(!KTypeIndex{0, 3}.valid());
    CHECK_THROWS_AS((KTypeIndex{5, 2}.require_valid()), DomainError);
    CHECK_THROWS_AS(ktype_enumerate(-1), DomainError);
  }
}

TEST_SUITE("boundary_point") {
  TEST_CASE("induced vector is a unit vector") {
    std::mt19937_64 rng(51);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
      BoundaryPoint pt;
      pt.xi = std::uniform_real_distribution<double>(0.0, kPi / 2)(rng);
      pt.phi = std::uniform_real_distribution<double>(0.0, kPi)(rng);
      pt.y = Quaternion(0.0, g(rng), g(rng), g(rng));
      pt.y = (1.0 / pt.y.norm()) * pt.y;
      const int n = 3;
      std::vector<Quaternion> eta(n - 1);
      for (auto& q : eta) q = Quaternion(g(rng), g(rng), g(rng), g(rng));
      double norm = 0.0;
      for (const auto& q : eta) norm += q.norm_sq();
      norm = std::sqrt(norm);
      for (auto& q : eta) q = (1.0 / norm) * q;
      pt.eta = eta;
      CHECK(pt.induced_vector(n).norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_SUITE("zonal_harmonic") {
  TEST_CASE("phi_{0,0} is identically 1") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
      const double xi = std::uniform_real_distribution<double>(0.0, kPi / 2)(rng);
      const double phi = std::uniform_real_distribution<double>(0.0, kPi)(rng);
      CHECK(zonal_harmonic(KTypeIndex{0, 0}, 2, BoundaryPoint::zonal(xi, phi)) ==
            1.0);
    }
  }

  TEST_CASE("normalized to 1 at the base point") {
    for (const auto& kt : ktype_enumerate(4)) {
      CHECK(zonal_harmonic(kt, 2, BoundaryPoint::zonal(0.0, 0.0)) ==
            doctest::Approx(1.0).epsilon(1e-14));
      // phi -> 0 limit is the same value.
      CHECK(zonal_harmonic(kt, 2, BoundaryPoint::zonal(0.0, 1e-9)) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("depends only on (xi, phi)") {
    std::mt19937_64 rng(59);
    std::normal_distribution<double> g(0.0, 1.0);
    const KTypeIndex kt{1, 3};
    const double xi = 0.7, phi = 1.9;
    const double base = zonal_harmonic(kt, 2, BoundaryPoint::zonal(xi, phi));
    for (int i = 0; i < 10; ++i) {
      BoundaryPoint pt = BoundaryPoint::zonal(xi, phi);
      pt.y = Quaternion(0.0, g(rng), g(rng), g(rng));
      pt.y = (1.0 / pt.y.norm()) * pt.y;
      pt.eta = {Quaternion(g(rng), g(rng), g(rng), g(rng))};
      pt.eta[0] = (1.0 / pt.eta[0].norm()) * pt.eta[0];
      CHECK(zonal_harmonic(kt, 2, pt) == base);
    }
  }

  TEST_CASE("printed series agrees with the transformed polynomial form") {
    for (const auto& kt : ktype_enumerate(5)) {
      for (double xi = 0.05; xi < kPi / 2 - 0.05; xi += 0.17) {
        for (double phi = 0.1; phi < kPi; phi += 0.6) {
          const double printed = zonal_harmonic_printed(kt, 2, xi, phi);
          const double transformed =
              zonal_harmonic(kt, 2, BoundaryPoint::zonal(xi, phi));
          CHECK(std::abs(printed - transformed) <=
                1e-12 * std::max(1.0, std::abs(printed)));
        }
      }
    }
  }

  TEST_CASE("finite at xi = pi/2 where the printed form degenerates") {
    // cos^q(xi) * 2F1(...; -tan^2 xi) is 0 * inf as printed; the polynomial
    // form gives the limit.
    const double v02 =
        zonal_harmonic(KTypeIndex{0, 2}, 2, BoundaryPoint::zonal(kPi / 2, 1.0));
    // 2F1(-1, 4; 2; 1) = 1 - 4/2 = -1.
    CHECK(v02 == doctest::Approx(-1.0).epsilon(1e-12));
    const double v13 =
        zonal_harmonic(KTypeIndex{1, 3}, 2, BoundaryPoint::zonal(kPi / 2, 0.4));
    CHECK(std::isfinite(v13));
    CHECK(std::abs(v13) < 1e-15);  // cos^p factor kills p >= 1
  }

  TEST_CASE("matches the Jacobi polynomial form") {
    // 2F1(-N, (p+q)/2 + 2n - 1; 2n-2; 1-r^2)
    //   = J_N^{(2n-3, p+1)}(2r^2 - 1) / binom(N + 2n - 3, N).
    const int n = 2;
    for (const auto& kt : ktype_enumerate(6)) {
      const int N = (kt.q - kt.p) / 2;
      for (double r = 0.05; r < 1.0; r += 0.2) {
        const double series = detail::hyp2f1_terminating_real(
            N, 0.5 * (kt.p + kt.q) + 2.0 * n - 1.0, 2.0 * n - 2.0,
            1.0 - r * r);
        const double binom = std::tgamma(N + 2.0 * n - 2.0) /
                             (std::tgamma(2.0 * n - 2.0) * std::tgamma(N + 1.0));
        const double jac =
            jacobi_poly(N, 2.0 * n - 3.0, kt.p + 1.0, 2.0 * r * r - 1.0) / binom;
        CHECK(std::abs(series - jac) <= 1e-11 * std::max(1.0, std::abs(jac)));
      }
    }
  }

  TEST_CASE("bounded with sup at the base point") {
    for (const auto& kt : ktype_enumerate(5)) {
      double sup = 0.0;
      double sup_xi = 0.0;
      for (double xi = 0.0; xi <= kPi / 2 + 1e-9; xi += kPi / 160) {
        for (double phi = 0.0; phi <= kPi + 1e-9; phi += kPi / 160) {
          const double v =
              std::abs(zonal_harmonic(kt, 2, BoundaryPoint::zonal(xi, phi)));
          CHECK(std::isfinite(v));
          if (v > sup) {
            sup = v;
            sup_xi = xi;
          }
        }
      }
      // phi_{p,q}(e_1) = 1 dominates (ties elsewhere allowed within epsilon).
      CHECK(sup <= 1.0 + 1e-12);
      if (sup > 1.0 - 1e-9) {
        CHECK((sup_xi < 0.1 || std::abs(sup - 1.0) < 1e-9));
      }
    }
  }

  TEST_CASE("orthogonality of distinct K-types under the zonal measure") {
    ZonalGrid grid = ZonalGrid::build(2, 128);
    normalize_measure(grid);
    const Complex ip = zonal_integral(
        [](double r, double theta) {
          return Complex(zonal_harmonic_radial(KTypeIndex{0, 2}, 2, r, theta) *
                             zonal_harmonic_radial(KTypeIndex{1, 1}, 2, r, theta),
                         0.0);
        },
        grid);
    CHECK(std::abs(ip) < 1e-8);
    // A second pair, including a half-spaced degree.
    const Complex ip2 = zonal_integral(
        [](double r, double theta) {
          return Complex(zonal_harmonic_radial(KTypeIndex{2, 2}, 2, r, theta) *
                             zonal_harmonic_radial(KTypeIndex{0, 0}, 2, r, theta),
                         0.0);
        },
        grid);
    CHECK(std::abs(ip2) < 1e-8);
  }
}
