#include "hyppoisson/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include <json.hpp>

#include "hyppoisson/transform.hpp"

namespace hyppoisson {

namespace {

using Clock = std::chrono::steady_clock;

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// std/|mean| of a sample of complex ratios; the flatness measure used by
// the proportionality checks.
double flatness(const std::vector<Complex>& v) {
  Complex mean(0.0, 0.0);
  for (const auto& z : v) mean += z;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (const auto& z : v) var += std::norm(z - mean);
  var /= static_cast<double>(v.size());
  return std::sqrt(var) / std::abs(mean);
}

Complex mean_of(const std::vector<Complex>& v) {
  Complex mean(0.0, 0.0);
  for (const auto& z : v) mean += z;
  return mean / static_cast<double>(v.size());
}

// N-th derivative of g at x by a trapezoid rule on a Cauchy circle of
// radius rho.  No subtractive cancellation, so the result stays near full
// precision where difference stencils bottom out around 1e-7 for N = 4.
double cauchy_nth_derivative(const std::function<Complex(Complex)>& g,
                             int order, double x, double rho) {
  constexpr int kPoints = 64;
  constexpr double kTau = 6.283185307179586476925287;
  Complex acc(0.0, 0.0);
  for (int j = 0; j < kPoints; ++j) {
    const double theta = kTau * j / kPoints;
    const Complex dir(std::cos(theta), std::sin(theta));
    const Complex anti(std::cos(order * theta), -std::sin(order * theta));
    acc += g(Complex(x, 0.0) + rho * dir) * anti;
  }
  double nfact = 1.0;
  for (int j = 2; j <= order; ++j) nfact *= j;
  return (acc / static_cast<double>(kPoints)).real() * nfact /
         std::pow(rho, order);
}

double jacobi_rodrigues_oracle(int N, double alpha, double beta, double x) {
  auto g = [&](Complex t) {
    return std::pow(1.0 - t, N + alpha) * std::pow(1.0 + t, N + beta);
  };
  // The factor is analytic up to the branch points at +-1; stay well inside.
  const double rho = 0.3 * (1.0 - std::abs(x));
  const double dN = cauchy_nth_derivative(g, N, x, rho);
  double nfact = 1.0;
  for (int j = 2; j <= N; ++j) nfact *= j;
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  return sign /
         (std::pow(2.0, N) * nfact * std::pow(1.0 - x, alpha) *
          std::pow(1.0 + x, beta)) *
         dN;
}

struct Sweep {
  std::mt19937_64 rng;
  explicit Sweep(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return Complex(uniform(re_lo, re_hi), uniform(im_lo, im_hi));
  }
};

std::uint64_t check_seed(std::uint64_t base, const std::string& name) {
  std::uint64_t h = base;
  for (const unsigned char c : name) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

// lambda such that i*lambda equals the given value.
Complex lambda_for(Complex i_lambda) {
  return Complex(i_lambda.imag(), -i_lambda.real());
}

struct SuiteContext {
  const VerifySettings& settings;
  VerifyReport& report;
  std::map<int, ZonalGrid> grids;

  const ZonalGrid& grid_for(int n) {
    auto it = grids.find(n);
    if (it == grids.end()) {
      ZonalGrid g = ZonalGrid::build(n, settings.grid_points);
      normalize_measure(g);
      it = grids.emplace(n, std::move(g)).first;
    }
    return it->second;
  }

  double tol(const std::string& name, double fallback) const {
    auto it = settings.tol_overrides.find(name);
    return it == settings.tol_overrides.end() ? fallback : it->second;
  }

  void run(const std::string& name, double tolerance,
           const std::function<void(CheckResult&)>& body) {
    CheckResult res;
    res.name = name;
    res.tolerance = tol(name, tolerance);
    const auto start = Clock::now();
    bool threw = false;
    try {
      body(res);
    } catch (const Error& e) {
      threw = true;
      res.residual = std::numeric_limits<double>::infinity();
      res.note = std::string("exception: ") + e.what();
    }
    res.pass = !threw && res.residual < res.tolerance &&
               (res.note.find("FAIL") == std::string::npos);
    res.runtime_ms = std::chrono::duration<double, std::milli>(
                         Clock::now() - start)
                         .count();
    report.checks.push_back(res);
  }
};

std::function<Complex(double, double)> harmonic_fn(const KTypeIndex& kt,
                                                   int n) {
  return [kt, n](double xi, double phi) {
    return Complex(zonal_harmonic_radial(kt, n, std::cos(xi), phi), 0.0);
  };
}

// ---------------------------------------------------------------------------
// Individual checks.  Parameter sweeps are pinned here; tolerances mirror the
// acceptance thresholds and can be tightened (not loosened) via overrides.
// ---------------------------------------------------------------------------

void check_takahashi(SuiteContext& ctx) {
  ctx.run("takahashi", 1e-8, [&](CheckResult& res) {
    Sweep sw(check_seed(ctx.settings.seed, "takahashi"));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Complex alpha = sw.box(-2.0, 2.0, -2.0, 2.0);
      const Complex beta = sw.box(-2.0, 2.0, -2.0, 2.0);
      for (const double eta : {0.1, 0.5, 0.9}) {
        const auto [lhs, rhs] = takahashi_check(alpha, beta, eta);
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
    res.residual = worst;
    res.note = "20 random (alpha,beta), eta in {0.1,0.5,0.9}";
  });
}

void check_bateman(SuiteContext& ctx) {
  ctx.run("bateman", 1e-8, [&](CheckResult& res) {
    Sweep sw(check_seed(ctx.settings.seed, "bateman"));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Complex a = sw.box(-1.5, 2.5, -1.0, 1.0);
      const Complex b = sw.box(-1.5, 2.5, -1.0, 1.0);
      const Complex sp = sw.box(1.2, 2.4, -0.5, 0.5);
      const Complex c = sp + sw.box(1.2, 3.0, -0.5, 0.5);
      const double z = sw.uniform(0.1, 0.8);
      const auto [lhs, rhs] = bateman_check(a, b, c, sp, z);
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    // The instantiation the spherical-function derivation relies on:
    // c = 2n, sp = 2.
    const auto [lhs, rhs] =
        bateman_check(0.7, 1.1, Complex(4.0, 0.0), Complex(2.0, 0.0), 0.25);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    res.residual = worst;
    res.note = "20 random sets plus the c=2n, sp=2 instance";
  });
}

void check_contiguous(SuiteContext& ctx) {
  ctx.run("contiguous", 1e-10, [&](CheckResult& res) {
    Sweep sw(check_seed(ctx.settings.seed, "contiguous"));
    double worst_classical = 0.0;
    double best_printed = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 50; ++trial) {
      const Complex a = sw.box(-1.5, 2.5, -1.0, 1.0);
      const Complex b = sw.box(-1.5, 2.5, -1.0, 1.0);
      const Complex c = sw.box(1.0, 4.0, -1.0, 1.0);
      for (const double z : {0.2, 0.6, 0.9}) {
        worst_classical = std::max(
            worst_classical,
            contiguous_relation_residual(a, b, c, z, ContiguousSign::classical));
        if (std::abs(a - b) > 0.1) {
          best_printed = std::min(best_printed,
                                  contiguous_relation_residual(
                                      a, b, c, z, ContiguousSign::printed));
        }
      }
    }
    res.residual = worst_classical;
    res.note = "sign adjudicated: RHS = (a-b)F(a,b;c;z); printed (b-a) variant "
               "min residual " +
               std::to_string(best_printed);
    ctx.report.adjudications["contiguous_sign"] = "(a-b)";
    if (best_printed < 1e-3) res.note += " FAIL(printed sign fits too)";
  });
}

void check_rodrigues(SuiteContext& ctx) {
  ctx.run("rodrigues", 1.0, [&](CheckResult& res) {
    // Part 1: recurrence vs the Rodrigues-formula derivative oracle.
    double worst_rod = 0.0;
    const struct { int n; double a, b, x; } cases[] = {
        {2, 1.0, 3.0, 0.3}, {3, 0.5, 1.5, -0.2}, {4, 2.0, 1.0, 0.45}};
    for (const auto& cse : cases) {
      const double oracle = jacobi_rodrigues_oracle(cse.n, cse.a, cse.b, cse.x);
      const double direct = jacobi_poly(cse.n, cse.a, cse.b, cse.x);
      worst_rod = std::max(worst_rod, std::abs(direct - oracle) /
                                          std::max(1.0, std::abs(oracle)));
    }
    // Part 2: recurrence vs the terminating-2F1 definition through N = 20.
    // The alternating reference sum is evaluated in extended precision and
    // on a well-conditioned argument range.
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
    Sweep sw(check_seed(ctx.settings.seed, "rodrigues"));
    double worst_hyp = 0.0;
    for (int N = 0; N <= 20; ++N) {
      const double alpha = sw.uniform(-0.6, 2.5);
      const double beta = sw.uniform(-0.6, 2.5);
      const double t = sw.uniform(0.0, 0.7);
      const double via_2f1 =
          (pochhammer(Complex(alpha + 1.0, 0.0), N).real() /
           std::tgamma(N + 1.0)) *
          terminating_ld(N, N + alpha + beta + 1.0, alpha + 1.0, t * t);
      const double direct = jacobi_poly(N, alpha, beta, 1.0 - 2.0 * t * t);
      worst_hyp = std::max(worst_hyp, std::abs(direct - via_2f1) /
                                          std::max(1.0, std::abs(via_2f1)));
    }
    res.residual = std::max(worst_rod / 1e-8, worst_hyp / 1e-11);
    res.note = "normalized: max(derivative-oracle residual / 1e-8, "
               "2F1-form residual / 1e-11)";
  });
}

void check_kinvariance(SuiteContext& ctx) {
  ctx.run("kinvariance", 1e-11, [&](CheckResult& res) {
    Sweep sw(check_seed(ctx.settings.seed, "kinvariance"));
    const int n = ctx.settings.n;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const SpectralParams params(n, trial % 4,
                                  lambda_for(Complex(1.5, 0.5)));
      const KElement k = random_k_element(n, sw.rng);
      std::normal_distribution<double> gauss(0.0, 1.0);
      auto random_vec = [&] {
        std::vector<Quaternion> c(n);
        for (auto& q : c) {
          q = Quaternion(gauss(sw.rng), gauss(sw.rng), gauss(sw.rng),
                         gauss(sw.rng));
        }
        return HVector(std::move(c));
      };
      HVector x = random_vec();
      const double radius = sw.uniform(0.05, 0.95);
      const double xs = radius / x.norm();
      for (auto& q : x.coords) q = xs * q;
      HVector omega = random_vec();
      const double os = 1.0 / omega.norm();
      for (auto& q : omega.coords) q = os * q;

      const Complex base = poisson_kernel(params, x, omega);
      const Complex moved = poisson_kernel(params, apply(k, x), apply(k, omega));
      worst = std::max(worst,
                       std::abs(moved - base) / (1.0 + std::abs(base)));
    }
    res.residual = worst;
    res.note = "100 random (k, x, omega) triples";
  });
}

void check_elementary(SuiteContext& ctx) {
  ctx.run("elementary", 1e-6, [&](CheckResult& res) {
    double worst = 0.0;
    for (const int n : {ctx.settings.n, ctx.settings.n + 1}) {
      const ZonalGrid& grid = ctx.grid_for(n);
      for (const int twice_l : {0, 1, 2}) {
        for (const Complex ilam : {Complex(1.0, 0.0), Complex(1.5, 0.5)}) {
          const SpectralParams params(n, twice_l, lambda_for(ilam));
          for (int ri = 1; ri <= 9; ++ri) {
            const double r = 0.1 * ri;
            const Complex quad = poisson_quadrature(
                params, [](double, double) { return Complex(1.0, 0.0); }, r,
                grid);
            const Complex closed = elementary_spherical(params, r);
            worst = std::max(worst, rel_err(quad, closed));
          }
        }
      }
    }
    res.residual = worst;
    res.note = "n in {n0, n0+1}, 2l in {0,1,2}, i*lambda in {1, 1.5+0.5i}, "
               "r = 0.1..0.9";
  });
}

void check_scalarity(SuiteContext& ctx) {
  ctx.run("scalarity", 1e-5, [&](CheckResult& res) {
    const int n = ctx.settings.n;
    const ZonalGrid& grid = ctx.grid_for(n);
    const Complex ilam(1.5, 0.5);
    const KTypeIndex kts[] = {{0, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 3}};
    double worst_flat = 0.0;
    bool exponent_q_wins = true;
    for (const int twice_l : {0, 1, 2}) {
      const SpectralParams params(n, twice_l, lambda_for(ilam));
      for (const auto& kt : kts) {
        std::vector<Complex> ratio_q, ratio_p;
        for (int ri = 1; ri <= 9; ++ri) {
          const double r = 0.1 * ri;
          const Complex quad =
              poisson_quadrature(params, harmonic_fn(kt, n), r, grid);
          ratio_q.push_back(
              quad /
              generalized_spherical_terms(params, kt, r, RadialExponent::derived_q)
                  .value());
          if (kt.p != kt.q) {
            ratio_p.push_back(quad /
                              generalized_spherical_terms(
                                  params, kt, r, RadialExponent::printed_p)
                                  .value());
          }
        }
        const double flat_q = flatness(ratio_q);
        worst_flat = std::max(worst_flat, flat_q);
        if (kt.p != kt.q && flatness(ratio_p) <= flat_q) {
          exponent_q_wins = false;
        }
        const std::string key = "twice_l=" + std::to_string(twice_l) +
                                "/kt=(" + std::to_string(kt.p) + "," +
                                std::to_string(kt.q) + ")";
        ctx.report.fitted_constants[key] = mean_of(ratio_q).real();
      }
    }
    res.residual = worst_flat;
    res.note = "quadrature r-profile vs closed form, 9 r-values; radial "
               "exponent adjudicated: tht^q";
    ctx.report.adjudications["radial_exponent"] = "q";
    if (!exponent_q_wins) res.note += " FAIL(exponent p fits at least as well)";
  });
}

void check_limit(SuiteContext& ctx) {
  ctx.run("limit", 1e-3, [&](CheckResult& res) {
    double worst = 0.0;
    // Generic two-term limit law against the gamma closed form.
    const double zs[] = {0.9, 0.99, 0.999};
    {
      const auto r = limit_law_check(Complex(3.5, 0.0), Complex(1.5, 0.0),
                                     Complex(4.0, 0.0), 2, 0, zs);
      worst = std::max(worst, rel_err(r.extrapolated, r.closed_form));
      const auto r2 = limit_law_check(Complex(4.2, 0.0), Complex(1.9, 0.0),
                                      Complex(3.0, 0.0), 1, 0, zs);
      worst = std::max(worst, rel_err(r2.extrapolated, r2.closed_form));
      // Degenerate factors force both sides to zero.
      const auto rz = limit_law_check(Complex(3.5, 0.0), Complex(1.5, 0.0),
                                      Complex(4.0, 0.0), 2, 2, zs);
      if (std::abs(rz.extrapolated) > 1e-12 || std::abs(rz.closed_form) != 0.0) {
        res.note += " FAIL(alpha=beta should vanish)";
      }
    }
    // Cor 5.3: scaled generalized spherical functions across K-types, for a
    // real and a complex spectral parameter.
    const int n = ctx.settings.n;
    const KTypeIndex kts[] = {{0, 0}, {1, 1}, {0, 2}, {2, 4}};
    for (const Complex ilam : {Complex(2.6, 0.0), Complex(2.6, 0.8)}) {
      const SpectralParams params(n, 1, lambda_for(ilam));
      const Complex cl = c_constant(params);
      const Complex scale_exp = -(2.0 * n + 1.0 - ilam) / 2.0;
      std::vector<Complex> limits;
      for (const auto& kt : kts) {
        std::vector<std::pair<double, Complex>> samples;
        for (const double r : {0.9, 0.99, 0.999}) {
          const double h = 1.0 - r * r;
          const Complex scaled = std::exp(scale_exp * std::log(h)) *
                                 generalized_spherical(params, kt, r);
          samples.emplace_back(h, scaled);
        }
        limits.push_back(extrapolate_to_limit(samples, ilam));
        worst = std::max(worst, rel_err(limits.back(), cl));
      }
      for (std::size_t i = 0; i < limits.size(); ++i) {
        for (std::size_t j = i + 1; j < limits.size(); ++j) {
          worst = std::max(worst,
                           std::abs(limits[i] - limits[j]) / std::abs(cl));
        }
      }
    }
    res.residual = worst;
    res.note = "generic two-term limits + scaled Phi_{p,q} limits vs C_l for "
               "i*lambda in {2.6, 2.6+0.8i}, K-types (0,0),(1,1),(0,2),(2,4)" +
               res.note;
  });
}

void check_remark(SuiteContext& ctx) {
  ctx.run("remark", 1.0, [&](CheckResult& res) {
    const int n = ctx.settings.n;
    const Complex ilam(1.5, 0.5);
    // Part 1: Phi_{lambda,l,0,0} is proportional (in fact equal) to the
    // elementary spherical function, with an r-independent ratio.
    double worst_flat = 0.0;
    for (const int twice_l : {0, 1, 2}) {
      const SpectralParams params(n, twice_l, lambda_for(ilam));
      std::vector<Complex> ratios;
      for (int ri = 1; ri <= 9; ++ri) {
        const double r = 0.1 * ri;
        ratios.push_back(generalized_spherical(params, KTypeIndex{0, 0}, r) /
                         elementary_spherical(params, r));
      }
      worst_flat = std::max(worst_flat, flatness(ratios));
    }
    // Part 2: at l = 0 the two-term bracket collapses, via the contiguous
    // relation, to a single 2F1.
    const SpectralParams params0(n, 0, lambda_for(ilam));
    const Complex s = params0.s();
    double worst_collapse = 0.0;
    for (const auto& kt :
         {KTypeIndex{1, 3}, KTypeIndex{0, 2}, KTypeIndex{2, 4}}) {
      const int half_sum = (kt.p + kt.q) / 2;
      const int half_diff = (kt.q - kt.p) / 2;
      const Complex c(static_cast<double>(kt.q + 2 * n), 0.0);
      for (const double r : {0.45, 0.6, 0.9}) {
        const Complex bracket =
            generalized_spherical_terms(params0, kt, r).bracket();
        const Complex single =
            static_cast<double>(kt.p + 1) * pochhammer(s, half_sum + 1) *
            pochhammer(s - 1.0, half_diff) / (s + static_cast<double>(half_sum)) *
            hyp2f1(s - 1.0 + static_cast<double>(half_diff),
                   s + static_cast<double>(half_sum), c, r * r);
        worst_collapse = std::max(worst_collapse, rel_err(bracket, single));
      }
    }
    res.residual = std::max(worst_flat / 1e-8, worst_collapse / 1e-9);
    res.note = "normalized: max(Phi_{l,0,0}/Phi_l flatness / 1e-8, l=0 "
               "bracket collapse / 1e-9)";
  });
}

void check_sandwich(SuiteContext& ctx) {
  ctx.run("sandwich", 1.0, [&](CheckResult& res) {
    Sweep sw(check_seed(ctx.settings.seed, "sandwich"));
    const int n = ctx.settings.n;
    const ZonalGrid& grid = ctx.grid_for(n);
    const std::vector<double> r_grid = {0.1,  0.2,  0.3,   0.4,   0.5,
                                        0.6,  0.7,  0.8,   0.9,   0.95,
                                        0.99, 0.999, 0.9999};
    const KTypeIndex pool[] = {{0, 0}, {1, 1}, {0, 2}, {2, 2}, {1, 3}, {2, 4}};
    double worst_ratio_violation = 0.0;
    double worst_homog = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const SpectralParams params(n, trial % 3, lambda_for(Complex(2.2, 0.0)));
      const int nterms = 1 + static_cast<int>(sw.uniform(0.0, 3.999));
      std::vector<std::pair<KTypeIndex, Complex>> terms;
      std::vector<int> picked;
      while (static_cast<int>(terms.size()) < nterms) {
        const int pick = static_cast<int>(sw.uniform(0.0, 5.999));
        bool dup = false;
        for (const int other : picked) dup = dup || other == pick;
        if (dup) continue;
        picked.push_back(pick);
        terms.emplace_back(pool[pick],
                           sw.box(-1.0, 1.0, -1.0, 1.0) + Complex(0.3, 0.0));
      }
      const KFiniteFunction f(terms);
      for (const double p_exp : {2.0, 3.0}) {
        const SandwichResult sr = sandwich_check(params, f, p_exp, r_grid, grid);
        if (!sr.lower_ok || !sr.upper_ok) {
          res.note += " FAIL(bounds trial " + std::to_string(trial) + ")";
        }
        if (sr.hardy > 0.0) {
          worst_ratio_violation =
              std::max(worst_ratio_violation,
                       std::max(sr.lower_bound / sr.hardy - 1.0,
                                sr.hardy / sr.upper_bound - 1.0));
        }
        // Homogeneity: f -> 10 f scales every quantity by 10.
        const SandwichResult sr10 =
            sandwich_check(params, f.scaled(10.0), p_exp, r_grid, grid);
        worst_homog = std::max(
            worst_homog,
            std::max(std::abs(sr10.hardy - 10.0 * sr.hardy) /
                         (10.0 * sr.hardy),
                     std::abs(sr10.f_norm - 10.0 * sr.f_norm) /
                         (10.0 * sr.f_norm)));
        if (sr10.lower_ok != sr.lower_ok || sr10.upper_ok != sr.upper_ok) {
          res.note += " FAIL(homogeneity flipped flags)";
        }
      }
    }
    res.residual = std::max(std::max(worst_ratio_violation, 0.0) / 1e-2,
                            worst_homog / 5e-12);
    res.note = "normalized: max(bound violation / grid-bias allowance 1e-2, "
               "homogeneity deviation / 5e-12); 10 random K-finite f, "
               "p in {2,3}" +
               res.note;
  });
}

void check_inversion(SuiteContext& ctx) {
  ctx.run("inversion", 1e-2, [&](CheckResult& res) {
    const int n = ctx.settings.n;
    const ZonalGrid& grid = ctx.grid_for(n);
    const SpectralParams params(n, 1, lambda_for(Complex(2.2, 0.0)));
    const KFiniteFunction f({{KTypeIndex{0, 0}, Complex(1.0, 0.0)},
                             {KTypeIndex{1, 1}, Complex(0.8, 0.2)},
                             {KTypeIndex{0, 2}, Complex(-0.5, 0.1)}});
    const double inv_c2 = 1.0 / std::norm(c_constant(params));
    std::vector<double> errs;
    for (const double r : {0.9, 0.99, 0.999}) {
      const KFiniteFunction gr = inversion_approx(params, f, r);
      errs.push_back(kfinite_l2_distance(gr.scaled(inv_c2), f, n, grid));
    }
    if (!(errs[0] > errs[1] && errs[1] > errs[2])) {
      res.note += " FAIL(error not strictly decreasing)";
    }
    res.residual = errs.back();
    res.note = "||C^{-2} g_r - f||_2 at r in {0.9, 0.99, 0.999}: " +
               std::to_string(errs[0]) + " > " + std::to_string(errs[1]) +
               " > " + std::to_string(errs[2]) + res.note;
  });
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport run_verification(const VerifySettings& settings) {
  VerifyReport report;
  SuiteContext ctx{settings, report, {}};
  report.c_n = ctx.grid_for(settings.n).c_n();

  check_takahashi(ctx);
  check_bateman(ctx);
  check_contiguous(ctx);
  check_rodrigues(ctx);
  check_kinvariance(ctx);
  check_elementary(ctx);
  check_scalarity(ctx);
  check_limit(ctx);
  check_remark(ctx);
  check_sandwich(ctx);
  check_inversion(ctx);
  return report;
}

std::string render_verify_report(const VerifyReport& report,
                                 const VerifySettings& settings) {
  nlohmann::ordered_json j;
  j["report"] = "hyppoisson verification";
  j["n"] = settings.n;
  j["grid_points"] = settings.grid_points;
  j["lambda_convention"] = "Re(i*lambda) = -Im(lambda)";
  j["c_n"] = report.c_n;
  nlohmann::ordered_json fitted = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.fitted_constants) fitted[key] = value;
  j["fitted_constants"] = fitted;
  nlohmann::ordered_json adj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.adjudications) adj[key] = value;
  j["adjudications"] = adj;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["check_name"] = c.name;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jc["note"] = c.note;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["all_pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace hyppoisson
