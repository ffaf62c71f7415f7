#pragma once

#include <complex>

#include "hyppoisson/errors.hpp"

namespace hyppoisson {

using Complex = std::complex<double>;

// Outcome of a truncated hypergeometric series evaluation.
// truncation_bound is the modulus of the first omitted term; on a
// successful return it does not exceed the requested tolerance.
struct SeriesResult {
  Complex value{0.0, 0.0};
  int terms_used = 0;
  double truncation_bound = 0.0;
};

// Gamma function for complex argument (Lanczos approximation, reflection
// formula for Re z < 1/2).  Throws PoleError within 1e-12 of a nonpositive
// integer.  Relative accuracy is ~1e-14 on the real axis and better than
// 1e-13 over the moderate |z| range this library exercises.
Complex complex_gamma(Complex z);

// Rising factorial (a)_k = a (a+1) ... (a+k-1) by direct product.
Complex pochhammer(Complex a, int k);

// Gauss hypergeometric 2F1(a, b; c; z) for complex parameters and real
// z in [0, 1).  Near z = 1 with Re(c-a-b) <= 0 the evaluation switches to
// the Euler transformation (1-z)^{c-a-b} 2F1(c-a, c-b; c; z), whose tail
// terms decay monotonically, so the term-size stopping rule stays sound.
// Throws ParameterPole if c is (nearly) a nonpositive integer and
// NoConvergence if the 100000-term cap is reached.
SeriesResult gauss_2f1(Complex a, Complex b, Complex c, double z,
                       double tol = 1e-14);

// Value-only convenience wrapper around gauss_2f1.
Complex hyp2f1(Complex a, Complex b, Complex c, double z, double tol = 1e-14);

// 2F1 extended to any real argument x < 1.  Negative arguments route
// through the Pfaff map x -> x/(x-1) in the second parameter, which lands
// back in [0, 1); terminating series are summed directly.
Complex hyp2f1_ext(Complex a, Complex b, Complex c, double x,
                   double tol = 1e-14);

// (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)) -- the Pfaff transformation evaluated
// as written, through the negative-argument extension above.  Agrees with
// gauss_2f1 wherever both are defined.
Complex pfaff_transform(Complex a, Complex b, Complex c, double z);

// Gegenbauer polynomial C^1_m(x) (Chebyshev U_m), x in [-1, 1].
double gegenbauer_c1(int m, double x);

// Jacobi polynomial P_N^{(alpha,beta)}(x) by three-term recurrence,
// alpha, beta > -1.
double jacobi_poly(int n, double alpha, double beta, double x);

// Which right-hand side to test in the contiguous relation
//   a 2F1(a+1,b;c;z) - b 2F1(a,b+1;c;z) = RHS * 2F1(a,b;c;z).
// `classical` uses RHS = (a-b); `printed` uses RHS = (b-a).  The classical
// sign is the one the identity actually satisfies (checked at z = 0 and by
// series evaluation); the printed variant exists so the verification suite
// can demonstrate the adjudication.
enum class ContiguousSign { classical, printed };

// |LHS - RHS| / max(1, |RHS|) for the contiguous relation above.
double contiguous_relation_residual(Complex a, Complex b, Complex c, double z,
                                    ContiguousSign sign = ContiguousSign::classical);

namespace detail {
// True when x is within tol of a nonpositive integer; fills n with the
// termination index (x ~ -n).
bool near_nonpositive_integer(Complex x, int& n, double tol = 1e-13);

// Terminating 2F1(-N, b; c; x) with real data, summed as a finite series.
// Valid for any real x.  Used in quadrature hot loops.
double hyp2f1_terminating_real(int N, double b, double c, double x);
}  // namespace detail

}  // namespace hyppoisson
