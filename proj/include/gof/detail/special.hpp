#pragma once

// Scalar special functions backing the distributions and transforms.
// Everything here is deterministic and platform-stable in double precision.

namespace gof::special {

inline constexpr double kSqrt2Pi = 2.5066282746310002;  // sqrt(2*pi)
inline constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Standard normal density.
double normal_pdf(double x);

// Standard normal CDF, absolute error at erfc level (~1 ulp).
double normal_cdf(double x);

// Upper tail 1 - Phi(x), computed without cancellation.
double normal_sf(double x);

// Inverse standard normal CDF on (0,1). Rational initial guess (Acklam)
// polished by one Halley step against normal_cdf; absolute error well
// below 1e-12 over (1e-300, 1-1e-16). p=0 -> -inf, p=1 -> +inf.
double inverse_normal_cdf(double p);

// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
double regularized_lower_gamma(double a, double x);

// Regularized incomplete beta I_x(a,b), a,b > 0, x in [0,1].
double regularized_incomplete_beta(double a, double b, double x);

// Exponentially scaled modified Bessel function e^z K_{1/4}(z), z > 0.
// Needed only by the asymptotic Cramer-von Mises law.
double scaled_bessel_k_quarter(double z);

}  // namespace gof::special
