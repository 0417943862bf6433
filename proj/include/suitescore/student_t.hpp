#pragma once

namespace suitescore::stats {

// log Γ(x) for x > 0 (Lanczos approximation, ~1e-15 relative).
double log_gamma(double x);

// I_x(a, b), the regularized incomplete beta function, for a, b > 0 and
// x in [0, 1].
double regularized_incomplete_beta(double x, double a, double b);

// CDF of Student's t with df > 0 degrees of freedom; df may be fractional.
double student_t_cdf(double t, double df);

// Inverse of student_t_cdf by bracketing and bisection on the CDF.
// Throws OutOfRange unless 0 < p < 1 and df > 0.
double t_quantile(double p, double df);

}  // namespace suitescore::stats
