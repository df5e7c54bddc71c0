#ifndef TODA_SPECIAL_HPP
#define TODA_SPECIAL_HPP

namespace toda {

// Inverse of the standard normal CDF (Wichura's PPND16; |error| < 1e-15).
double normal_inv_cdf(double p);

// Regularized lower incomplete gamma P(k, x) = gamma(k, x) / Gamma(k).
double gamma_p(double k, double x);

// Inverse of gamma_p in x for fixed shape k: gamma_p(k, result) = u.
double gamma_p_inv(double k, double u);

}  // namespace toda

#endif
