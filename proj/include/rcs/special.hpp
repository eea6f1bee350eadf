#ifndef RCS_SPECIAL_HPP
#define RCS_SPECIAL_HPP

#include "rcs/types.hpp"

namespace rcs {

/// log Gamma(z) for complex z, principal branch. Lanczos approximation with
/// reflection for Re z < 0.5; relative error below 1e-13 on the tested domain.
Complex log_gamma(Complex z);

/// Im log Gamma(z), the continuous arg of Gamma along the principal branch.
double arg_gamma(Complex z);

/// exp(0.5*(lgamma(a) - lgamma(b))) evaluated without forming Gamma ratios.
double half_lgamma_ratio(double a, double b);

/// Associated Laguerre L_n^nu(x) by upward three-term recursion; n < 0 gives 0.
double laguerre(int n, double nu, double x);

} // namespace rcs

#endif
