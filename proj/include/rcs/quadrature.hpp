#ifndef RCS_QUADRATURE_HPP
#define RCS_QUADRATURE_HPP

#include <functional>

#include "rcs/types.hpp"

namespace rcs {

/// Gauss-Laguerre rule of order nu from the K x K Jacobi eigenproblem.
///
/// The Jacobi matrix is the recurrence matrix of the *orthonormalized*
/// Laguerre polynomials: diagonal 2n+nu+1, off-diagonal -sqrt((n+1)(n+nu+1)).
/// With this sign choice evec(n,k) is proportional to L_n^nu(eta_k) with a
/// k-independent positive factor at n = 0, so eigenvector products reproduce
/// the sampling integrals with the correct sign for odd n+m.
struct QuadratureRule {
    double nu = 0.0;
    int K = 0;
    Eigen::VectorXd nodes;  // ascending, strictly positive
    Eigen::MatrixXd evec;   // evec(n, k): n-th component for node eta_k

    /// Gauss weights w_k = Gamma(nu+1) evec(0,k)^2.
    Eigen::VectorXd weights() const;
};

QuadratureRule build_rule(double nu, int K);

/// Sampled matrix F^nu_{nm} for n,m < N (Gauss-quadrature evaluation of the
/// Laguerre sampling integral). Under complex scaling pass
/// omega_scaled = omega e^{-i theta}; F is then evaluated along the rotated ray.
struct SampledMatrix {
    ComplexDense entries;
    double nu = 0.0;
    int K = 0;
    Complex omega_scaled;
};

SampledMatrix sample(const QuadratureRule& rule,
                     const std::function<Complex(Complex)>& F,
                     Complex omega_scaled, int N);

} // namespace rcs

#endif
