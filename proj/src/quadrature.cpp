#include "rcs/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace rcs {

Eigen::VectorXd QuadratureRule::weights() const {
    const double g = std::tgamma(nu + 1.0);
    Eigen::VectorXd w(K);
    for (int k = 0; k < K; ++k) w[k] = g * evec(0, k) * evec(0, k);
    return w;
}

QuadratureRule build_rule(double nu, int K) {
    if (!(nu > -1.0)) throw InvalidBasis("Laguerre order nu must exceed -1");
    if (K < 1) throw InvalidBasis("rule size K must be positive");

    Eigen::VectorXd diag(K), sub(K > 1 ? K - 1 : 0);
    for (int n = 0; n < K; ++n) diag[n] = 2.0 * n + nu + 1.0;
    for (int n = 0; n + 1 < K; ++n) sub[n] = -std::sqrt((n + 1.0) * (n + nu + 1.0));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw EigFailure("symmetric tridiagonal eigensolver did not converge");

    QuadratureRule rule;
    rule.nu = nu;
    rule.K = K;
    rule.nodes = es.eigenvalues();
    rule.evec = es.eigenvectors();
    for (int k = 0; k < K; ++k) {
        if (rule.evec(0, k) < 0.0) rule.evec.col(k) *= -1.0;
        if (!(rule.nodes[k] > 0.0))
            throw EigFailure("nonpositive quadrature node");
        if (k > 0 && !(rule.nodes[k] > rule.nodes[k - 1]))
            throw EigFailure("quadrature nodes not distinct");
    }
    return rule;
}

SampledMatrix sample(const QuadratureRule& rule,
                     const std::function<Complex(Complex)>& F,
                     Complex omega_scaled, int N) {
    if (N > rule.K) throw IndexOverflow("sample: N exceeds rule size K");

    Eigen::VectorXd fre(rule.K), fim(rule.K);
    for (int k = 0; k < rule.K; ++k) {
        const Complex v = F(rule.nodes[k] / omega_scaled);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw PotentialSingular("potential evaluation not finite at quadrature node");
        fre[k] = v.real();
        fim[k] = v.imag();
    }

    const auto top = rule.evec.topRows(N);
    Eigen::MatrixXd mre = top * fre.asDiagonal() * top.transpose();
    Eigen::MatrixXd mim = top * fim.asDiagonal() * top.transpose();

    SampledMatrix out;
    out.nu = rule.nu;
    out.K = rule.K;
    out.omega_scaled = omega_scaled;
    out.entries.resize(N, N);
    // mirror the upper triangle so F_{nm} = F_{mn} holds exactly
    for (int n = 0; n < N; ++n)
        for (int m = n; m < N; ++m)
            out.entries(n, m) = out.entries(m, n) = Complex(mre(n, m), mim(n, m));
    return out;
}

} // namespace rcs
