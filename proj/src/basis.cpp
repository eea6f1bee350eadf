#include "rcs/basis.hpp"

#include <cmath>

namespace rcs {

void PhysicsParams::validate() const {
    if (kappa == 0) throw InvalidBasis("kappa must be a nonzero integer");
    if (!(lambda > 0.0)) throw InvalidBasis("lambda must be positive");
    if (std::abs(lambda * Z / kappa) >= 1.0)
        throw CouplingTooStrong("|lambda Z / kappa| >= 1: gamma is not real");
}

BasisParams make_basis_params(const PhysicsParams& p, double omega, int N) {
    p.validate();
    if (!(omega > 0.0)) throw InvalidBasis("omega must be positive");
    if (N < 2) throw InvalidBasis("basis size N must be at least 2");

    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();

    BasisParams b;
    b.omega = omega;
    b.N = N;
    b.phi = std::asin(p.lambda * Z / kap);
    b.gamma = kap * std::cos(b.phi);
    b.nu = 2.0 * std::abs(b.gamma) + (kap > 0 ? 1.0 : -1.0);
    const double q = 2.0 * Z / (kap * omega);
    b.sigma_plus = 1.0 + q;
    b.sigma_minus = 1.0 - q;
    b.rho_plus = 1.0 + q * q;
    b.rho_minus = 1.0 - q * q;
    return b;
}

ComplexTridiagonal overlap_matrix(const BasisParams& b, const PhysicsParams& p,
                                  double theta) {
    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();
    const Complex ws = b.omega * std::exp(Complex(0.0, -theta));
    const Complex t2 = (p.lambda * ws / 4.0) * (p.lambda * ws / 4.0);
    const Complex q = 2.0 * Z / (kap * ws);
    const Complex rp = 1.0 + q * q;
    const Complex rm = 1.0 - q * q;

    ComplexTridiagonal m;
    m.diag.resize(b.N);
    m.offdiag.resize(b.N - 1);
    const Complex coul = p.lambda * p.lambda * ws * Z * b.gamma / (2.0 * kap);
    for (int n = 0; n < b.N; ++n)
        m.diag[n] = (2.0 * n + b.nu + 1.0) * (1.0 + t2 * rp) - coul;
    for (int n = 0; n + 1 < b.N; ++n)
        m.offdiag[n] =
            -(1.0 - t2 * rm) * std::sqrt((n + 1.0) * (n + b.nu + 1.0));
    return m;
}

ComplexTridiagonal h0_matrix(const BasisParams& b, const PhysicsParams& p,
                             double theta) {
    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();
    const double gk = b.gamma / kap;
    const Complex ws = b.omega * std::exp(Complex(0.0, -theta));
    const Complex t2 = (p.lambda * ws / 4.0) * (p.lambda * ws / 4.0);
    const Complex q = 2.0 * Z / (kap * ws);
    const Complex rp = 1.0 + q * q;
    const Complex rm = 1.0 - q * q;

    ComplexTridiagonal m;
    m.diag.resize(b.N);
    m.offdiag.resize(b.N - 1);
    const double cfac = 1.0 - b.gamma / (2.0 * kap);
    const Complex coul = 2.0 * p.lambda * p.lambda * ws * Z * cfac * cfac;
    for (int n = 0; n < b.N; ++n)
        m.diag[n] = (2.0 * n + b.nu + 1.0) * (gk + t2 * (4.0 - gk) * rp) + coul;
    for (int n = 0; n + 1 < b.N; ++n)
        m.offdiag[n] = -(gk - t2 * (4.0 - gk) * rm) *
                       std::sqrt((n + 1.0) * (n + b.nu + 1.0));
    return m;
}

} // namespace rcs
