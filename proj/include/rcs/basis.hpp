#ifndef RCS_BASIS_HPP
#define RCS_BASIS_HPP

#include "rcs/types.hpp"

namespace rcs {

enum class Branch { positive, negative };

/// Physical configuration of the radial Dirac-Coulomb problem.
///
/// lambda is the Compton wavelength in the working length unit, Z the
/// dimensionless charge coupling of the reference Hamiltonian, kappa the
/// spin-orbit quantum number. The negative branch is handled through the
/// CP map (kappa -> -kappa, Z -> -Z, W -> -W); see effective_kappa/effective_Z.
struct PhysicsParams {
    double lambda = 0.0;
    double Z = 0.0;
    int kappa = -1;
    Branch branch = Branch::positive;

    double effective_kappa() const {
        return branch == Branch::positive ? kappa : -kappa;
    }
    double effective_Z() const { return branch == Branch::positive ? Z : -Z; }

    void validate() const;
};

/// Basis quantities derived from PhysicsParams and the scale omega.
/// nu = 2|gamma| + 1 for kappa > 0 and 2|gamma| - 1 for kappa < 0.
/// The kinetic-balance parameter mu is fixed to 2; any other value breaks the
/// nonrelativistic limit of the reference matrix elements.
struct BasisParams {
    double omega = 1.0;
    int N = 0;
    double phi = 0.0;        // sin(phi) = lambda Z / kappa
    double gamma = 0.0;      // kappa cos(phi)
    double nu = 0.0;
    double sigma_plus = 1.0; // 1 + 2Z/(kappa omega)
    double sigma_minus = 1.0;
    double rho_plus = 1.0;   // 1 + (2Z/(kappa omega))^2
    double rho_minus = 1.0;
    static constexpr double mu = 2.0;
};

BasisParams make_basis_params(const PhysicsParams& p, double omega, int N);

/// Tridiagonal basis-overlap matrix at omega -> omega e^{-i theta}.
///
/// The diagonal carries rho_plus and the off-diagonal rho_minus regardless of
/// the sign of kappa; the equal-symbol form seen in some write-ups conflates
/// the two (the small-N integration oracle in the tests is the arbiter).
ComplexTridiagonal overlap_matrix(const BasisParams& b, const PhysicsParams& p,
                                  double theta);

/// Tridiagonal reference (Dirac-Coulomb) Hamiltonian at omega e^{-i theta},
/// with the same rho_plus/rho_minus placement as the overlap.
ComplexTridiagonal h0_matrix(const BasisParams& b, const PhysicsParams& p,
                             double theta);

} // namespace rcs

#endif
