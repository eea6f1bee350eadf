#ifndef RCS_POTENTIALS_HPP
#define RCS_POTENTIALS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcs/basis.hpp"
#include "rcs/quadrature.hpp"
#include "rcs/types.hpp"

namespace rcs {

using RadialFn = std::function<Complex(Complex)>;

/// One radial potential component in natural energy units, split as
/// value(r) = smooth(r) + coulomb_coeff / r. The 1/r part is integrated
/// analytically in the sampling step; smooth goes through Gauss quadrature.
/// max_arg declares the analyticity sector |arg r| the component supports.
struct RadialComponent {
    RadialFn smooth;
    double coulomb_coeff = 0.0;
    double max_arg = M_PI_2;
    std::string name = "zero";

    bool empty() const { return !smooth && coulomb_coeff == 0.0; }
    Complex eval(Complex r) const {
        Complex v = smooth ? smooth(r) : Complex(0.0);
        if (coulomb_coeff != 0.0) v += coulomb_coeff / r;
        return v;
    }
};

RadialComponent combine(const RadialComponent& a, const RadialComponent& b);

enum class UnitSystem { atomic, nuclear };

/// Scattering potential triple (V, S, W) with multiplicative couplings.
struct PotentialSpec {
    RadialComponent V, S, W;
    double eta_V = 1.0, eta_S = 1.0, eta_W = 1.0;
    UnitSystem unit_system = UnitSystem::atomic;
    double short_range_certificate = 0.0; // radius beyond which all decay (doc)

    bool empty() const {
        return (V.empty() || eta_V == 0.0) && (S.empty() || eta_S == 0.0) &&
               (W.empty() || eta_W == 0.0);
    }
};

/// Largest usable complex-scaling angle: min over active components.
double theta_ceiling(const PotentialSpec& spec);
/// Name of the component that limits theta_ceiling.
std::string theta_limiting_component(const PotentialSpec& spec);

/// Unitary-transformed potential: U+- and U0 of the rotated 2x2 matrix,
/// each split into a smooth part and a 1/r coefficient.
struct TransformedPotential {
    RadialFn u_plus, u_minus, u_zero;
    double c_plus = 0.0, c_minus = 0.0, c_zero = 0.0;
    bool has_plus = false, has_minus = false, has_zero = false;
    double gamma = 0.0, kappa = 0.0, Z = 0.0, lambda = 0.0; // provenance
};

/// Applies Eq-2.11-type mixing; on the negative branch the pseudo-scalar
/// coupling flips sign (CP map).
TransformedPotential transform(const PotentialSpec& spec, const BasisParams& b,
                               const PhysicsParams& p);

/// Pair of rules the potential matrix needs: order nu for the upper-upper
/// channel and order 2|gamma| for the cross and lower-lower channels.
struct PotentialRules {
    QuadratureRule nu_rule;
    QuadratureRule two_gamma_rule;
};

PotentialRules make_potential_rules(const BasisParams& b, int K);

/// Full N x N potential matrix
///   lambda^2 <phi+|U+|phi+> + lambda^2 <phi-|U-|phi-> + lambda (U0 cross terms)
/// with omega -> omega e^{-i theta} everywhere. Requires K >= N+1.
ComplexDense potential_matrix(const TransformedPotential& tp,
                              const BasisParams& b, const PhysicsParams& p,
                              const PotentialRules& rules, double theta);

/// Analytic sampling matrix of F(r) = 1/r at order nu (exact, no quadrature):
/// entries (1/r)_{nm} = omega_scaled * pref(n,m) * Gamma(min+nu+1)/(nu min!).
ComplexDense coulomb_sample_matrix(double nu, Complex omega_scaled, int N);

// ---- built-in models (natural units; callers convert MeV/fm first) ----

/// Woods-Saxon well -V0/(1+exp((r-R0)/r0)). Poles at R0 + i pi r0 (2k+1);
/// evaluation closer than 1e-3 r0 to a pole throws PotentialSingular.
RadialComponent woods_saxon(double V0, double R0, double r0);

/// c r^p exp(-a r), entire in r for integer p >= 0.
RadialComponent power_exp(double c, double p, double a);

/// Electrostatic potential of a uniformly charged sphere (charge coupling Zc,
/// radius Rc): Zc/r outside, Zc(3-(r/Rc)^2)/(2Rc) inside. Bounded; theta = 0 only.
RadialComponent coulomb_sphere(double Zc, double Rc);

/// Short-range difference between the sphere potential and the point-Coulomb
/// reference: Z[3/(2Rc) - r^2/(2Rc^3) - 1/r] for r < Rc, exactly 0 outside.
/// Continuous at Rc; the 1/r piece is carried analytically via coulomb_coeff.
RadialComponent sphere_coulomb_correction(double Z, double Rc);

/// Cubic-spline interpolation of tabulated values on a uniform radial grid;
/// zero beyond the grid, theta = 0 only.
RadialComponent tabulated(const std::vector<double>& r,
                          const std::vector<double>& v);

// ---- unit conversions ----

enum class Particle { proton, neutron };

/// Nuclear unit constants (lengths in fm). The proton values are the fixed
/// published conversion factors; neutron values follow from the mass ratio.
struct NuclearUnits {
    double energy_to_mc2 = 0.02409660653; // MeV -> working energy units
    double coulomb_scale = 28.81989156;   // Z divisor (length unit in fm)
    double lambda_fm = 0.2103089104;      // Compton wavelength in fm
};

NuclearUnits nuclear_constants(Particle particle);

/// Nuclear-mode setup with MeV/fm parameters.
struct NuclearSetup {
    Particle particle = Particle::neutron;
    double Zcharge = 0.0; // physical charge number of the nucleus
    int kappa = -1;
    Branch branch = Branch::positive;
    double V0_MeV = 0.0, R0_fm = 0.0, r0_fm = 0.0;
    double eta_V = 0.0, eta_S = 0.0, eta_W = 0.0;
    // Coulomb handling: absent -> none; point -> Z in the reference
    // Hamiltonian; sphere radius Rc -> full sphere potential sampled in the
    // vector channel with a Z = 0 reference.
    std::optional<double> Rc_fm;
    bool point_coulomb = false;
};

/// Converts MeV/fm parameters to internal units: energies * energy_to_mc2,
/// Z / coulomb_scale, lambda in fm per particle.
std::pair<PhysicsParams, PotentialSpec> convert_nuclear(const NuclearSetup& s);

} // namespace rcs

#endif
