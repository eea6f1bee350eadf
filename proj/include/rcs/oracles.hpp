#ifndef RCS_ORACLES_HPP
#define RCS_ORACLES_HPP

#include "rcs/basis.hpp"
#include "rcs/potentials.hpp"
#include "rcs/types.hpp"

namespace rcs {

/// Exact hydrogen-like level: eps_n = sign [1 + (lambda Z/(n+tau+1))^2]^{-1/2}
/// with tau = gamma (kappa > 0) or -gamma-1 (kappa < 0); sign from the branch.
struct HydrogenLevel {
    int n = 0;
    double tau = 0.0;
    double eps_exact = 0.0;
    double energy = 0.0; // (eps^2-1)/(2 lambda^2)
};

HydrogenLevel hydrogen_exact(const PhysicsParams& p, int n);

/// Nonrelativistic s-wave Woods-Saxon levels from the transcendental equation
///   argG(2 i a) - 2 argG(b + i a) - atan(a/b) + a R0/r0 = (n + 1/2) pi
/// with a = r0 sqrt(2m(E+V0)), b = r0 sqrt(-2mE) (bound E < 0, so b is real).
struct WSLevelParams {
    double V0_MeV = 0.0;
    double R0_fm = 0.0;
    double r0_fm = 0.0;
    Particle particle = Particle::neutron;
};

/// Returns -E of level n in MeV. Bracket scan over (-V0, 0) plus TOMS748
/// refinement; the returned root satisfies the equation to < 1e-10.
double ws_nonrel_exact(const WSLevelParams& params, int n);

/// Residual of the quantization condition at energy E (MeV, negative).
double ws_level_residual(const WSLevelParams& params, int n, double E_MeV);

/// Nonrelativistic limit: lambda -> lambda / scale. Accuracy degrades if the
/// scale is pushed much beyond ~1e3 (the energy variable hits roundoff).
PhysicsParams nonrel_limit(const PhysicsParams& p, double scale);

} // namespace rcs

#endif
