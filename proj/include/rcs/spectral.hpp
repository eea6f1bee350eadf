#ifndef RCS_SPECTRAL_HPP
#define RCS_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "rcs/basis.hpp"
#include "rcs/potentials.hpp"
#include "rcs/types.hpp"

namespace rcs {

struct SolveOptions {
    // Solve the shifted pencil (H - sigma S, S); sigma = 1 reduces roundoff
    // near the eps = +1 threshold, where bound spectra cluster.
    bool use_shift = true;
    double shift = 1.0;
    double cond_threshold = 1e12;
    double residual_tol = 1e-8;
};

struct Pencil {
    ComplexDense H;
    ComplexTridiagonal S;
};

/// H = h0 + potential, S = overlap, all at omega e^{-i theta}. rules may be
/// null when the potential is empty. Fails fast when theta exceeds the
/// potential's analyticity ceiling.
Pencil assemble(const PhysicsParams& p, const BasisParams& b,
                const PotentialSpec& spec, const PotentialRules* rules,
                double theta);

/// All N generalized eigenvalues of H v = eps S v. The tridiagonal S is
/// LU-factored and the dense non-Hermitian eigensolver runs on S^{-1}(H-sS);
/// every eigenpair must pass the pencil residual check. Returned sorted by
/// (Re eps, Im eps).
std::vector<Complex> solve(const ComplexDense& H, const ComplexTridiagonal& S,
                           const SolveOptions& opt = {});

enum class Classification { Bound, Resonance, RotatedContinuum, Unclassified };

struct ClassifyTolerances {
    double tol_b = 1e-6;
    double tol_c = 0.05;
};

struct SpectrumPoint {
    Complex eps;
    Complex energy; // (eps^2 - 1) / (2 lambda^2)
    Classification cls = Classification::Unclassified;
    double stability = 0.0; // spread across the omega grid and N jitter
    int stable_digits = 0;
    bool match_failed = false;
};

/// Relativistic energy variable of Eq. (3.2).
inline Complex energy_variable(Complex eps, double lambda) {
    return (eps * eps - 1.0) / (2.0 * lambda * lambda);
}

std::vector<SpectrumPoint> classify(const std::vector<Complex>& eps,
                                    const PhysicsParams& p, double theta,
                                    const ClassifyTolerances& tol = {});

struct ScalingParams {
    double theta = 0.0;
    std::vector<double> omega_list;
    int N = 0;
    double N_jitter = 0.05;
};

struct ComputeOptions {
    int K = 0; // quadrature size; 0 means 2N
    SolveOptions solve;
    ClassifyTolerances tol;
    int jobs = 1;
};

/// One (omega, N, theta) spectrum: assemble, solve, map to the physical
/// branch, classify.
std::vector<SpectrumPoint> compute_spectrum(const PhysicsParams& p,
                                            const PotentialSpec& spec,
                                            double omega, int N, double theta,
                                            const ComputeOptions& opt = {});

/// Solves on the omega grid, matches eigenvalue families across the grid
/// (globally greedy nearest-neighbor in the energy plane), reports the mean
/// over the middle of the grid with significant digits estimated from the
/// family spread and an N +- jitter re-solve.
std::vector<SpectrumPoint> stabilize(const PhysicsParams& p,
                                     const PotentialSpec& spec,
                                     const ScalingParams& sc,
                                     const ComputeOptions& opt = {});

struct SweepResult {
    std::vector<double> theta_grid;
    // trajectories[i][t]: energy of matched eigenvalue family i at theta_grid[t]
    std::vector<std::vector<Complex>> trajectories;
    std::vector<std::vector<SpectrumPoint>> points; // per theta, classified
    std::vector<double> xi_grid;
    // cut_curves[t][j] = (xi_j/lambda)^2/2 e^{-2 i theta_t}
    std::vector<std::vector<Complex>> cut_curves;
};

SweepResult theta_sweep(const PhysicsParams& p, const PotentialSpec& spec,
                        double omega, int N,
                        const std::vector<double>& theta_grid,
                        const ComputeOptions& opt = {});

/// CP map: flips the branch; make_basis_params and transform apply
/// kappa -> -kappa, Z -> -Z, W -> -W for the negative branch, and the
/// physical spectrum is the negation of the mapped problem's.
std::pair<PhysicsParams, PotentialSpec> negative_branch(const PhysicsParams& p,
                                                        const PotentialSpec& spec);

/// Bound states of the requested branch (sign of Re eps), deepest first.
std::vector<SpectrumPoint> bound_ladder(const std::vector<SpectrumPoint>& pts,
                                        Branch branch);

} // namespace rcs

#endif
