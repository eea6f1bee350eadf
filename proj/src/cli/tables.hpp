#ifndef RCS_CLI_TABLES_HPP
#define RCS_CLI_TABLES_HPP

#include <string>
#include <vector>

#include "rcs/oracles.hpp"
#include "rcs/spectral.hpp"

namespace rcs::cli {

/// Fully configured stabilization run (physics + potential + grids). The
/// table jobs and the acceptance suite share these presets.
struct StabilizedRun {
    PhysicsParams p;
    PotentialSpec spec;
    ScalingParams sc;
    ComputeOptions opt;
};

/// Hydrogen-like ion, no scattering potential; N = 200, omega 1..5 a.u.
StabilizedRun preset_hydrogen(double Z, int kappa, int N = 200,
                              Branch branch = Branch::positive);

/// 7.5 r^2 e^{-r} vector potential at theta = 0.7, N = 100, omega {5,10,20,30};
/// alpha_over rescales the fine structure constant (100 for the
/// nonrelativistic comparison, 1 for the relativistic one).
StabilizedRun preset_power_exp(double Z, int kappa, double alpha_over);

/// Woods-Saxon well, V0 = 300 MeV, R0 = 7 fm, r0 = 0.5 fm; N = 100,
/// omega {3,5,10,20,30} fm^-1, theta = 0. lambda_over applies the
/// nonrelativistic limit; Zcharge > 0 adds the uniform-charge-sphere
/// Coulomb (Rc = 1.2 R0) for the proton.
StabilizedRun preset_woods_saxon(Particle particle, double Zcharge, int kappa,
                                 double eta_V, double eta_S, double eta_W,
                                 double lambda_over = 1.0);

/// Bound levels (requested branch) of a stabilized run, deepest first.
std::vector<SpectrumPoint> stabilized_bound_ladder(const StabilizedRun& run);

/// Resonances with at least min_digits stable digits, sorted by Re E.
std::vector<SpectrumPoint> stabilized_resonances(const StabilizedRun& run,
                                                 int min_digits);

/// Reproduces one published table ("I".."VI"); writes CSV/JSON into out_dir
/// and prints a short summary to stdout. Returns the number of rows where a
/// tracked family carries a match failure flag.
int run_table(const std::string& name, int jobs, const std::string& out_dir,
              const std::vector<std::string>& formats);

} // namespace rcs::cli

#endif
