#include "rcs/oracles.hpp"

#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "rcs/special.hpp"

namespace rcs {

HydrogenLevel hydrogen_exact(const PhysicsParams& p, int n) {
    p.validate();
    if (n < 0) throw InvalidBasis("radial quantum number must be >= 0");
    const double kap = p.effective_kappa();
    const double Z = p.effective_Z();
    const double gamma = kap * std::sqrt(1.0 - (p.lambda * Z / kap) * (p.lambda * Z / kap));

    HydrogenLevel lvl;
    lvl.n = n;
    lvl.tau = kap > 0 ? gamma : -gamma - 1.0;
    const double x = p.lambda * Z / (n + lvl.tau + 1.0);
    double eps = 1.0 / std::sqrt(1.0 + x * x);
    if (p.branch == Branch::negative) eps = -eps;
    lvl.eps_exact = eps;
    lvl.energy = (eps * eps - 1.0) / (2.0 * p.lambda * p.lambda);
    return lvl;
}

namespace {

// quantization condition minus (n + 1/2) pi, in natural units (hbar = m = 1)
double ws_condition(double E, double V0, double R0, double r0, int n) {
    const double a = r0 * std::sqrt(2.0 * (E + V0));
    const double b = r0 * std::sqrt(-2.0 * E);
    return arg_gamma(Complex(0.0, 2.0 * a)) - 2.0 * arg_gamma(Complex(b, a)) -
           std::atan(a / b) + a * R0 / r0 - (n + 0.5) * M_PI;
}

} // namespace

double ws_nonrel_exact(const WSLevelParams& params, int n) {
    const NuclearUnits u = nuclear_constants(params.particle);
    const double V0 = params.V0_MeV * u.energy_to_mc2;
    const double R0 = params.R0_fm, r0 = params.r0_fm;
    const double delta = 1e-6 * V0;

    auto f = [&](double E) { return ws_condition(E, V0, R0, r0, n); };

    const int steps = 2000;
    const double Elo = -V0 + delta, Ehi = -delta;
    double prevE = Elo, prevF = f(Elo);
    for (int k = 1; k <= steps; ++k) {
        const double E = Elo + (Ehi - Elo) * k / steps;
        const double fk = f(E);
        if (std::signbit(fk) != std::signbit(prevF)) {
            boost::math::tools::eps_tolerance<double> tol(50);
            std::uintmax_t it = 200;
            auto r = boost::math::tools::toms748_solve(f, prevE, E, prevF, fk, tol, it);
            const double root = 0.5 * (r.first + r.second);
            return -root / u.energy_to_mc2;
        }
        prevE = E;
        prevF = fk;
    }
    throw NoRoot("no Woods-Saxon level n=" + std::to_string(n) + " in (-V0, 0)");
}

double ws_level_residual(const WSLevelParams& params, int n, double E_MeV) {
    const NuclearUnits u = nuclear_constants(params.particle);
    return ws_condition(E_MeV * u.energy_to_mc2, params.V0_MeV * u.energy_to_mc2,
                        params.R0_fm, params.r0_fm, n);
}

PhysicsParams nonrel_limit(const PhysicsParams& p, double scale) {
    if (!(scale >= 1.0)) throw InvalidBasis("nonrel_limit scale must be >= 1");
    PhysicsParams q = p;
    q.lambda = p.lambda / scale;
    return q;
}

} // namespace rcs
