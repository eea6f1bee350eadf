#include "rcs/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <Eigen/Eigenvalues>

#include "tri_lu.hpp"

namespace rcs {

namespace {

void run_indexed(int ntask, int jobs, const std::function<void(int)>& work) {
    jobs = std::max(1, std::min(jobs, ntask));
    if (jobs == 1) {
        for (int i = 0; i < ntask; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto loop = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= ntask) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

/// Globally greedy assignment prev[i] -> next[perm[i]]: all pairs sorted by
/// distance, closest claimed first (ties resolve to the smallest total
/// displacement). Bijective for equal sizes.
std::vector<int> match_global(const std::vector<Complex>& prev,
                              const std::vector<Complex>& next) {
    const int n = static_cast<int>(prev.size());
    struct Pair { double d; int i, j; };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pairs.push_back({std::abs(prev[i] - next[j]), i, j});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    int assigned = 0;
    for (const Pair& pr : pairs) {
        if (perm[pr.i] >= 0 || used[pr.j]) continue;
        perm[pr.i] = pr.j;
        used[pr.j] = 1;
        if (++assigned == n) break;
    }
    return perm;
}

Complex eps_from_energy(Complex energy, double lambda, Complex hint) {
    Complex e = std::sqrt(1.0 + 2.0 * lambda * lambda * energy);
    if (std::abs(-e - hint) < std::abs(e - hint)) e = -e;
    return e;
}

} // namespace

Pencil assemble(const PhysicsParams& p, const BasisParams& b,
                const PotentialSpec& spec, const PotentialRules* rules,
                double theta) {
    if (!(theta >= 0.0) || theta >= M_PI_2)
        throw InvalidBasis("theta must lie in [0, pi/2)");
    Pencil out;
    out.S = overlap_matrix(b, p, theta);
    out.H = h0_matrix(b, p, theta).to_dense();
    if (!spec.empty()) {
        if (theta > theta_ceiling(spec) + 1e-15)
            throw PotentialSingular("theta exceeds the analyticity ceiling of component '" +
                                    theta_limiting_component(spec) + "'");
        if (!rules) throw InvalidBasis("potential requires quadrature rules");
        TransformedPotential tp = transform(spec, b, p);
        out.H += potential_matrix(tp, b, p, *rules, theta);
    }
    return out;
}

std::vector<Complex> solve(const ComplexDense& H, const ComplexTridiagonal& S,
                           const SolveOptions& opt) {
    const int n = S.size();
    if (H.rows() != n || H.cols() != n)
        throw InvalidBasis("pencil dimensions disagree");

    TridiagonalLU lu(S);
    const double cond = lu.condition_estimate(S);
    if (cond > opt.cond_threshold)
        throw OverlapSingular("overlap condition estimate " + std::to_string(cond) +
                              " exceeds threshold");

    const Complex sigma = opt.use_shift ? Complex(opt.shift) : Complex(0.0);
    ComplexDense B = H;
    if (sigma != Complex(0.0)) {
        for (int i = 0; i < n; ++i) B(i, i) -= sigma * S.diag[i];
        for (int i = 0; i + 1 < n; ++i) {
            B(i, i + 1) -= sigma * S.offdiag[i];
            B(i + 1, i) -= sigma * S.offdiag[i];
        }
    }
    lu.solve_in_place(B);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(B, true);
    if (es.info() != Eigen::Success)
        throw EigFailure("dense complex eigensolver did not converge");

    // pencil residual check on the original (unshifted) problem
    const double hnorm = H.norm();
    const ComplexDense Sd = S.to_dense();
    const double snorm = Sd.norm();
    std::vector<Complex> eps(n);
    for (int i = 0; i < n; ++i) {
        const Complex e = es.eigenvalues()[i] + sigma;
        eps[i] = e;
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        const double resid = (H * v - e * (Sd * v)).norm() /
                             (v.norm() * (hnorm + std::abs(e) * snorm));
        if (!(resid < opt.residual_tol))
            throw EigFailure("pencil residual " + std::to_string(resid) +
                             " above tolerance for eigenvalue " + std::to_string(i));
    }
    std::sort(eps.begin(), eps.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eps;
}

std::vector<SpectrumPoint> classify(const std::vector<Complex>& eps,
                                    const PhysicsParams& p, double theta,
                                    const ClassifyTolerances& tol) {
    std::vector<SpectrumPoint> out;
    out.reserve(eps.size());
    for (Complex e : eps) {
        SpectrumPoint pt;
        pt.eps = e;
        pt.energy = energy_variable(e, p.lambda);
        const Complex E = pt.energy;
        const bool bound = std::abs(E.imag()) < tol.tol_b * std::max(1.0, std::abs(E.real())) &&
                           std::abs(e.imag()) < tol.tol_b &&
                           e.real() > -1.0 && e.real() < 1.0;
        if (bound) {
            pt.cls = Classification::Bound;
        } else {
            const Complex u = E * std::exp(Complex(0.0, 2.0 * theta));
            const double dist = u.real() >= 0.0 ? std::abs(u.imag()) : std::abs(E);
            if (dist <= tol.tol_c * std::abs(E))
                pt.cls = Classification::RotatedContinuum;
            else if (theta > 0.0 && E.imag() < 0.0)
                pt.cls = Classification::Resonance;
            else
                pt.cls = Classification::Unclassified;
        }
        out.push_back(pt);
    }
    return out;
}

namespace {

std::vector<Complex> solve_physical(const PhysicsParams& p,
                                    const PotentialSpec& spec, double omega,
                                    int N, double theta,
                                    const ComputeOptions& opt) {
    BasisParams b = make_basis_params(p, omega, N);
    const int K = opt.K > 0 ? opt.K : 2 * N;
    std::optional<PotentialRules> rules;
    if (!spec.empty()) rules = make_potential_rules(b, K);
    Pencil pen = assemble(p, b, spec, rules ? &*rules : nullptr, theta);
    std::vector<Complex> eps = solve(pen.H, pen.S, opt.solve);
    if (p.branch == Branch::negative)
        for (Complex& e : eps) e = -e;
    return eps;
}

} // namespace

std::vector<SpectrumPoint> compute_spectrum(const PhysicsParams& p,
                                            const PotentialSpec& spec,
                                            double omega, int N, double theta,
                                            const ComputeOptions& opt) {
    return classify(solve_physical(p, spec, omega, N, theta, opt), p, theta, opt.tol);
}

std::vector<SpectrumPoint> stabilize(const PhysicsParams& p,
                                     const PotentialSpec& spec,
                                     const ScalingParams& sc,
                                     const ComputeOptions& opt) {
    if (sc.omega_list.size() < 3)
        throw InvalidBasis("stabilize needs at least 3 omega values");
    std::vector<double> omegas = sc.omega_list;
    std::sort(omegas.begin(), omegas.end());
    const int G = static_cast<int>(omegas.size());
    const int N = sc.N;

    std::vector<std::vector<Complex>> energies(G);
    run_indexed(G, opt.jobs, [&](int gi) {
        std::vector<Complex> eps =
            solve_physical(p, spec, omegas[gi], N, sc.theta, opt);
        std::vector<Complex> E(eps.size());
        for (size_t i = 0; i < eps.size(); ++i)
            E[i] = energy_variable(eps[i], p.lambda);
        energies[gi] = std::move(E);
    });

    // family tracking across the grid
    std::vector<std::vector<Complex>> fam(N, std::vector<Complex>(G));
    std::vector<int> bad_steps(N, 0);
    for (int i = 0; i < N; ++i) fam[i][0] = energies[0][i];
    std::vector<Complex> prev = energies[0];
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    for (int gi = 1; gi < G; ++gi) {
        std::vector<int> perm = match_global(prev, energies[gi]);
        for (int i = 0; i < N; ++i) {
            const Complex nxt = energies[gi][perm[i]];
            if (std::abs(nxt - prev[i]) > 0.2 * std::max(1e-12, std::abs(prev[i])))
                ++bad_steps[i];
            fam[i][gi] = nxt;
            prev[i] = nxt;
        }
    }

    // N jitter at the middle of the grid
    const int gmid = G / 2;
    const int Nlo = std::max(2, static_cast<int>(std::lround(N * (1.0 - sc.N_jitter))));
    const int Nhi = static_cast<int>(std::lround(N * (1.0 + sc.N_jitter)));
    std::vector<std::vector<Complex>> jit(2);
    run_indexed(2, opt.jobs, [&](int t) {
        const int Nj = t == 0 ? Nlo : Nhi;
        std::vector<Complex> eps =
            solve_physical(p, spec, omegas[gmid], Nj, sc.theta, opt);
        std::vector<Complex> E(eps.size());
        for (size_t i = 0; i < eps.size(); ++i)
            E[i] = energy_variable(eps[i], p.lambda);
        jit[t] = std::move(E);
    });

    const int lo = G / 4, hi = G - G / 4;
    std::vector<SpectrumPoint> out(N);
    for (int i = 0; i < N; ++i) {
        Complex mean(0.0);
        for (int gi = lo; gi < hi; ++gi) mean += fam[i][gi];
        mean /= static_cast<double>(hi - lo);

        double spread = 0.0;
        for (int a = 0; a < G; ++a)
            for (int bq = a + 1; bq < G; ++bq)
                spread = std::max(spread, std::abs(fam[i][a] - fam[i][bq]));
        for (const auto& J : jit) {
            double dmin = std::numeric_limits<double>::infinity();
            for (Complex z : J) dmin = std::min(dmin, std::abs(z - fam[i][gmid]));
            spread = std::max(spread, dmin);
        }

        SpectrumPoint pt;
        pt.energy = mean;
        pt.eps = eps_from_energy(mean, p.lambda,
                                 eps_from_energy(fam[i][gmid], p.lambda,
                                                 Complex(p.branch == Branch::positive ? 1.0 : -1.0)));
        pt.stability = spread;
        const double rel = spread / std::max(std::abs(mean), 1e-300);
        pt.stable_digits =
            spread == 0.0 ? 15
                          : std::clamp(static_cast<int>(std::floor(-std::log10(rel))), 0, 15);
        pt.match_failed = bad_steps[i] > 0.2 * (G - 1);
        const auto cls = classify({pt.eps}, p, sc.theta, opt.tol);
        pt.cls = cls[0].cls;
        out[i] = pt;
    }
    return out;
}

SweepResult theta_sweep(const PhysicsParams& p, const PotentialSpec& spec,
                        double omega, int N,
                        const std::vector<double>& theta_grid,
                        const ComputeOptions& opt) {
    if (theta_grid.empty()) throw InvalidBasis("empty theta grid");
    if (!spec.empty() && *std::max_element(theta_grid.begin(), theta_grid.end()) >
                             theta_ceiling(spec) + 1e-15)
        throw PotentialSingular("theta grid exceeds the analyticity ceiling of component '" +
                                theta_limiting_component(spec) + "'");

    const int T = static_cast<int>(theta_grid.size());
    SweepResult sw;
    sw.theta_grid = theta_grid;
    sw.points.resize(T);

    std::vector<std::vector<Complex>> energies(T);
    run_indexed(T, opt.jobs, [&](int t) {
        std::vector<Complex> eps =
            solve_physical(p, spec, omega, N, theta_grid[t], opt);
        sw.points[t] = classify(eps, p, theta_grid[t], opt.tol);
        std::vector<Complex> E(eps.size());
        for (size_t i = 0; i < eps.size(); ++i)
            E[i] = energy_variable(eps[i], p.lambda);
        energies[t] = std::move(E);
    });

    sw.trajectories.assign(N, std::vector<Complex>(T));
    for (int i = 0; i < N; ++i) sw.trajectories[i][0] = energies[0][i];
    std::vector<Complex> prev = energies[0];
    for (int t = 1; t < T; ++t) {
        std::vector<int> perm = match_global(prev, energies[t]);
        for (int i = 0; i < N; ++i) {
            sw.trajectories[i][t] = energies[t][perm[i]];
            prev[i] = energies[t][perm[i]];
        }
    }

    double emax = 1.0;
    for (const auto& E : energies)
        for (Complex z : E) emax = std::max(emax, std::abs(z));
    const double xi_max = 1.05 * p.lambda * std::sqrt(2.0 * emax);
    const int M = 201;
    sw.xi_grid.resize(M);
    for (int j = 0; j < M; ++j) sw.xi_grid[j] = xi_max * j / (M - 1);
    sw.cut_curves.resize(T);
    for (int t = 0; t < T; ++t) {
        sw.cut_curves[t].resize(M);
        const Complex rot = std::exp(Complex(0.0, -2.0 * theta_grid[t]));
        for (int j = 0; j < M; ++j) {
            const double s = sw.xi_grid[j] / p.lambda;
            sw.cut_curves[t][j] = 0.5 * s * s * rot;
        }
    }
    return sw;
}

std::pair<PhysicsParams, PotentialSpec> negative_branch(const PhysicsParams& p,
                                                        const PotentialSpec& spec) {
    PhysicsParams q = p;
    q.branch = p.branch == Branch::positive ? Branch::negative : Branch::positive;
    return {q, spec};
}

std::vector<SpectrumPoint> bound_ladder(const std::vector<SpectrumPoint>& pts,
                                        Branch branch) {
    std::vector<SpectrumPoint> out;
    for (const auto& pt : pts) {
        if (pt.cls != Classification::Bound) continue;
        if (branch == Branch::positive && !(pt.eps.real() > 0.0)) continue;
        if (branch == Branch::negative && !(pt.eps.real() < 0.0)) continue;
        out.push_back(pt);
    }
    std::sort(out.begin(), out.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
        return a.energy.real() < b.energy.real();
    });
    return out;
}

} // namespace rcs
