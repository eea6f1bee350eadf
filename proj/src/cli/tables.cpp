#include "tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "emit.hpp"
#include "rcs/version.hpp"

namespace rcs::cli {

namespace {

constexpr double kFineStructure = 1.0 / 137.036;

Metadata base_meta(const StabilizedRun& run, const std::string& table) {
    Metadata m;
    m.emplace_back("version", RCS_VERSION);
    m.emplace_back("table", table);
    m.emplace_back("N", std::to_string(run.sc.N));
    m.emplace_back("K", std::to_string(run.opt.K));
    std::string og;
    for (double w : run.sc.omega_list) og += (og.empty() ? "" : " ") + std::to_string(w);
    m.emplace_back("omega_grid", og);
    m.emplace_back("theta", std::to_string(run.sc.theta));
    return m;
}

} // namespace

StabilizedRun preset_hydrogen(double Z, int kappa, int N, Branch branch) {
    StabilizedRun run;
    run.p.lambda = kFineStructure;
    run.p.Z = Z;
    run.p.kappa = kappa;
    run.p.branch = branch;
    run.sc.theta = 0.0;
    run.sc.omega_list = {1.0, 2.0, 3.0, 4.0, 5.0};
    run.sc.N = N;
    run.opt.K = 0; // no potential, no quadrature
    return run;
}

StabilizedRun preset_power_exp(double Z, int kappa, double alpha_over) {
    StabilizedRun run;
    run.p.lambda = kFineStructure / alpha_over;
    run.p.Z = Z;
    run.p.kappa = kappa;
    run.spec.V = power_exp(7.5, 2.0, 1.0);
    run.spec.eta_V = 1.0;
    run.spec.eta_S = run.spec.eta_W = 0.0;
    run.spec.short_range_certificate = 60.0;
    run.sc.theta = 0.7;
    run.sc.omega_list = {5.0, 10.0, 20.0, 30.0};
    run.sc.N = 100;
    run.opt.K = 3 * run.sc.N;
    return run;
}

StabilizedRun preset_woods_saxon(Particle particle, double Zcharge, int kappa,
                                 double eta_V, double eta_S, double eta_W,
                                 double lambda_over) {
    NuclearSetup s;
    s.particle = particle;
    s.Zcharge = Zcharge;
    s.kappa = kappa;
    s.V0_MeV = 300.0;
    s.R0_fm = 7.0;
    s.r0_fm = 0.5;
    s.eta_V = eta_V;
    s.eta_S = eta_S;
    s.eta_W = eta_W;
    if (Zcharge != 0.0) s.Rc_fm = 1.2 * s.R0_fm;

    StabilizedRun run;
    std::tie(run.p, run.spec) = convert_nuclear(s);
    run.p.lambda /= lambda_over;
    run.sc.theta = 0.0;
    run.sc.omega_list = {3.0, 5.0, 10.0, 20.0, 30.0};
    run.sc.N = 100;
    run.opt.K = 3 * run.sc.N;
    return run;
}

std::vector<SpectrumPoint> stabilized_bound_ladder(const StabilizedRun& run) {
    return bound_ladder(stabilize(run.p, run.spec, run.sc, run.opt), run.p.branch);
}

std::vector<SpectrumPoint> stabilized_resonances(const StabilizedRun& run,
                                                 int min_digits) {
    std::vector<SpectrumPoint> pts = stabilize(run.p, run.spec, run.sc, run.opt);
    std::vector<SpectrumPoint> out;
    for (const auto& pt : pts)
        if (pt.cls == Classification::Resonance && pt.stable_digits >= min_digits)
            out.push_back(pt);
    std::sort(out.begin(), out.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
        return a.energy.real() < b.energy.real();
    });
    return out;
}

namespace {

void emit_rows(const std::string& stem, const Metadata& meta,
               const std::vector<SpectrumPoint>& pts,
               const std::string& out_dir,
               const std::vector<std::string>& formats) {
    for (const auto& f : formats) {
        if (f == "csv") write_points_csv(out_dir + "/" + stem + ".csv", meta, pts);
        if (f == "json") write_points_json(out_dir + "/" + stem + ".json", meta, pts);
    }
}

int flagged(const std::vector<SpectrumPoint>& pts) {
    int n = 0;
    for (const auto& p : pts)
        if (p.match_failed &&
            (p.cls == Classification::Bound || p.cls == Classification::Resonance))
            ++n;
    return n;
}

int table_I(int jobs, const std::string& out_dir,
            const std::vector<std::string>& formats) {
    int bad = 0;
    std::printf("table I: hydrogen-like bound states, N=200, omega 1..5\n");
    std::printf("%5s %6s %2s %18s %18s %10s\n", "Z", "kappa", "n", "-E(exact)",
                "-E(computed)", "diff");
    for (double Z : {-1.0, -2.0}) {
        for (int kappa : {-1, 1, -2, 2}) {
            StabilizedRun run = preset_hydrogen(Z, kappa);
            run.opt.jobs = jobs;
            auto ladder = stabilized_bound_ladder(run);
            bad += flagged(ladder);
            std::vector<SpectrumPoint> rows;
            for (int n = 0; n < 3 && n < static_cast<int>(ladder.size()); ++n) {
                const auto& pt = ladder[n];
                const double exact = hydrogen_exact(run.p, n).energy;
                std::printf("%5.0f %6d %2d %18.12f %18.12f %10.2e\n", Z, kappa, n,
                            -exact, -pt.energy.real(), pt.energy.real() - exact);
                rows.push_back(pt);
            }
            char stem[64];
            std::snprintf(stem, sizeof stem, "table1_Z%+.0f_k%+d", Z, kappa);
            emit_rows(stem, base_meta(run, "I"), rows, out_dir, formats);
        }
    }
    return bad;
}

int table_II(int jobs, const std::string& out_dir,
             const std::vector<std::string>& formats) {
    int bad = 0;
    std::printf("table II: nonrelativistic resonances of 7.5 r^2 e^-r (alpha/100)\n");
    std::printf("%5s %16s %16s %7s\n", "Z", "E_r", "Gamma_r", "digits");
    for (double Z : {0.0, -1.0}) {
        StabilizedRun run = preset_power_exp(Z, -1, 100.0);
        run.opt.jobs = jobs;
        auto res = stabilized_resonances(run, 4);
        bad += flagged(res);
        std::vector<SpectrumPoint> rows(res.begin(),
                                        res.begin() + std::min<size_t>(3, res.size()));
        for (const auto& pt : rows)
            std::printf("%5.0f %16.7f %16.9e %7d\n", Z, pt.energy.real(),
                        -2.0 * pt.energy.imag(), pt.stable_digits);
        char stem[64];
        std::snprintf(stem, sizeof stem, "table2_Z%+.0f", Z);
        emit_rows(stem, base_meta(run, "II"), rows, out_dir, formats);
    }
    return bad;
}

int table_III(int jobs, const std::string& out_dir,
              const std::vector<std::string>& formats) {
    int bad = 0;
    std::printf("table III: relativistic resonances of 7.5 r^2 e^-r\n");
    std::printf("%5s %6s %16s %16s %7s\n", "Z", "kappa", "E_r", "Lambda_r", "digits");
    for (double Z : {0.0, -1.0, 1.0}) {
        for (int kappa : {-1, 1, -2}) {
            StabilizedRun run = preset_power_exp(Z, kappa, 1.0);
            run.opt.jobs = jobs;
            auto res = stabilized_resonances(run, 3);
            bad += flagged(res);
            std::vector<SpectrumPoint> rows(res.begin(),
                                            res.begin() + std::min<size_t>(6, res.size()));
            for (const auto& pt : rows)
                std::printf("%5.0f %6d %16.10f %16.10f %7d\n", Z, kappa,
                            pt.energy.real(), -2.0 * pt.energy.imag(), pt.stable_digits);
            char stem[64];
            std::snprintf(stem, sizeof stem, "table3_Z%+.0f_k%+d", Z, kappa);
            emit_rows(stem, base_meta(run, "III"), rows, out_dir, formats);
        }
    }
    return bad;
}

int table_IV(int jobs, const std::string& out_dir,
             const std::vector<std::string>& formats) {
    int bad = 0;
    std::printf("table IV: Woods-Saxon neutron, vector coupling, kappa=-1\n");
    StabilizedRun rel = preset_woods_saxon(Particle::neutron, 0.0, -1, 1, 0, 0);
    rel.opt.jobs = jobs;
    auto lrel = stabilized_bound_ladder(rel);
    bad += flagged(lrel);
    StabilizedRun nr = preset_woods_saxon(Particle::neutron, 0.0, -1, 1, 0, 0, 1000.0);
    nr.opt.jobs = jobs;
    auto lnr = stabilized_bound_ladder(nr);
    bad += flagged(lnr);

    const double conv = nuclear_constants(Particle::neutron).energy_to_mc2;
    WSLevelParams wsp{300.0, 7.0, 0.5, Particle::neutron};
    std::printf("%3s %16s %16s %16s\n", "n", "-E (MeV)", "-E (lambda->0)", "-E (exact)");
    for (size_t n = 0; n < lrel.size(); ++n) {
        double exact = std::nan("");
        try {
            exact = ws_nonrel_exact(wsp, static_cast<int>(n));
        } catch (const NoRoot&) {
        }
        const double e_nr =
            n < lnr.size() ? -lnr[n].energy.real() / conv : std::nan("");
        std::printf("%3zu %16.8f %16.7f %16.9f\n", n, -lrel[n].energy.real() / conv,
                    e_nr, exact);
    }
    emit_rows("table4_relativistic", base_meta(rel, "IV"), lrel, out_dir, formats);
    emit_rows("table4_nonrel", base_meta(nr, "IV"), lnr, out_dir, formats);
    return bad;
}

int table_V_or_VI(bool proton, int jobs, const std::string& out_dir,
                  const std::vector<std::string>& formats) {
    int bad = 0;
    const double Zc = proton ? 50.0 : 0.0;
    const Particle part = proton ? Particle::proton : Particle::neutron;
    const double conv = nuclear_constants(part).energy_to_mc2;
    std::printf("table %s: Woods-Saxon %s bound states (-E in MeV)\n",
                proton ? "VI" : "V", proton ? "proton (sphere Coulomb)" : "neutron");
    const char* coupling_names[3] = {"vector", "scalar", "pseudo-scalar"};
    for (int c = 0; c < 3; ++c) {
        for (int kappa : {-1, 1, -2, 2}) {
            StabilizedRun run = preset_woods_saxon(part, Zc, kappa, c == 0, c == 1, c == 2);
            run.opt.jobs = jobs;
            auto ladder = stabilized_bound_ladder(run);
            bad += flagged(ladder);
            std::printf("  %-13s kappa=%+d:", coupling_names[c], kappa);
            for (const auto& pt : ladder) std::printf(" %.6f", -pt.energy.real() / conv);
            std::printf("\n");
            char stem[64];
            std::snprintf(stem, sizeof stem, "table%s_%s_k%+d", proton ? "6" : "5",
                          coupling_names[c], kappa);
            emit_rows(stem, base_meta(run, proton ? "VI" : "V"), ladder, out_dir, formats);
        }
    }
    return bad;
}

} // namespace

int run_table(const std::string& name, int jobs, const std::string& out_dir,
              const std::vector<std::string>& formats) {
    if (name == "I" || name == "1") return table_I(jobs, out_dir, formats);
    if (name == "II" || name == "2") return table_II(jobs, out_dir, formats);
    if (name == "III" || name == "3") return table_III(jobs, out_dir, formats);
    if (name == "IV" || name == "4") return table_IV(jobs, out_dir, formats);
    if (name == "V" || name == "5") return table_V_or_VI(false, jobs, out_dir, formats);
    if (name == "VI" || name == "6") return table_V_or_VI(true, jobs, out_dir, formats);
    throw ConfigError("unknown table '" + name + "' (expected I..VI)");
}

} // namespace rcs::cli
