#include "run.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "emit.hpp"
#include "rcs/version.hpp"
#include "tables.hpp"

namespace rcs::cli {

int log_level() {
    static int lvl = [] {
        const char* env = std::getenv("RCS_LOG");
        std::string s = env ? env : "warn";
        if (s == "quiet") return 0;
        if (s == "warn") return 1;
        if (s == "info") return 2;
        if (s == "debug") return 3;
        return 1;
    }();
    return lvl;
}

void log_info(const std::string& msg) {
    if (log_level() >= 2) std::fprintf(stderr, "[rcs] %s\n", msg.c_str());
}

void log_debug(const std::string& msg) {
    if (log_level() >= 3) std::fprintf(stderr, "[rcs:debug] %s\n", msg.c_str());
}

namespace {

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Metadata make_meta(const RunConfig& rc) {
    Metadata m;
    m.emplace_back("version", RCS_VERSION);
    m.emplace_back("timestamp", iso_now());
    m.emplace_back("job", rc.job == Job::spectrum ? "spectrum"
                          : rc.job == Job::stabilize ? "stabilize"
                          : rc.job == Job::sweep ? "sweep" : "table");
    m.emplace_back("lambda", fmt(rc.physics.lambda));
    m.emplace_back("Z", fmt(rc.physics.Z));
    m.emplace_back("kappa", std::to_string(rc.physics.kappa));
    m.emplace_back("branch", rc.physics.branch == Branch::positive ? "positive" : "negative");
    m.emplace_back("N", std::to_string(rc.N));
    m.emplace_back("K", std::to_string(rc.K > 0 ? rc.K : 2 * rc.N));
    if (rc.omega > 0.0) m.emplace_back("omega", fmt(rc.omega));
    if (!rc.omega_grid.empty()) {
        std::string og;
        for (double w : rc.omega_grid) og += (og.empty() ? "" : " ") + fmt(w);
        m.emplace_back("omega_grid", og);
    }
    m.emplace_back("theta", fmt(rc.theta));
    if (!rc.theta_grid.empty()) {
        std::string tg;
        for (double t : rc.theta_grid) tg += (tg.empty() ? "" : " ") + fmt(t);
        m.emplace_back("theta_grid", tg);
    }
    m.emplace_back("tol_b", fmt(rc.tol.tol_b));
    m.emplace_back("tol_c", fmt(rc.tol.tol_c));
    m.emplace_back("residual_tol", fmt(rc.solve.residual_tol));
    m.emplace_back("N_jitter", fmt(rc.N_jitter));
    m.emplace_back("jobs", std::to_string(rc.jobs));
    for (const auto& kvp : rc.meta) m.push_back(kvp);
    return m;
}

int count_flagged(const std::vector<SpectrumPoint>& pts) {
    int n = 0;
    for (const auto& p : pts)
        if (p.match_failed &&
            (p.cls == Classification::Bound || p.cls == Classification::Resonance))
            ++n;
    return n;
}

void emit_points(const RunConfig& rc, const Metadata& meta,
                 const std::vector<SpectrumPoint>& pts, const std::string& stem) {
    for (const auto& f : rc.formats) {
        const std::string path = rc.out_dir + "/" + stem + "." + f;
        if (f == "csv") write_points_csv(path, meta, pts);
        if (f == "json") write_points_json(path, meta, pts);
        log_info("wrote " + path);
    }
}

} // namespace

int run_job(const RunConfig& rc) {
    std::filesystem::create_directories(rc.out_dir);
    ComputeOptions opt;
    opt.K = rc.K;
    opt.solve = rc.solve;
    opt.tol = rc.tol;
    opt.jobs = rc.jobs;

    if (rc.job == Job::table)
        return run_table(rc.table_name, rc.jobs, rc.out_dir, rc.formats) > 0 ? 3 : 0;

    if (rc.job == Job::spectrum) {
        log_info("spectrum: omega=" + fmt(rc.omega) + " N=" + std::to_string(rc.N) +
                 " theta=" + fmt(rc.theta));
        auto pts = compute_spectrum(rc.physics, rc.potential, rc.omega, rc.N,
                                    rc.theta, opt);
        emit_points(rc, make_meta(rc), pts, "spectrum");
        return 0;
    }

    if (rc.job == Job::stabilize) {
        ScalingParams sc;
        sc.theta = rc.theta;
        sc.omega_list = rc.omega_grid;
        sc.N = rc.N;
        sc.N_jitter = rc.N_jitter;
        auto pts = stabilize(rc.physics, rc.potential, sc, opt);
        emit_points(rc, make_meta(rc), pts, "stabilize");
        return count_flagged(pts) > 0 ? 3 : 0;
    }

    // sweep
    auto sw = theta_sweep(rc.physics, rc.potential, rc.omega, rc.N, rc.theta_grid, opt);
    const Metadata meta = make_meta(rc);
    for (const auto& f : rc.formats) {
        if (f == "csv") {
            write_sweep_csv(rc.out_dir + "/sweep_trajectories.csv",
                            rc.out_dir + "/sweep_cut.csv", meta, sw);
            log_info("wrote " + rc.out_dir + "/sweep_trajectories.csv");
        }
        if (f == "json") {
            write_sweep_json(rc.out_dir + "/sweep.json", meta, sw);
            log_info("wrote " + rc.out_dir + "/sweep.json");
        }
    }
    return 0;
}

} // namespace rcs::cli
