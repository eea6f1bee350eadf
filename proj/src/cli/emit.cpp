#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rcs::cli {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    return out;
}

} // namespace

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Bound: return "bound";
        case Classification::Resonance: return "resonance";
        case Classification::RotatedContinuum: return "continuum";
        default: return "unclassified";
    }
}

Classification classification_from_name(const std::string& s) {
    if (s == "bound") return Classification::Bound;
    if (s == "resonance") return Classification::Resonance;
    if (s == "continuum") return Classification::RotatedContinuum;
    return Classification::Unclassified;
}

void write_points_csv(const std::string& path, const Metadata& meta,
                      const std::vector<SpectrumPoint>& pts) {
    auto out = open_out(path);
    for (const auto& [k, v] : meta) out << "# " << k << " = " << v << "\n";
    out << "index,eps_re,eps_im,energy_re,energy_im,class,stability,stable_digits,match_failed\n";
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        out << i << ',' << g17(p.eps.real()) << ',' << g17(p.eps.imag()) << ','
            << g17(p.energy.real()) << ',' << g17(p.energy.imag()) << ','
            << classification_name(p.cls) << ',' << g17(p.stability) << ','
            << p.stable_digits << ',' << (p.match_failed ? 1 : 0) << "\n";
    }
}

void write_points_json(const std::string& path, const Metadata& meta,
                       const std::vector<SpectrumPoint>& pts) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : meta) j["meta"][k] = v;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : pts) {
        nlohmann::ordered_json q;
        q["eps"] = {p.eps.real(), p.eps.imag()};
        q["energy"] = {p.energy.real(), p.energy.imag()};
        q["class"] = classification_name(p.cls);
        q["stability"] = p.stability;
        q["stable_digits"] = p.stable_digits;
        q["match_failed"] = p.match_failed;
        j["points"].push_back(q);
    }
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

ParsedPoints read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    ParsedPoints out;
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string k = line.substr(2, eq - 3);
                std::string v = line.substr(eq + 2);
                out.meta.emplace_back(k, v);
            }
            continue;
        }
        if (!header_done) {
            header_done = true;
            continue;
        }
        std::stringstream ss(line);
        std::string tok;
        std::vector<std::string> f;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        if (f.size() != 9) throw ConfigError("malformed CSV row in '" + path + "'");
        SpectrumPoint p;
        p.eps = Complex(std::stod(f[1]), std::stod(f[2]));
        p.energy = Complex(std::stod(f[3]), std::stod(f[4]));
        p.cls = classification_from_name(f[5]);
        p.stability = std::stod(f[6]);
        p.stable_digits = std::stoi(f[7]);
        p.match_failed = f[8] == "1";
        out.points.push_back(p);
    }
    return out;
}

ParsedPoints read_points_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    nlohmann::json j;
    in >> j;
    ParsedPoints out;
    if (j.contains("meta"))
        for (auto it = j["meta"].begin(); it != j["meta"].end(); ++it)
            out.meta.emplace_back(it.key(), it.value().get<std::string>());
    for (const auto& q : j["points"]) {
        SpectrumPoint p;
        p.eps = Complex(q["eps"][0].get<double>(), q["eps"][1].get<double>());
        p.energy = Complex(q["energy"][0].get<double>(), q["energy"][1].get<double>());
        p.cls = classification_from_name(q["class"].get<std::string>());
        p.stability = q["stability"].get<double>();
        p.stable_digits = q["stable_digits"].get<int>();
        p.match_failed = q["match_failed"].get<bool>();
        out.points.push_back(p);
    }
    return out;
}

void write_sweep_csv(const std::string& traj_path, const std::string& cut_path,
                     const Metadata& meta, const SweepResult& sw) {
    {
        auto out = open_out(traj_path);
        for (const auto& [k, v] : meta) out << "# " << k << " = " << v << "\n";
        out << "theta,trajectory,energy_re,energy_im,class\n";
        for (size_t t = 0; t < sw.theta_grid.size(); ++t)
            for (size_t i = 0; i < sw.trajectories.size(); ++i) {
                const Complex E = sw.trajectories[i][t];
                out << g17(sw.theta_grid[t]) << ',' << i << ',' << g17(E.real())
                    << ',' << g17(E.imag()) << ','
                    << classification_name(sw.points[t][i].cls) << "\n";
            }
    }
    {
        auto out = open_out(cut_path);
        for (const auto& [k, v] : meta) out << "# " << k << " = " << v << "\n";
        out << "theta,xi,energy_re,energy_im\n";
        for (size_t t = 0; t < sw.theta_grid.size(); ++t)
            for (size_t j = 0; j < sw.xi_grid.size(); ++j) {
                const Complex E = sw.cut_curves[t][j];
                out << g17(sw.theta_grid[t]) << ',' << g17(sw.xi_grid[j]) << ','
                    << g17(E.real()) << ',' << g17(E.imag()) << "\n";
            }
    }
}

void write_sweep_json(const std::string& path, const Metadata& meta,
                      const SweepResult& sw) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : meta) j["meta"][k] = v;
    j["theta_grid"] = sw.theta_grid;
    j["xi_grid"] = sw.xi_grid;
    j["trajectories"] = nlohmann::ordered_json::array();
    for (const auto& traj : sw.trajectories) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Complex E : traj) row.push_back({E.real(), E.imag()});
        j["trajectories"].push_back(row);
    }
    j["cut_curves"] = nlohmann::ordered_json::array();
    for (const auto& curve : sw.cut_curves) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Complex E : curve) row.push_back({E.real(), E.imag()});
        j["cut_curves"].push_back(row);
    }
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

} // namespace rcs::cli
