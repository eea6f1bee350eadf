#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rcs::cli {

namespace {

constexpr double kFineStructure = 1.0 / 137.036;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

bool parse_number(const std::string& s, double& out) {
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end && *end == '\0' && end != s.c_str();
}

ConfigValue parse_scalar(const std::string& raw, int lineno) {
    std::string s = trim(raw);
    if (s.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty value");
    if (s == "true") return true;
    if (s == "false") return false;
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw ConfigError("config line " + std::to_string(lineno) + ": unterminated string");
        return s.substr(1, s.size() - 2);
    }
    double v;
    if (parse_number(s, v)) return v;
    throw ConfigError("config line " + std::to_string(lineno) + ": cannot parse value '" + s + "'");
}

ConfigValue parse_value(const std::string& raw, int lineno) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw ConfigError("config line " + std::to_string(lineno) + ": unterminated array");
        std::string body = s.substr(1, s.size() - 2);
        std::vector<double> nums;
        std::vector<std::string> strs;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            ConfigValue v = parse_scalar(item, lineno);
            if (std::holds_alternative<double>(v))
                nums.push_back(std::get<double>(v));
            else if (std::holds_alternative<std::string>(v))
                strs.push_back(std::get<std::string>(v));
            else
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": arrays hold numbers or strings");
        }
        if (!strs.empty() && !nums.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": mixed array types");
        if (!strs.empty()) return strs;
        return nums;
    }
    return parse_scalar(s, lineno);
}

} // namespace

std::map<std::string, ConfigValue> parse_toml(const std::string& text) {
    std::map<std::string, ConfigValue> kv;
    std::string section;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        std::string full = section.empty() ? key : section + "." + key;
        kv[full] = parse_value(line.substr(eq + 1), lineno);
    }
    return kv;
}

std::map<std::string, ConfigValue> parse_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_toml(ss.str());
}

namespace {

struct Reader {
    const std::map<std::string, ConfigValue>& kv;
    mutable std::vector<std::string> seen;

    bool has(const std::string& k) const { return kv.count(k) > 0; }

    template <typename T>
    std::optional<T> get(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end()) return std::nullopt;
        seen.push_back(k);
        if (!std::holds_alternative<T>(it->second))
            throw ConfigError(k + ": unexpected value type");
        return std::get<T>(it->second);
    }

    double num(const std::string& k, double dflt) const {
        return get<double>(k).value_or(dflt);
    }
    double require_num(const std::string& k) const {
        auto v = get<double>(k);
        if (!v) throw ConfigError(k + ": required value missing");
        return *v;
    }
    std::string str(const std::string& k, const std::string& dflt) const {
        return get<std::string>(k).value_or(dflt);
    }
};

void apply_potential(RunConfig& rc, const Reader& r) {
    const std::string model = r.str("potential.model", "none");
    rc.potential_model = model;
    rc.potential.eta_V = r.num("potential.eta_V", model == "none" ? 0.0 : 1.0);
    rc.potential.eta_S = r.num("potential.eta_S", 0.0);
    rc.potential.eta_W = r.num("potential.eta_W", 0.0);

    const bool nuclear = r.str("physics.units", "atomic") == "nuclear";

    auto note = [&rc](const std::string& k, double v) {
        std::ostringstream os;
        os << v;
        rc.meta.emplace_back(k, os.str());
    };
    rc.meta.emplace_back("potential.model", model);

    if (model == "none") {
        return;
    } else if (model == "power-exp") {
        const double c = r.require_num("potential.c");
        const double pw = r.num("potential.p", 0.0);
        const double a = r.require_num("potential.a");
        RadialComponent f = power_exp(c, pw, a);
        note("potential.c", c);
        note("potential.p", pw);
        note("potential.a", a);
        if (rc.potential.eta_V != 0.0) rc.potential.V = f;
        if (rc.potential.eta_S != 0.0) rc.potential.S = f;
        if (rc.potential.eta_W != 0.0) rc.potential.W = f;
    } else if (model == "woods-saxon") {
        NuclearSetup s;
        s.particle = r.str("physics.particle", "neutron") == "proton" ? Particle::proton
                                                                      : Particle::neutron;
        s.Zcharge = r.num("physics.Z", 0.0);
        s.kappa = rc.physics.kappa;
        s.branch = rc.physics.branch;
        s.V0_MeV = r.require_num("potential.V0");
        s.R0_fm = r.require_num("potential.R0");
        s.r0_fm = r.require_num("potential.r0");
        s.eta_V = rc.potential.eta_V;
        s.eta_S = rc.potential.eta_S;
        s.eta_W = rc.potential.eta_W;
        if (auto rcv = r.get<double>("potential.Rc")) s.Rc_fm = *rcv;
        s.point_coulomb = r.get<bool>("potential.point_coulomb").value_or(false);
        if (!nuclear) throw ConfigError("potential.model: woods-saxon requires physics.units = \"nuclear\"");
        auto [p2, spec2] = convert_nuclear(s);
        rc.physics = p2;
        rc.potential = spec2;
        note("potential.V0_MeV", s.V0_MeV);
        note("potential.R0_fm", s.R0_fm);
        note("potential.r0_fm", s.r0_fm);
        if (s.Rc_fm) note("potential.Rc_fm", *s.Rc_fm);
    } else if (model == "coulomb-sphere") {
        const double Zc = r.require_num("potential.Zc");
        const double Rc = r.require_num("potential.Rc");
        rc.potential.V = coulomb_sphere(Zc, Rc);
        if (rc.potential.eta_V == 0.0) rc.potential.eta_V = 1.0;
        note("potential.Zc", Zc);
        note("potential.Rc", Rc);
    } else if (model == "coulomb-sphere-correction") {
        const double Zc = r.require_num("potential.Zc");
        const double Rc = r.require_num("potential.Rc");
        rc.potential.V = sphere_coulomb_correction(Zc, Rc);
        if (rc.potential.eta_V == 0.0) rc.potential.eta_V = 1.0;
        note("potential.Zc", Zc);
        note("potential.Rc", Rc);
    } else if (model == "tabulated") {
        const std::string file = r.str("potential.file", "");
        if (file.empty()) throw ConfigError("potential.file: required for tabulated model");
        std::ifstream in(file);
        if (!in) throw ConfigError("potential.file: cannot open '" + file + "'");
        std::vector<double> rs, vs;
        double a, b;
        while (in >> a >> b) {
            rs.push_back(a);
            vs.push_back(b);
        }
        RadialComponent f = tabulated(rs, vs);
        rc.meta.emplace_back("potential.file", file);
        if (rc.potential.eta_V != 0.0) rc.potential.V = f;
        if (rc.potential.eta_S != 0.0) rc.potential.S = f;
        if (rc.potential.eta_W != 0.0) rc.potential.W = f;
    } else {
        throw ConfigError("potential.model: unknown model '" + model + "'");
    }
}

} // namespace

RunConfig build_config(const std::map<std::string, ConfigValue>& kv,
                       const std::string& job_override) {
    Reader r{kv, {}};
    RunConfig rc;

    std::string job = job_override.empty() ? r.str("job", "spectrum") : job_override;
    if (job == "spectrum") rc.job = Job::spectrum;
    else if (job == "stabilize") rc.job = Job::stabilize;
    else if (job == "sweep") rc.job = Job::sweep;
    else if (job == "table") rc.job = Job::table;
    else throw ConfigError("job: unknown job '" + job + "'");

    // physics
    const std::string units = r.str("physics.units", "atomic");
    if (units != "atomic" && units != "nuclear")
        throw ConfigError("physics.units: must be \"atomic\" or \"nuclear\"");
    rc.physics.kappa = static_cast<int>(r.num("physics.kappa", -1));
    const std::string branch = r.str("physics.branch", "positive");
    if (branch != "positive" && branch != "negative")
        throw ConfigError("physics.branch: must be \"positive\" or \"negative\"");
    rc.physics.branch = branch == "positive" ? Branch::positive : Branch::negative;
    if (units == "atomic") {
        rc.physics.Z = r.num("physics.Z", 0.0);
        if (auto l = r.get<double>("physics.lambda")) {
            rc.physics.lambda = *l;
        } else {
            const double over = r.num("physics.alpha_over", 1.0);
            if (!(over >= 1.0)) throw ConfigError("physics.alpha_over: must be >= 1");
            rc.physics.lambda = kFineStructure / over;
        }
    }

    apply_potential(rc, r);

    if (auto sc = r.get<double>("physics.lambda_over")) {
        if (!(*sc >= 1.0)) throw ConfigError("physics.lambda_over: must be >= 1");
        rc.physics.lambda /= *sc;
    }

    // basis
    rc.N = static_cast<int>(r.num("basis.N", 100));
    if (rc.N < 2) throw ConfigError("basis.N: must be at least 2");
    rc.K = static_cast<int>(r.num("basis.K", 0));
    if (rc.K != 0 && rc.K < rc.N + 1)
        throw ConfigError("basis.K: must be at least N+1");
    rc.N_jitter = r.num("basis.N_jitter", 0.05);
    if (auto og = r.get<std::vector<double>>("basis.omega_grid")) rc.omega_grid = *og;
    rc.omega = r.num("basis.omega", 0.0);

    // scaling
    rc.theta = r.num("scaling.theta", 0.0);
    if (auto tg = r.get<std::vector<double>>("scaling.theta_grid")) rc.theta_grid = *tg;

    // tolerances
    rc.tol.tol_b = r.num("tolerances.tol_b", 1e-6);
    rc.tol.tol_c = r.num("tolerances.tol_c", 0.05);
    rc.solve.residual_tol = r.num("tolerances.residual", 1e-8);
    rc.solve.use_shift = r.get<bool>("tolerances.shift").value_or(true);

    // output
    rc.out_dir = r.str("output.dir", ".");
    if (auto f = r.get<std::vector<std::string>>("output.formats")) rc.formats = *f;
    for (const auto& f : rc.formats)
        if (f != "csv" && f != "json")
            throw ConfigError("output.formats: unknown format '" + f + "'");

    // ---- cross validation against module preconditions ----
    try {
        rc.physics.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("physics: ") + e.what());
    }
    if (rc.job == Job::spectrum && !(rc.omega > 0.0))
        throw ConfigError("basis.omega: required and positive for spectrum jobs");
    if (rc.job == Job::stabilize) {
        if (rc.omega_grid.size() < 3)
            throw ConfigError("basis.omega_grid: stabilize needs at least 3 omega values");
        for (double w : rc.omega_grid)
            if (!(w > 0.0)) throw ConfigError("basis.omega_grid: entries must be positive");
    }
    if (rc.job == Job::sweep) {
        if (!(rc.omega > 0.0)) throw ConfigError("basis.omega: required for sweep jobs");
        if (rc.theta_grid.empty())
            throw ConfigError("scaling.theta_grid: required for sweep jobs");
    }
    const double theta_max =
        rc.theta_grid.empty()
            ? rc.theta
            : *std::max_element(rc.theta_grid.begin(), rc.theta_grid.end());
    if (!(theta_max >= 0.0) || theta_max >= M_PI_2)
        throw ConfigError("scaling.theta: must lie in [0, pi/2)");
    if (!rc.potential.empty() && theta_max > theta_ceiling(rc.potential) + 1e-15)
        throw ConfigError("scaling.theta: " + std::to_string(theta_max) +
                          " is above the analyticity ceiling " +
                          std::to_string(theta_ceiling(rc.potential)) +
                          " of potential component '" +
                          theta_limiting_component(rc.potential) + "'");
    return rc;
}

RunConfig load_config(const std::string& path, const std::string& job_override) {
    return build_config(parse_toml_file(path), job_override);
}

} // namespace rcs::cli
