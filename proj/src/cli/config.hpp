#ifndef RCS_CLI_CONFIG_HPP
#define RCS_CLI_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rcs/potentials.hpp"
#include "rcs/spectral.hpp"

namespace rcs::cli {

/// One parsed config value. Arrays are homogeneous (numbers or strings).
using ConfigValue =
    std::variant<bool, double, std::string, std::vector<double>, std::vector<std::string>>;

/// Minimal TOML subset: [section] headers, key = value with strings, numbers,
/// booleans and flat arrays, # comments. Keys are returned dotted
/// ("section.key"). Anything else is rejected with the offending line.
std::map<std::string, ConfigValue> parse_toml(const std::string& text);
std::map<std::string, ConfigValue> parse_toml_file(const std::string& path);

enum class Job { spectrum, stabilize, sweep, table };

struct RunConfig {
    Job job = Job::spectrum;
    std::string table_name; // for Job::table

    PhysicsParams physics;
    PotentialSpec potential;
    std::string potential_model = "none";

    int N = 100;
    int K = 0; // 0 -> 2N
    std::vector<double> omega_grid;
    double omega = 0.0;
    double N_jitter = 0.05;

    double theta = 0.0;
    std::vector<double> theta_grid;

    ClassifyTolerances tol;
    SolveOptions solve;

    int jobs = 1;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};

    // descriptive metadata captured at parse time (model parameters etc.)
    std::vector<std::pair<std::string, std::string>> meta;
};

/// Builds and validates a RunConfig. Throws ConfigError naming the offending
/// field path (e.g. "scaling.theta: above the analyticity ceiling ...").
RunConfig load_config(const std::string& path, const std::string& job_override);

/// Same, from already-parsed values (exposed for tests).
RunConfig build_config(const std::map<std::string, ConfigValue>& kv,
                       const std::string& job_override);

} // namespace rcs::cli

#endif
