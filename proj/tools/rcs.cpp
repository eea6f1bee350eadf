// Command-line front end: spectrum, stabilization, theta-sweep and
// table-reproduction jobs driven by a TOML config file.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "../src/cli/config.hpp"
#include "../src/cli/run.hpp"
#include "rcs/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rcs: relativistic bound states and resonances by complex scaling"};
    app.set_version_flag("--version", RCS_VERSION);
    app.require_subcommand(1);

    std::string config_path, out_dir, table_name;
    int jobs = 1;

    auto add_common = [&](CLI::App* sub, bool need_config) {
        auto* c = sub->add_option("--config", config_path, "run configuration (TOML)");
        if (need_config) c->required();
        sub->add_option("--jobs", jobs, "worker threads for grid points")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", out_dir, "output directory");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "single (omega, theta) spectrum");
    CLI::App* stab = app.add_subcommand("stabilize", "omega-grid stabilization run");
    CLI::App* sweep = app.add_subcommand("sweep", "theta sweep with cut-curve export");
    CLI::App* table = app.add_subcommand("table", "reproduce a published table");
    add_common(spectrum, true);
    add_common(stab, true);
    add_common(sweep, true);
    add_common(table, false);
    table->add_option("name", table_name, "table name (I..VI)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        rcs::cli::RunConfig rc;
        if (table->parsed() && config_path.empty()) {
            rc.job = rcs::cli::Job::table;
        } else {
            std::string job = spectrum->parsed() ? "spectrum"
                              : stab->parsed()   ? "stabilize"
                              : sweep->parsed()  ? "sweep"
                                                 : "table";
            rc = rcs::cli::load_config(config_path, job);
        }
        rc.table_name = table_name;
        rc.jobs = jobs;
        if (!out_dir.empty()) rc.out_dir = out_dir;
        return rcs::cli::run_job(rc);
    } catch (const rcs::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const rcs::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
