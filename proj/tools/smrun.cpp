// smrun: run, study and list staggered-mesh experiments.

#include "stagmesh/cli/config.hpp"
#include "stagmesh/errors.hpp"
#include "stagmesh/harness/convergence.hpp"
#include "stagmesh/harness/presets.hpp"
#include "stagmesh/harness/run.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using stagmesh::cli::Config;
using stagmesh::cli::json;

struct Common {
    std::vector<std::string> sets;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
    std::optional<int> grid;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--set", c.sets, "Override a config key, e.g. --set scheme.theta=0.5");
    cmd->add_option("--out", c.out, "Output directory");
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--dt", c.dt, "Time step (scheme.dt)");
    cmd->add_option("--grid", c.grid, "Grid points along x; y keeps the aspect ratio");
}

/// Applies --set and the shortcut flags on top of `doc`, then resolves against `base`.
Config resolve(json doc, const Config& base, const Common& c)
{
    for (const auto& s : c.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw stagmesh::ConfigError("--set expects key=value, got '" + s + "'");
        }
        stagmesh::cli::apply_override(doc, s.substr(0, eq), s.substr(eq + 1));
    }
    Config cfg = stagmesh::cli::from_json(doc, base);
    auto& spec = cfg.spec;
    if (!c.out.empty()) {
        spec.output_dir = c.out;
    }
    if (c.seed) {
        spec.seed = *c.seed;
    }
    if (c.dt) {
        spec.scheme.dt = *c.dt;
    }
    if (c.grid) {
        const long ny = static_cast<long>(*c.grid) * spec.grid.ny / spec.grid.nx;
        spec.grid.nx = *c.grid;
        spec.grid.ny = static_cast<int>(ny);
    }
    spec.validate();
    return cfg;
}

void save_config(const Config& cfg)
{
    if (cfg.spec.output_dir.empty()) {
        return;
    }
    std::filesystem::create_directories(cfg.spec.output_dir);
    std::ofstream(std::filesystem::path(cfg.spec.output_dir) / "config.json") << stagmesh::cli::to_json(cfg).dump(2)
                                                                                << '\n';
}

int do_run(const Config& cfg)
{
    save_config(cfg);
    const auto res = stagmesh::harness::run(cfg.spec);
    if (cfg.verbosity >= 2) {
        const auto& rows = res.trace.rows();
        for (const auto& r : rows) {
            std::printf("t=%.6g E=%.10g V=%.10g eta=%.10g\n", r[0], r[1], r[2], r[3]);
        }
    }
    if (!res.ok()) {
        std::fprintf(stderr, "%s: failed at step %ld: %s\n", cfg.spec.name.c_str(), res.failed_step, res.failure.c_str());
        return 2;
    }
    if (cfg.verbosity >= 1) {
        std::printf("%s: steps=%ld t=%.10g E=%.12g V=%.12g max|eta-1|=%.3e V_violations=%ld\n", cfg.spec.name.c_str(),
                    res.steps, res.landing.t, res.landing.energy, res.landing.v, res.max_eta_deviation,
                    res.v_violations);
    }
    return 0;
}

int do_converge(const Config& cfg)
{
    save_config(cfg);
    const auto rep = stagmesh::harness::convergence_study(cfg.spec);
    if (!cfg.spec.output_dir.empty()) {
        rep.write_csv(std::filesystem::path(cfg.spec.output_dir) / "convergence.csv");
    }
    bool failed = false;
    if (cfg.verbosity >= 1) {
        std::printf("%-12s %-12s %-12s %-8s %-8s\n", "dt", "err_u", "err_E", "order_u", "order_E");
    }
    for (const auto& r : rep.rows) {
        failed = failed || !r.failure.empty();
        if (cfg.verbosity >= 1) {
            std::printf("%-12.6g %-12.4e %-12.4e %-8.3f %-8.3f%s%s\n", r.dt, r.err_u, r.err_e, r.order_u, r.order_e,
                        r.failure.empty() ? "" : "  failed: ", r.failure.c_str());
        }
    }
    if (cfg.verbosity >= 1) {
        std::printf("%s: final order_u=%.3f order_E=%.3f (%s reference)\n", cfg.spec.name.c_str(), rep.final_order_u(),
                    rep.final_order_e(),
                    rep.reference == stagmesh::harness::ReferenceKind::exact ? "exact" : "self");
    }
    return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Staggered-mesh dissipative-system solver"};
    app.require_subcommand(1);

    Common common;
    std::string config_path;
    std::string preset_name;
    bool paper_scale = false;

    auto* run = app.add_subcommand("run", "Run one simulation from a JSON config");
    run->add_option("config", config_path, "Config file")->required();
    add_common(run, common);

    auto* converge = app.add_subcommand("converge", "Time-step convergence study from a JSON config");
    converge->add_option("config", config_path, "Config file")->required();
    add_common(converge, common);

    auto* pre = app.add_subcommand("preset", "Run a named preset (a study when it lists time steps)");
    pre->add_option("name", preset_name, "Preset name (see list-presets)")->required();
    pre->add_flag("--paper-scale", paper_scale, "Use published grid sizes and horizons");
    add_common(pre, common);

    auto* list = app.add_subcommand("list-presets", "List preset names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& p : stagmesh::harness::preset_catalog()) {
                std::printf("%-22s %s\n", p.name.c_str(), p.summary.c_str());
            }
            return 0;
        }
        if (run->parsed() || converge->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                throw stagmesh::ConfigError("cannot read config file " + config_path);
            }
            json doc = json::parse(in, nullptr, false);
            if (doc.is_discarded()) {
                throw stagmesh::ConfigError("malformed JSON in " + config_path);
            }
            const Config cfg = resolve(std::move(doc), Config{}, common);
            return run->parsed() ? do_run(cfg) : do_converge(cfg);
        }
        Config base;
        base.spec = stagmesh::harness::preset(preset_name, paper_scale);
        base.spec.output_dir = "out/" + preset_name;
        const Config cfg = resolve(json::object(), base, common);
        return cfg.spec.dt_list.empty() ? do_run(cfg) : do_converge(cfg);
    } catch (const stagmesh::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
