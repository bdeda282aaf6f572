#include "stagmesh/harness/presets.hpp"

#include "stagmesh/errors.hpp"

#include <numbers>

namespace stagmesh::harness {
namespace {

using integrators::Scheme;
using integrators::Variant;

constexpr double two_pi = 2.0 * std::numbers::pi;

const std::vector<double> halvings{1.0 / 10, 1.0 / 20, 1.0 / 40, 1.0 / 80, 1.0 / 160};

ExperimentSpec manufactured(const std::string& name, const std::string& model, bool paper_scale)
{
    ExperimentSpec s;
    s.name = name;
    s.model.kind = model;
    s.model.eps = 0.7;
    s.grid = {paper_scale ? 256 : 64, paper_scale ? 256 : 64, two_pi, two_pi};
    s.t_final = 1.0;
    s.dt_list = halvings;
    s.scheme.dt = halvings.back();
    s.exact.kind = "trig";
    s.exact.profile = "sine";
    s.initial.kind = "exact";
    return s;
}

ExperimentSpec bdf(int k, bool paper_scale)
{
    ExperimentSpec s = manufactured("ac-bdf" + std::to_string(k), "allen-cahn", paper_scale);
    s.scheme.bdf_order = k;
    return s;
}

ExperimentSpec spinodal(const std::string& name, double s12, bool paper_scale)
{
    ExperimentSpec s;
    s.name = name;
    s.model.kind = "ternary";
    s.model.mobility = 1e-3;
    s.model.eps = 0.025;
    s.model.lambda = 7.0;
    s.model.tensions = {s12, 1.0, 1.0};
    s.scheme.placement = integrators::EtaPlacement::outside_g;
    s.grid = {paper_scale ? 256 : 64, paper_scale ? 128 : 32, 2.0, 1.0};
    s.t_final = 20.0;
    s.scheme.dt = 2e-4;
    s.initial.kind = "spinodal";
    s.initial.amplitude = 0.001;
    s.seed = 1;
    s.trace_stride = 500;
    s.snapshot_times = {0.0, 1.0, 5.0, 20.0};
    return s;
}

}  // namespace

const std::vector<PresetInfo>& preset_catalog()
{
    static const std::vector<PresetInfo> catalog{
        {"ac-converge-desk", "Allen-Cahn manufactured cos x cos y sin t, CN-SM, dt 1/10..1/160"},
        {"ch-converge-desk", "Cahn-Hilliard manufactured cos x cos y sin t, CN-SM, dt 1/10..1/160"},
        {"ac-gsav", "Allen-Cahn manufactured, GSAV baseline"},
        {"ac-cn-imex", "Allen-Cahn manufactured, plain CN-IMEX baseline"},
        {"ac-swapped", "Allen-Cahn manufactured, swapped-mesh CN-SM"},
        {"ac-bdf2", "Allen-Cahn manufactured, BDF2-SM"},
        {"ac-bdf3", "Allen-Cahn manufactured, BDF3-SM"},
        {"ac-bdf4", "Allen-Cahn manufactured, BDF4-SM"},
        {"ns-converge-desk", "Navier-Stokes manufactured vortex on [0,1)^2, nu = 1"},
        {"shear-layer", "double shear layer, rho = 100, sigma = 0.05, nu = 5e-5, dt = 3e-4, T = 1.2"},
        {"mbe-converge", "MBE manufactured cos x cos y exp(-t), arctan variant, M = 0.1, eps = 0.1"},
        {"mbe-coarsening", "MBE coarsening from 0.001 noise, L = 12.8, eps = 0.03, theta = 0.01, C0 = 1e5"},
        {"ternary-bubbles", "ternary CH two bubbles on [0,2]^2, self-reference dt = 1e-5, T = 0.1"},
        {"ternary-spinodal-111", "ternary CH spinodal decomposition, tensions (1,1,1), T = 20"},
        {"ternary-spinodal-311", "ternary CH spinodal decomposition, tensions (3,1,1), T = 20"},
    };
    return catalog;
}

ExperimentSpec preset(const std::string& name, bool paper_scale)
{
    if (name == "ac-converge-desk") {
        return manufactured(name, "allen-cahn", paper_scale);
    }
    if (name == "ch-converge-desk") {
        return manufactured(name, "cahn-hilliard", paper_scale);
    }
    if (name == "ac-gsav" || name == "ac-cn-imex" || name == "ac-swapped") {
        ExperimentSpec s = manufactured(name, "allen-cahn", paper_scale);
        s.scheme.scheme = name == "ac-gsav" ? Scheme::gsav : name == "ac-cn-imex" ? Scheme::cn_imex : Scheme::swapped;
        return s;
    }
    if (name == "ac-bdf2") {
        return bdf(2, paper_scale);
    }
    if (name == "ac-bdf3") {
        return bdf(3, paper_scale);
    }
    if (name == "ac-bdf4") {
        return bdf(4, paper_scale);
    }
    if (name == "ns-converge-desk") {
        ExperimentSpec s = manufactured(name, "navier-stokes", paper_scale);
        s.model.nu = 1.0;
        s.grid.lx = 1.0;
        s.grid.ly = 1.0;
        s.exact.kind = "vortex";
        return s;
    }
    if (name == "shear-layer") {
        ExperimentSpec s;
        s.name = name;
        s.model.kind = "navier-stokes";
        s.model.nu = 5e-5;
        s.grid = {paper_scale ? 256 : 128, paper_scale ? 256 : 128, 1.0, 1.0};
        s.t_final = 1.2;
        s.scheme.dt = 3e-4;
        s.initial.kind = "shear-layer";
        s.initial.rho = 100.0;
        s.initial.sigma = 0.05;
        s.trace_stride = 10;
        s.snapshot_times = {0.8, 1.0, 1.2};
        return s;
    }
    if (name == "mbe-converge") {
        ExperimentSpec s = manufactured(name, "mbe", paper_scale);
        s.model.mobility = 0.1;
        s.model.eps = 0.1;
        s.exact.profile = "exponential";
        s.scheme.variant = Variant::arctan;
        return s;
    }
    if (name == "mbe-coarsening") {
        ExperimentSpec s;
        s.name = name;
        s.model.kind = "mbe";
        s.model.mobility = 1.0;
        s.model.eps = 0.03;
        s.grid = {paper_scale ? 200 : 128, paper_scale ? 200 : 128, 12.8, 12.8};
        s.t_final = 50.0;
        s.scheme.variant = Variant::arctan;
        s.scheme.theta = 0.01;
        s.scheme.c0 = 1e5;
        s.scheme.dt = 1e-3;
        s.initial.kind = "uniform-noise";
        s.initial.amplitude = 0.001;
        s.seed = 1;
        s.trace_stride = 50;
        s.snapshot_times = {0.0, 1.0, 10.0, 50.0};
        return s;
    }
    if (name == "ternary-bubbles") {
        ExperimentSpec s;
        s.name = name;
        s.model.kind = "ternary";
        s.model.mobility = 1e-5;
        s.model.eps = 0.02;
        s.model.lambda = 7.0;
        s.scheme.placement = integrators::EtaPlacement::outside_g;
        s.grid = {paper_scale ? 256 : 128, paper_scale ? 256 : 128, 2.0, 2.0};
        s.t_final = 0.1;
        s.dt_list = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
        s.reference_dt = 1e-5;
        s.scheme.dt = 1.25e-3;
        s.initial.kind = "bubbles";
        return s;
    }
    if (name == "ternary-spinodal-111") {
        return spinodal(name, 1.0, paper_scale);
    }
    if (name == "ternary-spinodal-311") {
        return spinodal(name, 3.0, paper_scale);
    }
    throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace stagmesh::harness
