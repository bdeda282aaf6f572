#pragma once

#include "stagmesh/harness/initial.hpp"
#include "stagmesh/integrators/stepper.hpp"
#include "stagmesh/models/manufactured.hpp"
#include "stagmesh/models/ternary.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stagmesh::harness {

using integrators::SMConfig;

struct ModelSpec {
    /// allen-cahn | cahn-hilliard | linear-diffusion | mbe | ternary | navier-stokes
    std::string kind = "allen-cahn";
    double eps = 0.7;
    double mobility = 1.0;
    double nu = 1.0;
    double kappa = 1.0;
    double lambda = 0.0;
    models::SurfaceTensions tensions;
    bool dealias = false;
};

struct GridSpec {
    int nx = 64;
    int ny = 64;
    double lx = 6.283185307179586;
    double ly = 6.283185307179586;
};

/// Analytic solution used to manufacture a forcing term.
struct ExactSpec {
    /// none | trig | vortex
    std::string kind = "none";
    int mx = 1;
    int my = 1;
    /// sine | exponential | linear
    std::string profile = "sine";
    double a0 = 0.0;
    double a1 = 1.0;
};

struct InitialSpec {
    /// exact | uniform-noise | smooth-random | shear-layer | bubbles | spinodal
    std::string kind = "smooth-random";
    double amplitude = 0.001;
    double offset = 0.0;
    int max_mode = 4;
    double rho = 100.0;
    double sigma = 0.05;
    Bubble bubble1{1.37, 1.0, 0.35};
    Bubble bubble2{0.63, 1.0, 0.35};
};

struct ExperimentSpec {
    std::string name = "custom";
    ModelSpec model;
    GridSpec grid;
    SMConfig scheme;
    double t_final = 1.0;
    /// Strictly decreasing time steps for convergence studies.
    std::vector<double> dt_list;
    /// Self-reference step when there is no exact solution (0 = unused).
    double reference_dt = 0.0;
    ExactSpec exact;
    InitialSpec initial;
    std::uint64_t seed = 0;
    /// Trace row every `trace_stride` steps.
    int trace_stride = 1;
    std::vector<double> snapshot_times;
    /// Empty means no files are written.
    std::string output_dir;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

[[nodiscard]] Grid2D make_grid(const GridSpec& g);
[[nodiscard]] models::ModelPtr make_model(const ModelSpec& m, const Grid2D& grid);
/// Null when spec.kind == "none".
[[nodiscard]] models::ExactPtr make_exact(const ExactSpec& e);
[[nodiscard]] State make_initial(const ExperimentSpec& spec, const Grid2D& grid, const models::ExactSolution* exact);
/// Problem with manufactured forcing attached when an exact solution is given.
[[nodiscard]] integrators::Problem make_problem(models::ModelPtr model, models::ExactPtr exact);

}  // namespace stagmesh::harness
