#include "stagmesh/harness/spec.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/models/mbe.hpp"
#include "stagmesh/models/navier_stokes.hpp"
#include "stagmesh/models/phase_field.hpp"

#include <cmath>

namespace stagmesh::harness {
namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw ConfigError(what);
    }
}

bool positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

}  // namespace

void ExperimentSpec::validate() const
{
    scheme.validate();
    require(positive(t_final), "t_final must be positive");
    require(grid.nx >= 4 && grid.ny >= 4 && grid.nx % 2 == 0 && grid.ny % 2 == 0,
            "grid.nx and grid.ny must be even and >= 4");
    require(positive(grid.lx) && positive(grid.ly), "grid.lx and grid.ly must be positive");
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        require(positive(dt_list[i]), "dt_list entries must be positive");
        require(i == 0 || dt_list[i] < dt_list[i - 1], "dt_list must be strictly decreasing");
    }
    require(reference_dt >= 0.0 && std::isfinite(reference_dt), "reference_dt must be non-negative");
    require(trace_stride >= 1, "trace_stride must be >= 1");
    require(positive(model.eps), "model.eps must be positive");
    require(positive(model.mobility), "model.mobility must be positive");
    require(positive(model.nu), "model.nu must be positive");
    require(positive(model.kappa), "model.kappa must be positive");
    require(model.lambda >= 0.0, "model.lambda must be non-negative");
    for (double t : snapshot_times) {
        require(t >= 0.0 && t <= t_final, "snapshot_times must lie in [0, t_final]");
    }
    require(initial.kind != "exact" || exact.kind != "none", "initial.kind 'exact' needs an exact solution");
}

Grid2D make_grid(const GridSpec& g)
{
    return Grid2D(g.nx, g.ny, g.lx, g.ly);
}

models::ModelPtr make_model(const ModelSpec& m, const Grid2D& grid)
{
    std::shared_ptr<models::DissipativeModel> out;
    if (m.kind == "allen-cahn") {
        out = std::make_shared<models::AllenCahn>(grid, m.eps);
    } else if (m.kind == "cahn-hilliard") {
        out = std::make_shared<models::CahnHilliard>(grid, m.eps);
    } else if (m.kind == "linear-diffusion") {
        out = std::make_shared<models::LinearDiffusion>(grid, m.kappa);
    } else if (m.kind == "mbe") {
        out = std::make_shared<models::MbeNoSlope>(grid, m.mobility, m.eps);
    } else if (m.kind == "ternary") {
        out = std::make_shared<models::TernaryCahnHilliard>(grid, m.tensions, m.lambda, m.mobility, m.eps);
    } else if (m.kind == "navier-stokes") {
        out = std::make_shared<models::NavierStokes2D>(grid, m.nu);
    } else {
        throw ConfigError("unknown model.kind '" + m.kind + "'");
    }
    out->set_dealias(m.dealias);
    return out;
}

models::ExactPtr make_exact(const ExactSpec& e)
{
    if (e.kind == "none") {
        return nullptr;
    }
    if (e.kind == "vortex") {
        return std::make_shared<models::VortexSolution>();
    }
    if (e.kind == "trig") {
        models::TimeProfile p;
        if (e.profile == "sine") {
            p.kind = models::TimeProfile::Kind::sine;
        } else if (e.profile == "exponential") {
            p.kind = models::TimeProfile::Kind::exponential;
        } else if (e.profile == "linear") {
            p.kind = models::TimeProfile::Kind::linear;
        } else {
            throw ConfigError("unknown exact.profile '" + e.profile + "'");
        }
        p.a0 = e.a0;
        p.a1 = e.a1;
        return std::make_shared<models::TrigProductSolution>(e.mx, e.my, p);
    }
    throw ConfigError("unknown exact.kind '" + e.kind + "'");
}

State make_initial(const ExperimentSpec& spec, const Grid2D& grid, const models::ExactSolution* exact)
{
    const InitialSpec& in = spec.initial;
    Rng rng(spec.seed);
    if (in.kind == "exact") {
        if (exact == nullptr) {
            throw ConfigError("initial.kind 'exact' needs an exact solution");
        }
        return exact->value(grid, 0.0);
    }
    if (in.kind == "uniform-noise" || in.kind == "smooth-random") {
        RealField f = in.kind == "uniform-noise" ? uniform_noise(grid, in.amplitude, rng)
                                                 : smooth_random(grid, in.max_mode, in.amplitude, rng);
        for (std::size_t k = 0; k < f.size(); ++k) {
            f[k] += in.offset;
        }
        return {f};
    }
    if (in.kind == "shear-layer") {
        return double_shear_layer(grid, in.rho, in.sigma);
    }
    if (in.kind == "bubbles") {
        return ternary_bubbles(grid, spec.model.eps, in.bubble1, in.bubble2);
    }
    if (in.kind == "spinodal") {
        return ternary_spinodal(grid, in.amplitude, rng);
    }
    throw ConfigError("unknown initial.kind '" + in.kind + "'");
}

integrators::Problem make_problem(models::ModelPtr model, models::ExactPtr exact)
{
    integrators::Problem p{std::move(model), {}};
    if (exact) {
        const models::ModelPtr m = p.model;
        p.forcing = [m, exact](double t) { return models::manufactured_forcing(*m, *exact, t); };
    }
    return p;
}

}  // namespace stagmesh::harness
