#include "stagmesh/models/manufactured.hpp"

#include "stagmesh/errors.hpp"

#include <cmath>
#include <numbers>

namespace stagmesh::models {
namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace

double TimeProfile::value(double t) const noexcept
{
    switch (kind) {
    case Kind::sine: return std::sin(t);
    case Kind::exponential: return std::exp(-t);
    case Kind::linear: break;
    }
    return a0 + a1 * t;
}

double TimeProfile::derivative(double t) const noexcept
{
    switch (kind) {
    case Kind::sine: return std::cos(t);
    case Kind::exponential: return -std::exp(-t);
    case Kind::linear: break;
    }
    return a1;
}

TrigProductSolution::TrigProductSolution(int mx, int my, TimeProfile profile)
    : mx_(mx), my_(my), profile_(profile)
{
}

RealField TrigProductSolution::shape(const Grid2D& grid) const
{
    const double ax = two_pi * mx_ / grid.lx();
    const double ay = two_pi * my_ / grid.ly();
    return RealField::from_function(grid, [&](double x, double y) { return std::cos(ax * x) * std::cos(ay * y); });
}

State TrigProductSolution::value(const Grid2D& grid, double t) const
{
    return {profile_.value(t) * shape(grid)};
}

State TrigProductSolution::time_derivative(const Grid2D& grid, double t) const
{
    return {profile_.derivative(t) * shape(grid)};
}

namespace {

void require_square(const Grid2D& grid)
{
    if (grid.lx() != grid.ly()) {
        throw ConfigError("vortex solution needs a square domain");
    }
}

State vortex_shape(const Grid2D& grid)
{
    require_square(grid);
    const double a = two_pi / grid.lx();
    const double pi = std::numbers::pi;
    return {RealField::from_function(grid, [&](double x, double y) { return pi * std::sin(a * x) * std::cos(a * y); }),
            RealField::from_function(grid, [&](double x, double y) { return -pi * std::cos(a * x) * std::sin(a * y); })};
}

}  // namespace

State VortexSolution::value(const Grid2D& grid, double t) const
{
    return scaled(std::sin(t), vortex_shape(grid));
}

State VortexSolution::time_derivative(const Grid2D& grid, double t) const
{
    return scaled(std::cos(t), vortex_shape(grid));
}

std::optional<State> VortexSolution::pressure_gradient(const Grid2D& grid, double t) const
{
    require_square(grid);
    const double a = two_pi / grid.lx();
    const double s = std::sin(t);
    return State{
        RealField::from_function(grid, [&](double x, double y) { return -a * s * std::sin(a * x) * std::sin(a * y); }),
        RealField::from_function(grid, [&](double x, double y) { return a * s * std::cos(a * x) * std::cos(a * y); })};
}

State manufactured_forcing(const DissipativeModel& model, const ExactSolution& exact, double t)
{
    const Grid2D& grid = model.grid();
    if (exact.components() != model.components()) {
        throw ConfigError("manufactured solution has " + std::to_string(exact.components()) + " component(s), model " +
                          model.name() + " needs " + std::to_string(model.components()));
    }
    const State ue = exact.value(grid, t);
    State f = exact.time_derivative(grid, t);
    axpy(f, 1.0, to_real(model.apply_linear(to_spectral(ue))));
    axpy(f, 1.0, eval_nonlinear(model, ue));
    if (auto gp = exact.pressure_gradient(grid, t)) {
        axpy(f, 1.0, *gp);
    }
    return f;
}

}  // namespace stagmesh::models
