#include "stagmesh/models/model.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <algorithm>
#include <cmath>

namespace stagmesh::models {

void DissipativeModel::require_shape(const State& u, const char* where) const
{
    if (u.size() != components()) {
        throw GridMismatchError(std::string(where) + ": " + name() + " expects " + std::to_string(components())
                                + " component(s), got " + std::to_string(u.size()));
    }
    for (const auto& f : u) {
        spectral::require_same_grid(grid_, f.grid(), where);
    }
}

RealField DissipativeModel::filtered(const RealField& f) const
{
    return dealias_ ? spectral::dealias_two_thirds(f) : f;
}

SpectralField DissipativeModel::filtered(const SpectralField& f) const
{
    return dealias_ ? spectral::dealias_two_thirds(f) : f;
}

State eval_nonlinear(const DissipativeModel& model, const State& u)
{
    model.require_shape(u, "eval_nonlinear");
    if (!all_finite(u)) {
        throw NonFiniteError("eval_nonlinear: non-finite input state");
    }
    State g = model.nonlinear(u);
    if (!all_finite(g)) {
        throw NonFiniteError("eval_nonlinear: " + model.name() + " produced a non-finite nonlinear term");
    }
    return g;
}

double energy_tot(const DissipativeModel& model, const State& u)
{
    model.require_shape(u, "energy_tot");
    return model.energy_tot(u);
}

double dissipation_rate(const DissipativeModel& model, const State& u)
{
    model.require_shape(u, "dissipation_rate");
    // Quadratic forms are non-negative analytically; clip round-off below zero.
    return std::max(0.0, model.dissipation(u));
}

}  // namespace stagmesh::models
