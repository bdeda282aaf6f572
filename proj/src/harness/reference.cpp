#include "stagmesh/harness/reference.hpp"

#include "stagmesh/errors.hpp"

#include <cmath>

namespace stagmesh::harness {
namespace {

State rhs(const Problem& p, const State& u, double t)
{
    const auto& m = *p.model;
    State r = models::scaled(-1.0, models::eval_nonlinear(m, u));
    if (p.forcing) {
        r = models::lincomb(1.0, r, 1.0, p.forcing(t));
    }
    models::SpectralState du = models::lincomb(1.0, models::to_spectral(r), -1.0, m.apply_linear(models::to_spectral(u)));
    m.project(du);
    return models::to_real(du);
}

}  // namespace

State rk4_reference(const Problem& p, State u0, double dt, double t_final, double t0)
{
    if (!p.model) {
        throw ConfigError("rk4_reference: problem has no model");
    }
    if (!(dt > 0.0) || !(t_final >= t0)) {
        throw ConfigError("rk4_reference: need dt > 0 and t_final >= t0");
    }
    p.model->require_shape(u0, "rk4_reference");
    const long steps = std::lround((t_final - t0) / dt);
    State u = std::move(u0);
    for (long n = 0; n < steps; ++n) {
        const double t = t0 + static_cast<double>(n) * dt;
        try {
            const State k1 = rhs(p, u, t);
            const State k2 = rhs(p, models::lincomb(1.0, u, 0.5 * dt, k1), t + 0.5 * dt);
            const State k3 = rhs(p, models::lincomb(1.0, u, 0.5 * dt, k2), t + 0.5 * dt);
            const State k4 = rhs(p, models::lincomb(1.0, u, dt, k3), t + dt);
            State next = models::lincomb(1.0, models::lincomb(1.0, k1, 2.0, k2), 1.0, models::lincomb(2.0, k3, 1.0, k4));
            u = models::lincomb(1.0, u, dt / 6.0, next);
        } catch (const NonFiniteError& e) {
            throw BlowUpError(std::string("rk4_reference: ") + e.what(), n + 1);
        }
        if (!models::all_finite(u)) {
            throw BlowUpError("rk4_reference: non-finite state", n + 1);
        }
    }
    return u;
}

double rk4_stable_dt(const models::DissipativeModel& model)
{
    const double rho = model.linear_spectral_radius();
    return rho > 0.0 ? 2.78 / rho : INFINITY;
}

}  // namespace stagmesh::harness
