#pragma once

#include "stagmesh/integrators/stepper.hpp"

namespace stagmesh::harness {

using integrators::Problem;
using models::State;

/// Classical RK4 for du/dt = P(-A u - g(u) + f(t)), P the model's projection.
///
/// The caller picks dt inside the explicit stability region; see rk4_stable_dt().
/// Throws BlowUpError if a stage goes non-finite.
[[nodiscard]] State rk4_reference(const Problem& p, State u0, double dt, double t_final, double t0 = 0.0);

/// 2.78 / rho(A): the RK4 stability bound for the stiff linear part alone.
/// The nonlinearity can shrink it further.
[[nodiscard]] double rk4_stable_dt(const models::DissipativeModel& model);

}  // namespace stagmesh::harness
