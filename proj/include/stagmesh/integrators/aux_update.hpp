#pragma once

#include "stagmesh/integrators/config.hpp"

#include <optional>

namespace stagmesh::integrators {

/// v_prev * exp(-theta * k_n / e_n * dt), with e_n = theta*E_tot + C0.
///
/// The result satisfies 0 < result <= v_prev for every k_n >= 0, e_n > 0, dt > 0;
/// values that would underflow are held at the smallest positive double.
/// Throws EnergyShiftError if e_n <= 0 and ConfigError on a negative k_n or v_prev.
[[nodiscard]] double update_v_log(double v_prev, double k_n, double e_n, double theta, double dt);

/// tan(arctan(v_prev) - dt * theta * k_n / (theta^2 e_tot_n^2 + 1)), never above v_prev.
///
/// If c_star is set and the result falls below it, the result becomes
/// min(c_star, v_prev). Throws BranchError when the angle reaches -pi/2.
[[nodiscard]] double update_v_arctan(double v_prev, double k_n, double e_tot_n, double theta, double dt,
                                     std::optional<double> c_star = std::nullopt);

/// tan(arctan(v) - delta) without the monotonicity guard; delta may be negative.
/// Throws BranchError if the angle leaves (-pi/2, pi/2).
[[nodiscard]] double arctan_shift(double v, double delta);

/// chi(V) with reference energy e. Every kind returns exactly 1 when v == e.
[[nodiscard]] double chi_eval(ChiKind kind, double v, double e, double base = 2.718281828459045);

}  // namespace stagmesh::integrators
