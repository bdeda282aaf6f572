#include "stagmesh/integrators/aux_update.hpp"

#include "stagmesh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace stagmesh::integrators {

double update_v_log(double v_prev, double k_n, double e_n, double theta, double dt)
{
    if (!(e_n > 0.0)) {
        std::ostringstream os;
        os << "log-form auxiliary update needs theta*E_tot + C0 > 0, got " << e_n << "; increase C0";
        throw EnergyShiftError(os.str());
    }
    if (!(v_prev > 0.0) || !(k_n >= 0.0) || !(theta > 0.0) || !(dt > 0.0)) {
        throw ConfigError("update_v_log expects v_prev > 0, k_n >= 0, theta > 0, dt > 0");
    }
    const double x = -theta * k_n / e_n * dt;
    const double v = v_prev * std::exp(x);
    return std::clamp(v, std::numeric_limits<double>::denorm_min(), v_prev);
}

double arctan_shift(double v, double delta)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double angle = std::atan(v) - delta;
    if (!(angle > -half_pi) || !(angle < half_pi)) {
        std::ostringstream os;
        os << "arctan auxiliary update left the principal branch (angle " << angle
           << "); reduce theta or the time step";
        throw BranchError(os.str());
    }
    if (delta == 0.0) {
        return v;
    }
    if (std::abs(delta) < std::numbers::pi / 4.0) {
        // tan(a - d) = (v - tan d) / (1 + v tan d) keeps precision for |v| >> 1.
        const double t = std::tan(delta);
        const double den = 1.0 + v * t;
        if (den > 0.0) {
            return (v - t) / den;
        }
    }
    return std::tan(angle);
}

double update_v_arctan(double v_prev, double k_n, double e_tot_n, double theta, double dt,
                       std::optional<double> c_star)
{
    if (!std::isfinite(v_prev) || !(k_n >= 0.0) || !(theta > 0.0) || !(dt > 0.0) || !std::isfinite(e_tot_n)) {
        throw ConfigError("update_v_arctan expects finite v_prev and e_tot_n, k_n >= 0, theta > 0, dt > 0");
    }
    const double te = theta * e_tot_n;
    const double delta = dt * theta * k_n / (te * te + 1.0);
    double v = std::min(arctan_shift(v_prev, delta), v_prev);
    if (c_star && v < *c_star) {
        v = std::min(*c_star, v_prev);
    }
    return v;
}

double chi_eval(ChiKind kind, double v, double e, double base)
{
    switch (kind) {
    case ChiKind::chi1:
        if (e == 0.0) {
            throw EnergyShiftError("chi1 reference energy is zero");
        }
        return v / e;
    case ChiKind::chi2: return std::pow(base, v - e);
    case ChiKind::chi3: return std::cos(v - e);
    case ChiKind::chi4: return 1.0 + (v - e);
    }
    return 1.0;
}

}  // namespace stagmesh::integrators
