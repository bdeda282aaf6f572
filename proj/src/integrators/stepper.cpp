#include "stagmesh/integrators/stepper.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/integrators/aux_update.hpp"
#include "stagmesh/models/navier_stokes.hpp"
#include "stagmesh/models/ternary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace stagmesh::integrators {
namespace {

using models::DissipativeModel;
using models::SpectralState;

struct Ctx {
    Ctx(const Problem& problem, const SMConfig& config) : p(problem), cfg(config), m(checked(problem))
    {
        cfg.validate();
        c0 = cfg.c0.value_or(m.default_c0());
    }

    static const DissipativeModel& checked(const Problem& problem)
    {
        if (!problem.model) {
            throw ConfigError("problem has no model");
        }
        return *problem.model;
    }

    const Problem& p;
    const SMConfig& cfg;
    const DissipativeModel& m;
    double c0 = 0.0;

    [[nodiscard]] double shifted(const State& u) const { return cfg.theta * models::energy_tot(m, u) + c0; }

    /// K(u) - <dE/du, f(t)>: the decay rate of E_tot along the (possibly forced) flow.
    [[nodiscard]] double k_eff(const State& u, double t) const
    {
        double k = models::dissipation_rate(m, u);
        if (p.forcing) {
            k -= models::inner(m.energy_gradient(u), p.forcing(t));
        }
        return k;
    }

    [[nodiscard]] State nonlinear_term(const State& ubar, double eta) const
    {
        if (cfg.placement == EtaPlacement::inside_g) {
            return models::eval_nonlinear(m, models::scaled(eta, ubar));
        }
        return models::scaled(eta, models::eval_nonlinear(m, ubar));
    }

    /// Solves (u^{n+1} - u^n)/dt + A(...) + S((u^{n+1} + u^n)/2 - eta ubar) + N(eta, ubar) = f(t_mid)
    /// for the increment u^{n+1} - u^n. unm1 selects the 3/4, 1/4 implicit part.
    [[nodiscard]] State cn_update(const State& un, const State* unm1, const State& ubar, double eta, double t_mid,
                                  double dt) const
    {
        const double s = cfg.s_stab;
        SpectralState rhs = m.apply_linear(models::to_spectral(un));
        double b = 0.5;
        if (unm1 != nullptr) {
            b = 0.75;
            models::scale(rhs, 0.75);
            models::axpy(rhs, 0.25, m.apply_linear(models::to_spectral(*unm1)));
        }
        models::scale(rhs, -1.0);

        State rest = models::scaled(-1.0, nonlinear_term(ubar, eta));
        if (s > 0.0) {
            models::axpy(rest, -s, un);
            models::axpy(rest, s * eta, ubar);
        }
        if (p.forcing) {
            models::axpy(rest, 1.0, p.forcing(t_mid));
        }
        models::axpy(rhs, 1.0, models::to_spectral(rest));

        State out = un;
        models::axpy(out, 1.0, models::to_real(m.solve_shifted(1.0 / dt + 0.5 * s, b, rhs)));
        if (!models::all_finite(out)) {
            throw NonFiniteError("time step produced a non-finite state");
        }
        return out;
    }

    /// Semi-implicit (backward-Euler) step of length h with g frozen at u0.
    [[nodiscard]] State implicit_euler(const State& u0, double t_end, double h) const
    {
        SpectralState rhs = m.apply_linear(models::to_spectral(u0));
        models::scale(rhs, -1.0);
        State rest = models::scaled(-1.0, models::eval_nonlinear(m, u0));
        if (p.forcing) {
            models::axpy(rest, 1.0, p.forcing(t_end));
        }
        models::axpy(rhs, 1.0, models::to_spectral(rest));
        State out = u0;
        models::axpy(out, 1.0, models::to_real(m.solve_shifted(1.0 / h, 1.0, rhs)));
        return out;
    }

    [[nodiscard]] double initial_v(const State& u) const
    {
        const double v = shifted(u);
        if (cfg.variant == Variant::log && !(v > 0.0)) {
            std::ostringstream os;
            os << "initial theta*E_tot + C0 = " << v << " is not positive; increase C0";
            throw EnergyShiftError(os.str());
        }
        return v;
    }

    /// Advances V over dt with the rate evaluated at (u, t). Returns the previous V.
    double advance_aux(AuxState& aux, const State& u, double t, double dt) const
    {
        const double k = k_eff(u, t);
        const double e = shifted(u);
        const double v_old = aux.v_half;
        if (cfg.variant == Variant::log) {
            if (!(e > 0.0)) {
                std::ostringstream os;
                os << "theta*E_tot + C0 = " << e << " is not positive at t = " << t << "; increase C0";
                throw EnergyShiftError(os.str());
            }
            aux.log_v -= cfg.theta * k / e * dt;
            double v = std::max(std::exp(aux.log_v), std::numeric_limits<double>::denorm_min());
            if (k >= 0.0) {
                v = std::min(v, v_old);
            }
            aux.v_half = v;
        } else if (k >= 0.0) {
            aux.v_half = update_v_arctan(v_old, k, e / cfg.theta, cfg.theta, dt, cfg.c_star);
        } else {
            aux.v_half = arctan_shift(v_old, dt * cfg.theta * k / (e * e + 1.0));
        }
        return v_old;
    }

    [[nodiscard]] double chi(double v, double e) const { return chi_eval(cfg.chi, v, e, cfg.chi_base); }

    [[nodiscard]] std::size_t history_depth() const { return static_cast<std::size_t>(std::max(1, cfg.bdf_order - 1)); }

    void push(StepState& s, State next, double t_next) const
    {
        s.history.insert(s.history.begin(), std::move(s.u));
        s.history_t.insert(s.history_t.begin(), s.t);
        if (s.history.size() > history_depth()) {
            s.history.resize(history_depth());
            s.history_t.resize(history_depth());
        }
        s.u = std::move(next);
        s.t = t_next;
        ++s.step;
    }
};

void require_history(const StepState& s, std::size_t n, const char* where)
{
    if (s.history.size() < n) {
        throw ConfigError(std::string(where) + ": needs " + std::to_string(n) + " earlier state(s), have " +
                          std::to_string(s.history.size()));
    }
}

template <typename F>
void guarded(const StepState& s, F&& body)
{
    try {
        body();
    } catch (const NonFiniteError& e) {
        throw BlowUpError("blow-up at step " + std::to_string(s.step + 1) + ": " + e.what(), s.step + 1);
    }
}

/// Linear extrapolation in time from (ta, a) and (tb, b) to t.
State extrapolate(const State& a, double ta, const State& b, double tb, double t)
{
    const double w = (t - tb) / (tb - ta);
    return models::lincomb(1.0 + w, b, -w, a);
}

void staggered_step(const Ctx& c, StepState& s, bool with_aux)
{
    require_history(s, 1, "cn_sm_step");
    const double dt = c.cfg.dt;
    guarded(s, [&] {
        const State ubar = models::lincomb(1.5, s.u, -0.5, s.history[0]);
        double eta = 1.0;
        if (with_aux) {
            s.v_prev = c.advance_aux(s.aux, s.u, s.t, dt);
            eta = c.chi(s.aux.v_half, c.shifted(ubar));
        }
        s.aux.eta = eta;
        s.aux.t_half = s.t + 0.5 * dt;
        State next = c.cn_update(s.u, c.cfg.cn_modified ? &s.history[0] : nullptr, ubar, eta, s.t + 0.5 * dt, dt);
        c.push(s, std::move(next), s.t + dt);
    });
}

StepState start_staggered(const Ctx& c, State u0, double t0)
{
    const BootstrapResult b = bootstrap(c.p, c.cfg, u0, t0);
    StepState s;
    s.t = t0;
    s.u = std::move(u0);
    s.aux.v_half = b.v_half;
    s.aux.log_v = c.cfg.variant == Variant::log ? std::log(b.v_half) : std::numeric_limits<double>::quiet_NaN();
    s.aux.eta = c.chi(b.v_half, b.v_half);
    s.aux.t_half = t0 + 0.5 * c.cfg.dt;
    s.v_prev = b.v_half;
    c.push(s, b.u1, t0 + c.cfg.dt);
    return s;
}

}  // namespace

BootstrapResult bootstrap(const Problem& p, const SMConfig& cfg, const State& u0, double t0)
{
    const Ctx c(p, cfg);
    c.m.require_shape(u0, "bootstrap");
    if (!models::all_finite(u0)) {
        throw NonFiniteError("bootstrap: initial state is not finite");
    }
    const double dt = cfg.dt;
    BootstrapResult b;
    b.u_bar_half = c.implicit_euler(u0, t0 + 0.5 * dt, 0.5 * dt);
    b.v_half = c.initial_v(b.u_bar_half);
    b.u1 = c.cn_update(u0, nullptr, b.u_bar_half, 1.0, t0 + 0.5 * dt, dt);
    return b;
}

void cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    staggered_step(Ctx(p, cfg), s, true);
}

void baseline_cn_imex_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    staggered_step(Ctx(p, cfg), s, false);
}

void ns_cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    if (dynamic_cast<const models::NavierStokes2D*>(p.model.get()) == nullptr) {
        throw ConfigError("ns_cn_sm_step needs a NavierStokes2D model");
    }
    if (cfg.placement != EtaPlacement::inside_g) {
        throw ConfigError("ns_cn_sm_step applies eta inside the convective term (placement inside_g)");
    }
    cn_sm_step(p, cfg, s);
}

void ternary_cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    if (dynamic_cast<const models::TernaryCahnHilliard*>(p.model.get()) == nullptr) {
        throw ConfigError("ternary_cn_sm_step needs a TernaryCahnHilliard model");
    }
    if (cfg.placement != EtaPlacement::outside_g) {
        throw ConfigError("ternary_cn_sm_step multiplies dF/dphi by eta (placement outside_g)");
    }
    cn_sm_step(p, cfg, s);
}

void swapped_mesh_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    const Ctx c(p, cfg);
    require_history(s, 1, "swapped_mesh_step");
    const double dt = cfg.dt;
    guarded(s, [&] {
        s.v_prev = c.advance_aux(s.aux, s.u, s.t, dt);
        s.aux.t_half += dt;
        const double t_int = s.aux.t_half;
        const State ubar = extrapolate(s.history[0], s.history_t[0], s.u, s.t, t_int);
        s.aux.eta = c.chi(s.aux.v_half, c.shifted(ubar));
        State next = c.cn_update(s.u, nullptr, ubar, s.aux.eta, t_int, dt);
        c.push(s, std::move(next), s.t + dt);
    });
}

void bdfk_sm_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    const Ctx c(p, cfg);
    const int k = cfg.bdf_order;
    if (k < 2) {
        throw ConfigError("bdfk_sm_step needs bdf_order 2, 3 or 4");
    }
    require_history(s, static_cast<std::size_t>(k - 1), "bdfk_sm_step");

    struct Coeffs {
        double alpha;
        std::array<double, 4> beta;
        std::array<double, 4> hat;
    };
    static constexpr std::array<Coeffs, 3> table{{
        {1.5, {2.0, -0.5, 0.0, 0.0}, {2.0, -1.0, 0.0, 0.0}},
        {11.0 / 6.0, {3.0, -1.5, 1.0 / 3.0, 0.0}, {3.0, -3.0, 1.0, 0.0}},
        {25.0 / 12.0, {4.0, -3.0, 4.0 / 3.0, -0.25}, {4.0, -6.0, 4.0, -1.0}},
    }};
    const Coeffs& co = table[static_cast<std::size_t>(k - 2)];
    const double dt = cfg.dt;

    guarded(s, [&] {
        s.v_prev = c.advance_aux(s.aux, s.u, s.t, dt);
        s.aux.t_half = s.t + 0.5 * dt;

        State beta = models::scaled(co.beta[0] - co.alpha, s.u);
        State uhat = models::scaled(co.hat[0], s.u);
        for (int j = 1; j < k; ++j) {
            models::axpy(beta, co.beta[static_cast<std::size_t>(j)], s.history[static_cast<std::size_t>(j - 1)]);
            models::axpy(uhat, co.hat[static_cast<std::size_t>(j)], s.history[static_cast<std::size_t>(j - 1)]);
        }
        // (alpha/dt + A) delta = (beta - alpha u^n)/dt - A u^n - g(uhat) + f, u_bar = u^n + delta
        SpectralState rhs = c.m.apply_linear(models::to_spectral(s.u));
        models::scale(rhs, -1.0);
        State rest = models::scaled(1.0 / dt, std::move(beta));
        models::axpy(rest, -1.0, models::eval_nonlinear(c.m, uhat));
        if (p.forcing) {
            models::axpy(rest, 1.0, p.forcing(s.t + dt));
        }
        models::axpy(rhs, 1.0, models::to_spectral(rest));
        State ubar = s.u;
        models::axpy(ubar, 1.0, models::to_real(c.m.solve_shifted(co.alpha / dt, 1.0, rhs)));

        const double v_stag = 0.5 * (3.0 * s.aux.v_half - s.v_prev);
        const double chi = c.chi(v_stag, c.shifted(ubar));
        const bool linear = k == 2 && cfg.bdf2_eta == Bdf2Eta::linear;
        const double eta = linear ? chi : 1.0 - (1.0 - chi) * (1.0 - chi);
        s.aux.eta = eta;
        State next = models::scaled(eta, std::move(ubar));
        if (!models::all_finite(next)) {
            throw NonFiniteError("BDF step produced a non-finite state");
        }
        c.push(s, std::move(next), s.t + dt);
    });
}

void gsav_baseline_step(const Problem& p, const SMConfig& cfg, StepState& s)
{
    const Ctx c(p, cfg);
    require_history(s, 1, "gsav_baseline_step");
    const double dt = cfg.dt;
    guarded(s, [&] {
        const State ubar = models::lincomb(1.5, s.u, -0.5, s.history[0]);
        State pred = c.cn_update(s.u, nullptr, ubar, 1.0, s.t + 0.5 * dt, dt);
        const double e = c.shifted(pred);
        if (!(e > 0.0)) {
            throw EnergyShiftError("GSAV needs theta*E_tot + C0 > 0; increase C0");
        }
        const double den = 1.0 + dt * cfg.theta * c.k_eff(pred, s.t + dt) / e;
        if (!(den > 0.0)) {
            throw EnergyShiftError("GSAV energy update denominator is not positive; reduce dt");
        }
        s.v_prev = s.aux.v_half;
        s.aux.v_half /= den;
        s.aux.eta = s.aux.v_half / e;
        s.aux.t_half = s.t + dt;
        c.push(s, models::scaled(s.aux.eta, std::move(pred)), s.t + dt);
    });
}

Stepper::Stepper(Problem problem, SMConfig cfg) : problem_(std::move(problem)), cfg_(cfg)
{
    const Ctx c(problem_, cfg_);
    c0_ = c.c0;
}

double Stepper::shifted_energy(const State& u) const
{
    return cfg_.theta * models::energy_tot(*problem_.model, u) + c0_;
}

StepState Stepper::start(State u0, double t0) const
{
    const Ctx c(problem_, cfg_);
    const double dt = cfg_.dt;
    c.m.require_shape(u0, "Stepper::start");
    switch (cfg_.scheme) {
    case Scheme::sm: {
        StepState s = start_staggered(c, std::move(u0), t0);
        while (s.history.size() < c.history_depth()) {
            cn_sm_step(problem_, cfg_, s);
        }
        return s;
    }
    case Scheme::cn_imex: {
        StepState s = start_staggered(c, std::move(u0), t0);
        s.aux.v_half = std::numeric_limits<double>::quiet_NaN();
        s.aux.log_v = s.aux.v_half;
        s.aux.eta = 1.0;
        return s;
    }
    case Scheme::gsav: {
        const double r0 = c.initial_v(u0);
        const BootstrapResult b = bootstrap(problem_, cfg_, u0, t0);
        StepState s;
        s.t = t0;
        s.u = std::move(u0);
        const double e = c.shifted(b.u1);
        const double den = 1.0 + dt * cfg_.theta * c.k_eff(b.u1, t0 + dt) / e;
        if (!(e > 0.0) || !(den > 0.0)) {
            throw EnergyShiftError("GSAV start-up: non-positive shifted energy or denominator");
        }
        s.v_prev = r0;
        s.aux.v_half = r0 / den;
        s.aux.log_v = std::log(s.aux.v_half);
        s.aux.eta = s.aux.v_half / e;
        s.aux.t_half = t0 + dt;
        c.push(s, models::scaled(s.aux.eta, b.u1), t0 + dt);
        return s;
    }
    case Scheme::swapped: {
        StepState s;
        s.t = t0;
        s.aux.v_half = c.initial_v(u0);
        s.aux.log_v = cfg_.variant == Variant::log ? std::log(s.aux.v_half) : std::numeric_limits<double>::quiet_NaN();
        s.aux.eta = 1.0;
        s.aux.t_half = t0;
        s.v_prev = s.aux.v_half;
        // Predictor-corrector half step: Euler predictor, CN corrector with g at the quarter point.
        const State pred = c.implicit_euler(u0, t0 + 0.5 * dt, 0.5 * dt);
        State half = c.cn_update(u0, nullptr, models::lincomb(0.5, u0, 0.5, pred), 1.0, t0 + 0.25 * dt, 0.5 * dt);
        s.u = std::move(u0);
        c.push(s, std::move(half), t0 + 0.5 * dt);
        s.step = 0;
        return s;
    }
    }
    throw ConfigError("unknown scheme");
}

void Stepper::step(StepState& s) const
{
    switch (cfg_.scheme) {
    case Scheme::sm:
        if (cfg_.bdf_order > 1) {
            bdfk_sm_step(problem_, cfg_, s);
        } else if (dynamic_cast<const models::NavierStokes2D*>(problem_.model.get()) != nullptr) {
            ns_cn_sm_step(problem_, cfg_, s);
        } else if (dynamic_cast<const models::TernaryCahnHilliard*>(problem_.model.get()) != nullptr) {
            ternary_cn_sm_step(problem_, cfg_, s);
        } else {
            cn_sm_step(problem_, cfg_, s);
        }
        return;
    case Scheme::swapped: swapped_mesh_step(problem_, cfg_, s); return;
    case Scheme::cn_imex: baseline_cn_imex_step(problem_, cfg_, s); return;
    case Scheme::gsav: gsav_baseline_step(problem_, cfg_, s); return;
    }
}

bool Stepper::can_step(const StepState& s, double t_end) const noexcept
{
    return s.t + cfg_.dt <= t_end + 1e-9 * cfg_.dt;
}

void Stepper::advance_to(StepState& s, double t_end) const
{
    while (can_step(s, t_end)) {
        step(s);
    }
}

Landing Stepper::finish(const StepState& s) const
{
    const Ctx c(problem_, cfg_);
    const double dt = cfg_.dt;
    Landing out;
    switch (cfg_.scheme) {
    case Scheme::cn_imex:
        out.u = s.u;
        out.t = s.t;
        out.v = std::numeric_limits<double>::quiet_NaN();
        out.energy = models::energy_tot(c.m, s.u);
        return out;
    case Scheme::gsav:
        out.u = s.u;
        out.t = s.t;
        out.v = s.aux.v_half;
        out.energy = (out.v - c0_) / cfg_.theta;
        return out;
    case Scheme::sm: {
        AuxState aux = s.aux;
        c.advance_aux(aux, s.u, s.t, 0.5 * dt);
        out.u = s.u;
        out.t = s.t;
        out.v = cfg_.variant == Variant::log ? std::exp(aux.log_v) : aux.v_half;
        out.energy = (out.v - c0_) / cfg_.theta;
        return out;
    }
    case Scheme::swapped: {
        AuxState aux = s.aux;
        c.advance_aux(aux, s.u, s.t, dt);
        const double t_quarter = s.t + 0.25 * dt;
        const State ubar = extrapolate(s.history.at(0), s.history_t.at(0), s.u, s.t, t_quarter);
        guarded(s, [&] { out.u = c.cn_update(s.u, nullptr, ubar, 1.0, t_quarter, 0.5 * dt); });
        out.t = s.t + 0.5 * dt;
        out.v = cfg_.variant == Variant::log ? std::exp(aux.log_v) : aux.v_half;
        out.energy = (out.v - c0_) / cfg_.theta;
        return out;
    }
    }
    throw ConfigError("unknown scheme");
}

}  // namespace stagmesh::integrators
