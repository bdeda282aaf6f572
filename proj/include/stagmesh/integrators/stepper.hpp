#pragma once

#include "stagmesh/integrators/config.hpp"
#include "stagmesh/models/model.hpp"

#include <functional>
#include <vector>

namespace stagmesh::integrators {

using models::ModelPtr;
using models::State;

/// Right-hand side f(t) added to u_t + A u + g(u) = f. Empty means unforced.
using Forcing = std::function<State(double t)>;

struct Problem {
    ModelPtr model;
    Forcing forcing;
};

/// Staggered auxiliary variable and control factor.
struct AuxState {
    double v_half = 1.0;
    /// ln V; the authoritative value for the log variant (v_half is its floored exponential).
    double log_v = 0.0;
    double eta = 1.0;
    double t_half = 0.0;
};

/// Everything a scheme needs to take the next step.
struct StepState {
    long step = 0;
    double t = 0.0;
    State u;
    /// Earlier states, most recent first, with their times.
    std::vector<State> history;
    std::vector<double> history_t;
    AuxState aux;
    /// The auxiliary value one level before aux (staggered chi of BDFk).
    double v_prev = 0.0;
};

/// State and discrete energy on an integer time level.
struct Landing {
    State u;
    double t = 0.0;
    /// V at t (NaN for cn_imex).
    double v = 0.0;
    /// (V - C0)/theta, or E_tot(u) for cn_imex.
    double energy = 0.0;
};

struct BootstrapResult {
    State u_bar_half;
    double v_half = 0.0;
    State u1;
};

/// Semi-implicit half step for u_bar^{1/2}, V^{1/2} = theta*E_tot(u_bar^{1/2}) + C0,
/// then one CN step with frozen nonlinearity g(u_bar^{1/2}).
[[nodiscard]] BootstrapResult bootstrap(const Problem& p, const SMConfig& cfg, const State& u0, double t0 = 0.0);

/// Staggered CN-SM step. With cfg.cn_modified the implicit part is A(3/4 u^{n+1} + 1/4 u^{n-1}).
void cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// CN-SM with u on half levels and V on integer levels.
void swapped_mesh_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// BDFk-SM, k = cfg.bdf_order in {2, 3, 4}. Needs k states of history.
void bdfk_sm_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// CN-SM for NavierStokes2D: explicit (eta u_bar . grad) eta u_bar, Leray-projected solve.
void ns_cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// CN-SM for the ternary model with eta multiplying dF/dphi_l.
void ternary_cn_sm_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// Semi-implicit CN with extrapolated nonlinearity, eta = 1 and no auxiliary variable.
void baseline_cn_imex_step(const Problem& p, const SMConfig& cfg, StepState& s);
/// CN-IMEX predictor u_bar, r^{n+1} = r^n / (1 + dt K(u_bar)/E(u_bar)), u^{n+1} = (r^{n+1}/E(u_bar)) u_bar.
void gsav_baseline_step(const Problem& p, const SMConfig& cfg, StepState& s);

/// Dispatches the configured scheme and owns start-up and landing.
class Stepper {
public:
    Stepper(Problem problem, SMConfig cfg);

    [[nodiscard]] const SMConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] const models::DissipativeModel& model() const noexcept { return *problem_.model; }
    [[nodiscard]] const Problem& problem() const noexcept { return problem_; }
    [[nodiscard]] double c0() const noexcept { return c0_; }
    [[nodiscard]] double dt() const noexcept { return cfg_.dt; }

    /// Builds the state after start-up (bootstrap, extra history steps, or the first half step).
    [[nodiscard]] StepState start(State u0, double t0 = 0.0) const;
    void step(StepState& s) const;
    /// True while one more step stays within t_end.
    [[nodiscard]] bool can_step(const StepState& s, double t_end) const noexcept;
    /// Steps until can_step() is false.
    void advance_to(StepState& s, double t_end) const;
    /// Solution and discrete energy at the last integer level (the swapped scheme adds a half step).
    [[nodiscard]] Landing finish(const StepState& s) const;

    /// theta*E_tot(u) + C0
    [[nodiscard]] double shifted_energy(const State& u) const;

private:
    Problem problem_;
    SMConfig cfg_;
    double c0_;
};

}  // namespace stagmesh::integrators
