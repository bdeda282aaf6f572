#include "stagmesh/errors.hpp"
#include "stagmesh/integrators/stepper.hpp"
#include "stagmesh/models/manufactured.hpp"
#include "stagmesh/models/mbe.hpp"
#include "stagmesh/models/navier_stokes.hpp"
#include "stagmesh/models/phase_field.hpp"
#include "stagmesh/models/ternary.hpp"
#include "stagmesh/spectral/operators.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

using namespace stagmesh;
using namespace stagmesh::integrators;
using namespace stagmesh::models;
using namespace test_support;

namespace {

Problem forced(ModelPtr model, std::shared_ptr<const ExactSolution> exact)
{
    Forcing f = [model, exact](double t) { return manufactured_forcing(*model, *exact, t); };
    return {std::move(model), std::move(f)};
}

SMConfig with_dt(double dt, Scheme scheme = Scheme::sm)
{
    SMConfig c;
    c.dt = dt;
    c.scheme = scheme;
    return c;
}

/// Runs to t_end and returns the landing.
Landing run_to(const Problem& p, const SMConfig& cfg, State u0, double t_end)
{
    const Stepper st(p, cfg);
    StepState s = st.start(std::move(u0));
    st.advance_to(s, t_end);
    return st.finish(s);
}

double state_diff(const State& a, const State& b)
{
    return l2_norm(lincomb(1.0, a, -1.0, b));
}

State solenoidal(const Grid2D& g, unsigned seed, double amplitude)
{
    const auto [px, py] = spectral::gradient(random_trig(g, 3, seed, amplitude));
    return {py, -1.0 * px};
}

/// Manufactured Allen-Cahn problem on [0, 2pi)^2 with u_e = sin t cos x cos y.
struct AcManufactured {
    ModelPtr model;
    std::shared_ptr<const ExactSolution> exact;
    Problem problem;

    explicit AcManufactured(int n)
        : model(std::make_shared<AllenCahn>(periodic_2pi(n), 0.7)),
          exact(std::make_shared<TrigProductSolution>(1, 1, TimeProfile{})),
          problem(forced(model, exact))
    {
    }
};

}  // namespace

TEST(Bootstrap, ConstantStateUnderDiffusionIsUnchanged)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<LinearDiffusion>(g, 1.0), {}};
    const State u0{RealField(g, 0.3)};
    const BootstrapResult b = bootstrap(p, with_dt(0.1), u0);
    EXPECT_LE(max_diff(b.u_bar_half[0], u0[0]), 1e-15);
    EXPECT_LE(max_diff(b.u1[0], u0[0]), 1e-15);
}

TEST(Bootstrap, HalfStepIsDiagonalSolve)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<LinearDiffusion>(g, 1.0), {}};
    const double dt = 0.2;
    const RealField c = RealField::from_function(g, [](double x, double) { return std::cos(x); });
    const BootstrapResult b = bootstrap(p, with_dt(dt), {c});
    EXPECT_LE(max_diff(b.u_bar_half[0], (1.0 / (1.0 + dt / 2)) * c), 1e-15);
    EXPECT_LE(max_diff(b.u1[0], ((1.0 - dt / 2) / (1.0 + dt / 2)) * c), 1e-15);
}

TEST(Bootstrap, HalfStepErrorIsSecondOrder)
{
    const AcManufactured ac(16);
    double prev = 0.0;
    for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
        const BootstrapResult b = bootstrap(ac.problem, with_dt(dt), ac.exact->value(ac.model->grid(), 0.0));
        const double err = state_diff(b.u_bar_half, ac.exact->value(ac.model->grid(), dt / 2));
        if (prev > 0.0) {
            EXPECT_GT(prev / err, 3.5);
            EXPECT_LT(prev / err, 4.5);
        }
        prev = err;
    }
}

TEST(Stepper, LinearInTimeSolutionsAreExact)
{
    const Grid2D g = periodic_2pi(16);
    ModelPtr m = std::make_shared<LinearDiffusion>(g, 0.8);
    auto exact = std::make_shared<TrigProductSolution>(2, 1, TimeProfile{TimeProfile::Kind::linear, 0.3, 2.0});
    const Problem p = forced(m, exact);
    auto check = [&](SMConfig cfg, const char* label) {
        const Landing l = run_to(p, cfg, exact->value(g, 0.0), 1.0);
        EXPECT_NEAR(l.t, 1.0, 1e-12) << label;
        EXPECT_LE(max_diff(l.u[0], exact->value(g, l.t)[0]), 1e-12) << label;
    };
    check(with_dt(0.1), "cn-sm");
    check(with_dt(0.1, Scheme::cn_imex), "cn-imex");
    check(with_dt(0.1, Scheme::swapped), "swapped");
    SMConfig mod = with_dt(0.1);
    mod.cn_modified = true;
    check(mod, "cn-modified");
    SMConfig at = with_dt(0.1);
    at.variant = Variant::arctan;
    check(at, "arctan");
}

TEST(Stepper, UnitEtaReproducesBaselineBitForBit)
{
    // u = 1 is an equilibrium of Allen-Cahn: K = 0 and V = E = C0, so chi is exactly 1.
    const Grid2D g = periodic_2pi(16);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    const State u0{RealField(g, 1.0)};
    const Stepper sm(p, with_dt(0.05));
    const Stepper base(p, with_dt(0.05, Scheme::cn_imex));
    StepState a = sm.start(u0);
    StepState b = base.start(u0);
    for (int i = 0; i < 20; ++i) {
        sm.step(a);
        base.step(b);
        ASSERT_EQ(a.aux.eta, 1.0);
        ASSERT_EQ(a.u[0].values()[3], b.u[0].values()[3]);
    }
    EXPECT_EQ(max_diff(a.u[0], b.u[0]), 0.0);

    // With g = 0 eta has nothing to act on.
    const Problem d{std::make_shared<LinearDiffusion>(g, 1.0), {}};
    const State r{random_trig(g, 4, 3)};
    const Landing la = run_to(d, with_dt(0.05), r, 0.5);
    const Landing lb = run_to(d, with_dt(0.05, Scheme::cn_imex), r, 0.5);
    EXPECT_EQ(max_diff(la.u[0], lb.u[0]), 0.0);
}

TEST(Stepper, EquilibriumKeepsAuxiliaryConstant)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    for (Scheme sc : {Scheme::sm, Scheme::swapped}) {
        const Stepper st(p, with_dt(0.1, sc));
        StepState s = st.start({RealField(g, -1.0)});
        const double v0 = s.aux.v_half;
        st.advance_to(s, 2.0);
        EXPECT_EQ(s.aux.v_half, v0);
        EXPECT_LE(max_diff(s.u[0], RealField(g, -1.0)), 1e-15);
    }
}

TEST(Stepper, LogAuxiliaryMonotoneAtHugeStep)
{
    const Grid2D g = periodic_2pi(32);
    for (ModelPtr m : {ModelPtr(std::make_shared<AllenCahn>(g, 0.7)), ModelPtr(std::make_shared<CahnHilliard>(g, 0.7))}) {
        for (Scheme sc : {Scheme::sm, Scheme::swapped}) {
            const Stepper st({m, {}}, with_dt(10.0, sc));
            StepState s = st.start({random_trig(g, 4, 11, 1.0)});
            double prev_log = s.aux.log_v;
            for (int i = 0; i < 100; ++i) {
                st.step(s);
                ASSERT_GT(s.aux.v_half, 0.0);
                ASSERT_LE(s.aux.log_v, prev_log) << m->name() << " step " << i;
                prev_log = s.aux.log_v;
            }
        }
    }
}

TEST(Stepper, ArctanAuxiliaryMonotone)
{
    const Grid2D g(32, 32, 12.8, 12.8);
    SMConfig cfg = with_dt(0.5);
    cfg.variant = Variant::arctan;
    cfg.theta = 0.01;
    const Stepper st({std::make_shared<MbeNoSlope>(g, 1.0, 0.1), {}}, cfg);
    StepState s = st.start({random_trig(g, 4, 5, 0.5)});
    for (int i = 0; i < 100; ++i) {
        const double before = s.aux.v_half;
        st.step(s);
        ASSERT_LE(s.aux.v_half, before);
    }
}

TEST(Stepper, PlacementsAgreeToSecondOrder)
{
    const AcManufactured ac(32);
    std::vector<double> gaps;
    for (double dt : {0.1, 0.05, 0.025}) {
        SMConfig in = with_dt(dt);
        SMConfig out = in;
        out.placement = EtaPlacement::outside_g;
        const State u0 = ac.exact->value(ac.model->grid(), 0.0);
        gaps.push_back(state_diff(run_to(ac.problem, in, u0, 1.0).u, run_to(ac.problem, out, u0, 1.0).u));
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        EXPECT_GT(gaps[i - 1] / gaps[i], 3.0);
        EXPECT_LT(gaps[i - 1] / gaps[i], 5.0);
    }
}

TEST(Stepper, StokesModesDecayByCrankNicolsonFactor)
{
    // (-sin y, sin x) self-advects along a gradient, which the projection removes.
    const Grid2D g = periodic_2pi(16);
    const double nu = 0.3;
    const double dt = 0.1;
    const Problem p{std::make_shared<NavierStokes2D>(g, nu), {}};
    const State u0{RealField::from_function(g, [](double, double y) { return -std::sin(y); }),
                   RealField::from_function(g, [](double x, double) { return std::sin(x); })};
    const Stepper st(p, with_dt(dt));
    StepState s = st.start(u0);
    st.advance_to(s, 1.0);
    const double r = std::pow((1.0 - nu * dt / 2) / (1.0 + nu * dt / 2), static_cast<double>(s.step));
    EXPECT_LE(max_diff(s.u[0], r * u0[0]), 1e-12);
    EXPECT_LE(max_diff(s.u[1], r * u0[1]), 1e-12);
}

TEST(Stepper, VelocityStaysDivergenceFree)
{
    const Grid2D g(32, 32, 1.0, 1.0);
    const auto ns = std::make_shared<NavierStokes2D>(g, 1e-3);
    const Stepper st({ns, {}}, with_dt(2e-3));
    StepState s = st.start(solenoidal(g, 2, 1.0));
    for (int i = 0; i < 100; ++i) {
        st.step(s);
        ASSERT_LE(ns->divergence_norm(s.u), 1e-10) << "step " << i;
    }
}

TEST(Stepper, ConservedMeansDoNotDrift)
{
    const Grid2D g = periodic_2pi(32);
    {
        const Stepper st({std::make_shared<CahnHilliard>(g, 0.7), {}}, with_dt(1e-3));
        RealField u = random_trig(g, 4, 9, 0.8);
        u += RealField(g, 0.2);
        const double m0 = spectral::mean(u);
        StepState s = st.start({u});
        for (int i = 0; i < 1000; ++i) {
            st.step(s);
        }
        EXPECT_LE(std::abs(spectral::mean(s.u[0]) - m0), 1e-12);
    }
    {
        const Grid2D gt(32, 16, 2.0, 1.0);
        SMConfig cfg = with_dt(1e-3);
        cfg.placement = EtaPlacement::outside_g;
        const Stepper st({std::make_shared<TernaryCahnHilliard>(gt, SurfaceTensions{3.0, 1.0, 1.0}, 7.0, 1e-3, 0.05), {}},
                         cfg);
        RealField p1 = random_trig(gt, 3, 1, 0.05);
        RealField p2 = random_trig(gt, 3, 2, 0.05);
        p1 += RealField(gt, 0.3);
        p2 += RealField(gt, 0.4);
        const double m1 = spectral::mean(p1);
        const double m2 = spectral::mean(p2);
        StepState s = st.start({p1, p2});
        for (int i = 0; i < 1000; ++i) {
            st.step(s);
        }
        EXPECT_LE(std::abs(spectral::mean(s.u[0]) - m1), 1e-12);
        EXPECT_LE(std::abs(spectral::mean(s.u[1]) - m2), 1e-12);
    }
}

TEST(Stepper, TernaryEquilibriumIsStationary)
{
    const Grid2D g(16, 8, 2.0, 1.0);
    SMConfig cfg = with_dt(1e-2);
    cfg.placement = EtaPlacement::outside_g;
    const Stepper st({std::make_shared<TernaryCahnHilliard>(g, SurfaceTensions{}, 7.0, 1e-3, 0.05), {}}, cfg);
    StepState s = st.start({RealField(g, 1.0), RealField(g, 0.0)});
    const double v0 = s.aux.v_half;
    st.advance_to(s, 0.5);
    EXPECT_EQ(s.aux.v_half, v0);
    EXPECT_LE(max_diff(s.u[0], RealField(g, 1.0)), 1e-15);
    EXPECT_LE(s.u[1].max_abs(), 1e-15);
}

TEST(Stepper, TernaryNeedsOutsidePlacement)
{
    const Grid2D g(16, 8, 2.0, 1.0);
    const Problem p{std::make_shared<TernaryCahnHilliard>(g, SurfaceTensions{}, 7.0, 1e-3, 0.05), {}};
    const Stepper st(p, with_dt(1e-2));
    StepState s = st.start({RealField(g, 0.3), RealField(g, 0.3)});
    EXPECT_THROW(st.step(s), ConfigError);
}

TEST(Stepper, BdfNeedsHistory)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    SMConfig cfg = with_dt(0.1);
    cfg.bdf_order = 3;
    StepState s;
    s.u = {RealField(g, 0.5)};
    s.history = {s.u};
    s.history_t = {-0.1};
    EXPECT_THROW(bdfk_sm_step(p, cfg, s), ConfigError);
}

TEST(Stepper, BdfStartupBuildsHistory)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    for (int k = 2; k <= 4; ++k) {
        SMConfig cfg = with_dt(0.1);
        cfg.bdf_order = k;
        const Stepper st(p, cfg);
        const StepState s = st.start({random_trig(g, 2, 1, 0.5)});
        EXPECT_EQ(s.history.size(), static_cast<std::size_t>(k - 1));
        EXPECT_EQ(s.step, k - 1);
        EXPECT_NEAR(s.t, 0.1 * (k - 1), 1e-15);
    }
}

TEST(Stepper, BdfAtEquilibriumHasUnitEta)
{
    const Grid2D g = periodic_2pi(8);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    for (int k = 2; k <= 4; ++k) {
        SMConfig cfg = with_dt(0.1);
        cfg.bdf_order = k;
        const Stepper st(p, cfg);
        StepState s = st.start({RealField(g, 1.0)});
        st.advance_to(s, 1.0);
        EXPECT_EQ(s.aux.eta, 1.0);
        EXPECT_LE(max_diff(s.u[0], RealField(g, 1.0)), 1e-15);
    }
}

TEST(Stepper, GsavBoundedAtUnitStep)
{
    const Grid2D g = periodic_2pi(32);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    const Stepper st(p, with_dt(1.0, Scheme::gsav));
    StepState s = st.start({random_trig(g, 4, 21, 1.0)});
    for (int i = 0; i < 50; ++i) {
        const double r = s.aux.v_half;
        st.step(s);
        ASSERT_LE(s.aux.v_half, r);
        ASSERT_GT(s.aux.v_half, 0.0);
    }
    EXPECT_TRUE(all_finite(s.u));
}

TEST(Stepper, ExplicitCubicLimitsPlainImexButNotSm)
{
    // Near u = +-1, g' = 2/eps^2 puts dt = 1 past the extrapolation's stability limit.
    const Grid2D g = periodic_2pi(32);
    const Problem p{std::make_shared<AllenCahn>(g, 0.7), {}};
    const State u0{random_trig(g, 4, 21, 1.0)};
    {
        const Stepper st(p, with_dt(1.0, Scheme::cn_imex));
        StepState s = st.start(u0);
        EXPECT_THROW(st.advance_to(s, 50.0), BlowUpError);
    }
    {
        const Stepper st(p, with_dt(0.1, Scheme::cn_imex));
        StepState s = st.start(u0);
        st.advance_to(s, 50.0);
        EXPECT_LE(s.u[0].max_abs(), 1.5);
    }
    {
        const Stepper st(p, with_dt(1.0));
        StepState s = st.start(u0);
        st.advance_to(s, 50.0);
        EXPECT_LE(s.u[0].max_abs(), 1.5);
    }
}

TEST(Stepper, BlowUpCarriesStepIndex)
{
    const Grid2D g = periodic_2pi(16);
    const Problem p{std::make_shared<AllenCahn>(g, 0.05), {}};
    const Stepper st(p, with_dt(5.0, Scheme::cn_imex));
    StepState s = st.start({random_trig(g, 3, 4, 3.0)});
    try {
        for (int i = 0; i < 200; ++i) {
            st.step(s);
        }
        FAIL() << "expected a blow-up";
    } catch (const BlowUpError& e) {
        EXPECT_EQ(e.step(), s.step + 1);
        EXPECT_TRUE(all_finite(s.u));
    }
}

TEST(Stepper, RunsAreDeterministic)
{
    const AcManufactured ac(16);
    SMConfig cfg = with_dt(0.05);
    cfg.chi = ChiKind::chi2;
    const State u0{random_trig(ac.model->grid(), 3, 8, 0.5)};
    const Landing a = run_to(ac.problem, cfg, u0, 1.0);
    const Landing b = run_to(ac.problem, cfg, u0, 1.0);
    EXPECT_EQ(max_diff(a.u[0], b.u[0]), 0.0);
    EXPECT_EQ(a.energy, b.energy);
}

TEST(Stepper, LandingEnergyIsShiftedAuxiliary)
{
    const AcManufactured ac(16);
    SMConfig cfg = with_dt(0.01);
    cfg.theta = 2.0;
    cfg.c0 = 3.0;
    const Stepper st(ac.problem, cfg);
    StepState s = st.start(ac.exact->value(ac.model->grid(), 0.0));
    st.advance_to(s, 1.0);
    const Landing l = st.finish(s);
    EXPECT_NEAR(l.energy, (l.v - 3.0) / 2.0, 1e-14);
    EXPECT_NEAR(l.energy, energy_tot(*ac.model, ac.exact->value(ac.model->grid(), 1.0)), 1e-3);
}

TEST(Stepper, TimeLevelsAreStaggered)
{
    const AcManufactured ac(8);
    const double dt = 0.1;
    {
        const Stepper st(ac.problem, with_dt(dt));
        StepState s = st.start(ac.exact->value(ac.model->grid(), 0.0));
        st.step(s);
        EXPECT_NEAR(s.t, 2 * dt, 1e-15);
        EXPECT_NEAR(s.aux.t_half, 1.5 * dt, 1e-15);
    }
    {
        const Stepper st(ac.problem, with_dt(dt, Scheme::swapped));
        StepState s = st.start(ac.exact->value(ac.model->grid(), 0.0));
        EXPECT_NEAR(s.t, 0.5 * dt, 1e-15);
        st.advance_to(s, 1.0);
        EXPECT_NEAR(s.t, 0.95, 1e-12);
        EXPECT_NEAR(s.aux.t_half, 0.9, 1e-12);
        EXPECT_NEAR(st.finish(s).t, 1.0, 1e-12);
    }
}
