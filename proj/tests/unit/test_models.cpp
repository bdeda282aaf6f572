#include "stagmesh/errors.hpp"
#include "stagmesh/models/manufactured.hpp"
#include "stagmesh/models/mbe.hpp"
#include "stagmesh/models/navier_stokes.hpp"
#include "stagmesh/models/phase_field.hpp"
#include "stagmesh/models/ternary.hpp"
#include "stagmesh/spectral/operators.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <memory>
#include <vector>

using namespace stagmesh;
using namespace stagmesh::models;
using namespace test_support;

namespace {

/// Divergence-free velocity from a random stream function: u = (d psi/dy, -d psi/dx).
State random_solenoidal(const Grid2D& g, unsigned seed, double amplitude = 1.0)
{
    const auto [px, py] = spectral::gradient(random_trig(g, 4, seed, amplitude));
    return {py, -1.0 * px};
}

State random_state(const DissipativeModel& m, unsigned seed, double amplitude)
{
    if (m.name() == "navier-stokes") {
        return random_solenoidal(m.grid(), seed, amplitude);
    }
    State u;
    for (std::size_t c = 0; c < m.components(); ++c) {
        RealField f = random_trig(m.grid(), 3, seed * 7 + static_cast<unsigned>(c), amplitude);
        if (m.name() == "ternary") {
            for (auto& v : f.values()) {
                v += 0.3;
            }
        }
        u.push_back(std::move(f));
    }
    return u;
}

std::vector<std::shared_ptr<const DissipativeModel>> all_models(const Grid2D& g)
{
    return {
        std::make_shared<AllenCahn>(g, 0.7),
        std::make_shared<CahnHilliard>(g, 0.7),
        std::make_shared<LinearDiffusion>(g, 0.5),
        std::make_shared<MbeNoSlope>(g, 0.1, 0.1),
        std::make_shared<TernaryCahnHilliard>(g, SurfaceTensions{3.0, 1.0, 1.0}, 7.0, 1e-2, 0.3),
        std::make_shared<NavierStokes2D>(g, 0.2),
    };
}

/// <A u + g(u)>, projected for constrained models.
State flow_rhs(const DissipativeModel& m, const State& u)
{
    SpectralState r = lincomb(1.0, m.apply_linear(to_spectral(u)), 1.0, to_spectral(eval_nonlinear(m, u)));
    m.project(r);
    return to_real(r);
}

}  // namespace

TEST(AllenCahnModel, PointwiseNonlinearity)
{
    const Grid2D g = periodic_2pi(8);
    const AllenCahn ac(g, 0.7);
    EXPECT_LE(eval_nonlinear(ac, {RealField(g, 1.0)})[0].max_abs(), 1e-15);
    const RealField g2 = eval_nonlinear(ac, {RealField(g, 2.0)})[0];
    EXPECT_NEAR(g2.min(), 6.0 / 0.49, 1e-12);
    EXPECT_NEAR(g2.max(), 12.244897959183673, 1e-12);
}

TEST(AllenCahnModel, EnergyOfConstants)
{
    const Grid2D g = periodic_2pi(16);
    const AllenCahn ac(g, 0.7);
    EXPECT_NEAR(energy_tot(ac, {RealField(g, 0.0)}), 4.0 * pi * pi / (4.0 * 0.49), 1e-10);
    EXPECT_NEAR(energy_tot(ac, {RealField(g, 1.0)}), 0.0, 1e-14);
    EXPECT_NEAR(dissipation_rate(ac, {RealField(g, 1.0)}), 0.0, 1e-14);
}

TEST(AllenCahnModel, DissipationMatchesFineQuadrature)
{
    const double eps = 0.7;
    const AllenCahn ac(periodic_2pi(32), eps);
    const State u{RealField::from_function(ac.grid(), [](double x, double y) { return std::cos(x) * std::cos(y); })};
    // Independent midpoint-free quadrature on a 200^2 grid of (-Lap u + (u^3 - u)/eps^2)^2, -Lap u = 2u.
    const int n = 200;
    const double h = 2.0 * pi / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = std::cos(i * h) * std::cos(j * h);
            const double mu = 2.0 * v + (v * v * v - v) / (eps * eps);
            acc += mu * mu;
        }
    }
    EXPECT_NEAR(dissipation_rate(ac, u), acc * h * h, 1e-9 * acc * h * h);
}

TEST(AllenCahnModel, GradientIsLinearPlusNonlinear)
{
    const AllenCahn ac(periodic_2pi(16), 0.7);
    const State u{random_trig(ac.grid(), 3, 5)};
    const State lhs = ac.energy_gradient(u);
    const State rhs = to_real(lincomb(1.0, ac.apply_linear(to_spectral(u)), 1.0, to_spectral(ac.nonlinear(u))));
    EXPECT_LE(max_diff(lhs[0], rhs[0]), 1e-11);
}

TEST(MbeModel, ConstantHasNoForce)
{
    const Grid2D g = periodic_2pi(16);
    const MbeNoSlope mbe(g, 1.0, 0.1);
    EXPECT_LE(eval_nonlinear(mbe, {RealField(g, 0.37)})[0].max_abs(), 1e-14);
    EXPECT_NEAR(energy_tot(mbe, {RealField(g, 0.37)}), 0.0, 1e-14);
}

TEST(MbeModel, SmallSlopeForceIsLaplacian)
{
    const Grid2D g = periodic_2pi(32);
    const MbeNoSlope mbe(g, 1.0, 0.1);
    const double a = 1e-4;
    const RealField phi = RealField::from_function(g, [a](double x, double y) { return a * std::sin(x) * std::cos(2 * y); });
    // div(grad phi / (1 + |grad phi|^2)) = Lap phi + O(a^3)
    EXPECT_LE(max_diff(mbe.slope_force(phi), -5.0 * phi), 1e-10);
}

TEST(NavierStokesModel, EnergyAndDissipationOfCellularFlow)
{
    const Grid2D g = periodic_2pi(16);
    const NavierStokes2D ns(g, 1.0);
    const State u{RealField::from_function(g, [](double, double y) { return -std::sin(y); }),
                  RealField::from_function(g, [](double x, double) { return std::sin(x); })};
    EXPECT_NEAR(energy_tot(ns, u), 2.0 * pi * pi, 1e-10);
    EXPECT_NEAR(dissipation_rate(ns, u), 4.0 * pi * pi, 1e-10);
}

TEST(NavierStokesModel, AdvectionIsSkewSymmetric)
{
    const NavierStokes2D ns(Grid2D(32, 32, 1.0, 1.0), 0.1);
    for (unsigned seed = 1; seed <= 5; ++seed) {
        const State u = random_solenoidal(ns.grid(), seed);
        ASSERT_LE(ns.divergence_norm(u), 1e-10);
        EXPECT_LE(std::abs(inner(ns.nonlinear(u), u)), 1e-10);
    }
}

TEST(NavierStokesModel, ProjectionRemovesGradients)
{
    const Grid2D g = periodic_2pi(16);
    const NavierStokes2D ns(g, 1.0);
    const RealField q = RealField::from_function(g, [](double x, double y) { return std::cos(x) * std::sin(2 * y); });
    const auto [qx, qy] = spectral::gradient(q);
    const State w = random_solenoidal(g, 3);
    SpectralState f = to_spectral(State{qx + w[0], qy + w[1]});
    EXPECT_LE(max_diff(ns.pressure(f), q), 1e-12);
    ns.project(f);
    const State pf = to_real(f);
    EXPECT_LE(max_diff(pf[0], w[0]), 1e-12);
    EXPECT_LE(max_diff(pf[1], w[1]), 1e-12);
}

TEST(NavierStokesModel, ShiftedSolveIsDivergenceFree)
{
    const NavierStokes2D ns(periodic_2pi(16), 1.0);
    const State rhs{random_trig(ns.grid(), 3, 1), random_trig(ns.grid(), 3, 2)};
    EXPECT_LE(ns.divergence_norm(to_real(ns.solve_shifted(10.0, 0.5, to_spectral(rhs)))), 1e-12);
}

TEST(TernaryModel, TensionValidation)
{
    const Grid2D g = periodic_2pi(8);
    EXPECT_THROW(TernaryCahnHilliard(g, SurfaceTensions{1.0, 1.0, 3.0}, 7.0, 1.0, 0.1), ConfigError);
    EXPECT_THROW(TernaryCahnHilliard(g, SurfaceTensions{1.0, 1.0, 1.0}, -1.0, 1.0, 0.1), ConfigError);
    const TernaryCahnHilliard t(g, SurfaceTensions{3.0, 1.0, 1.0}, 7.0, 1.0, 0.1);
    EXPECT_DOUBLE_EQ(t.big_sigma(1), 3.0);
    EXPECT_DOUBLE_EQ(t.big_sigma(2), 3.0);
    EXPECT_DOUBLE_EQ(t.big_sigma(3), -1.0);
}

TEST(TernaryModel, PurePhasesAreMinima)
{
    const TernaryCahnHilliard t(periodic_2pi(8), SurfaceTensions{}, 7.0, 1.0, 0.1);
    for (auto [p1, p2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{0.0, 0.0}}) {
        EXPECT_NEAR(t.potential(p1, p2), 0.0, 1e-15);
        const auto [d1, d2] = t.potential_gradient(p1, p2);
        EXPECT_NEAR(d1, 0.0, 1e-14);
        EXPECT_NEAR(d2, 0.0, 1e-14);
    }
}

TEST(TernaryModel, PotentialGradientMatchesFiniteDifference)
{
    const TernaryCahnHilliard t(periodic_2pi(8), SurfaceTensions{3.0, 1.0, 1.0}, 7.0, 1.0, 0.1);
    const double h = 1e-6;
    for (auto [p1, p2] : {std::pair{0.3, 0.2}, std::pair{0.7, -0.1}, std::pair{1.2, 0.4}}) {
        const auto [d1, d2] = t.potential_gradient(p1, p2);
        EXPECT_NEAR(d1, (t.potential(p1 + h, p2) - t.potential(p1 - h, p2)) / (2 * h), 1e-7);
        EXPECT_NEAR(d2, (t.potential(p1, p2 + h) - t.potential(p1, p2 - h)) / (2 * h), 1e-7);
    }
}

TEST(TernaryModel, CoupledSolveInvertsShiftedOperator)
{
    const TernaryCahnHilliard t(Grid2D(16, 8, 2.0, 1.0), SurfaceTensions{3.0, 1.0, 1.0}, 7.0, 0.5, 0.2);
    const State x{random_trig(t.grid(), 4, 1), random_trig(t.grid(), 4, 2)};
    const SpectralState X = to_spectral(x);
    const SpectralState rhs = lincomb(4.0, X, 0.5, t.apply_linear(X));
    const State back = to_real(t.solve_shifted(4.0, 0.5, rhs));
    EXPECT_LE(max_diff(back[0], x[0]), 1e-12);
    EXPECT_LE(max_diff(back[1], x[1]), 1e-12);
}

TEST(TernaryModel, LinearPartMatchesMuDefinition)
{
    // With F switched off (single mode, compare only the gradient term), A phi_l = -(M/S_l) Lap(mu_l - 12 dF_l).
    const double eps = 0.2;
    const double m = 0.5;
    const TernaryCahnHilliard t(periodic_2pi(16), SurfaceTensions{3.0, 1.0, 1.0}, 0.0, m, eps);
    const RealField p1 = RealField::from_function(t.grid(), [](double x, double) { return std::cos(x); });
    const RealField p2 = RealField::from_function(t.grid(), [](double, double y) { return std::sin(2 * y); });
    const State a = to_real(t.apply_linear(to_spectral(State{p1, p2})));
    const double c = 0.75 * eps * eps;
    const double s1 = 3.0;
    const double s2 = 3.0;
    const double s3 = -1.0;
    // -Lap cos x = cos x, -Lap sin 2y = 4 sin 2y; -Lap applied twice gives k^4.
    const RealField mu1 = c * (s1 + s3) * p1 + (c * s3 * 4.0) * p2;
    const RealField mu2 = (c * s3) * p1 + (c * (s2 + s3) * 4.0) * p2;
    const RealField want1 = to_real(apply_symbol(to_spectral(mu1), DiagonalSymbol::neg_laplacian(t.grid()))) ;
    const RealField want2 = to_real(apply_symbol(to_spectral(mu2), DiagonalSymbol::neg_laplacian(t.grid())));
    EXPECT_LE(max_diff(a[0], (m / s1) * want1), 1e-12);
    EXPECT_LE(max_diff(a[1], (m / s2) * want2), 1e-12);
}

TEST(ModelProperties, DissipationNonNegativeOnRandomStates)
{
    const Grid2D g(8, 8, 2.0 * pi, 2.0 * pi);
    for (const auto& m : all_models(g)) {
        std::mt19937 gen(99);
        std::uniform_real_distribution<double> amp(0.0, 3.0);
        int negative = 0;
        for (unsigned s = 0; s < 10000; ++s) {
            const State u = random_state(*m, s, amp(gen));
            if (!(dissipation_rate(*m, u) >= 0.0)) {
                ++negative;
            }
        }
        EXPECT_EQ(negative, 0) << m->name();
    }
}

TEST(ModelProperties, DissipationIsGradientPairedWithFlow)
{
    // dE/dt = -<dE/du, P(A u + g)> along the flow, which must equal -K.
    for (const auto& m : all_models(Grid2D(32, 32, 2.0 * pi, 2.0 * pi))) {
        const State u = random_state(*m, 4, 0.5);
        const double k = dissipation_rate(*m, u);
        const double pairing = inner(m->energy_gradient(u), flow_rhs(*m, u));
        EXPECT_NEAR(k, pairing, 1e-9 * std::max(1.0, std::abs(k))) << m->name();
    }
}

TEST(ModelProperties, ChainRuleSecondOrder)
{
    for (const auto& m : all_models(Grid2D(32, 32, 2.0 * pi, 2.0 * pi))) {
        const State u = random_state(*m, 8, 0.5);
        const State v = random_state(*m, 9, 0.5);
        const double exact = inner(m->energy_gradient(u), v);
        std::vector<double> errs;
        std::vector<double> hs{4e-2, 2e-2, 1e-2, 5e-3};
        for (double h : hs) {
            const double fd =
                (energy_tot(*m, lincomb(1.0, u, h, v)) - energy_tot(*m, lincomb(1.0, u, -h, v))) / (2.0 * h);
            errs.push_back(std::abs(fd - exact));
        }
        if (errs.front() < 1e-9 * std::max(1.0, std::abs(exact))) {
            // Quadratic energies: central differences are exact up to round-off.
            continue;
        }
        const double slope = std::log(errs.front() / errs.back()) / std::log(hs.front() / hs.back());
        EXPECT_GE(slope, 1.9) << m->name();
    }
}

TEST(ModelProperties, ConservativeNonlinearitiesHaveZeroMean)
{
    const Grid2D g(32, 32, 2.0 * pi, 2.0 * pi);
    for (const auto& m : all_models(g)) {
        if (m->name() != "cahn-hilliard" && m->name() != "ternary") {
            continue;
        }
        const State n = eval_nonlinear(*m, random_state(*m, 2, 1.0));
        for (const auto& c : n) {
            EXPECT_LE(std::abs(spectral::mean(c)), 1e-12) << m->name();
        }
    }
}

TEST(ModelProperties, DealiasedEvaluationStaysFinite)
{
    const Grid2D g(16, 16, 2.0 * pi, 2.0 * pi);
    auto ac = std::make_shared<AllenCahn>(g, 0.7);
    const State u{random_trig(g, 7, 1)};
    const State raw = ac->nonlinear(u);
    ac->set_dealias(true);
    const State filtered = ac->nonlinear(u);
    EXPECT_TRUE(all_finite(filtered));
    EXPECT_GT(max_diff(raw[0], filtered[0]), 0.0);
}

TEST(Manufactured, ZeroSolutionGivesZeroForcing)
{
    const AllenCahn ac(periodic_2pi(16), 0.7);
    const TrigProductSolution zero(1, 1, TimeProfile{TimeProfile::Kind::linear, 0.0, 0.0});
    EXPECT_LE(manufactured_forcing(ac, zero, 0.3)[0].max_abs(), 1e-15);
}

TEST(Manufactured, AllenCahnForcingAtStartIsTimeDerivative)
{
    const AllenCahn ac(periodic_2pi(16), 0.7);
    const TrigProductSolution ue(1, 1, TimeProfile{});
    const RealField want = RealField::from_function(ac.grid(), [](double x, double y) { return std::cos(x) * std::cos(y); });
    EXPECT_LE(max_diff(manufactured_forcing(ac, ue, 0.0)[0], want), 1e-14);
}

TEST(Manufactured, AllenCahnForcingMatchesAnalyticResidual)
{
    const double eps = 0.7;
    const AllenCahn ac(periodic_2pi(32), eps);
    const TrigProductSolution ue(1, 1, TimeProfile{});
    const double t = 0.8;
    const RealField f = manufactured_forcing(ac, ue, t)[0];
    const RealField want = RealField::from_function(ac.grid(), [=](double x, double y) {
        const double u = std::cos(x) * std::cos(y) * std::sin(t);
        return std::cos(x) * std::cos(y) * std::cos(t) + 2.0 * u + (u * u * u - u) / (eps * eps);
    });
    EXPECT_LE(max_diff(f, want), 1e-12);
}

TEST(Manufactured, VortexForcingLeavesOnlyGradientResidual)
{
    const double nu = 1.0;
    const NavierStokes2D ns(Grid2D(64, 64, 1.0, 1.0), nu);
    const VortexSolution ue;
    const double t = pi / 2;
    const double a = 2.0 * pi;
    // The advection term and grad p are gradients here, so P f = u_t + 2 nu a^2 u.
    SpectralState f = to_spectral(manufactured_forcing(ns, ue, t));
    ns.project(f);
    const State pf = to_real(f);
    const double amp = pi * std::cos(t) + 2.0 * nu * a * a * pi * std::sin(t);
    const RealField w1 = RealField::from_function(ns.grid(), [&](double x, double y) { return amp * std::sin(a * x) * std::cos(a * y); });
    const RealField w2 = RealField::from_function(ns.grid(), [&](double x, double y) { return -amp * std::cos(a * x) * std::sin(a * y); });
    EXPECT_LE(max_diff(pf[0], w1), 1e-10);
    EXPECT_LE(max_diff(pf[1], w2), 1e-10);

    // Residual of the forced equations with the exact solution injected.
    const State u = ue.value(ns.grid(), t);
    SpectralState r = lincomb(1.0, to_spectral(ue.time_derivative(ns.grid(), t)), 1.0, ns.apply_linear(to_spectral(u)));
    r = lincomb(1.0, r, 1.0, to_spectral(ns.nonlinear(u)));
    r = lincomb(1.0, r, 1.0, to_spectral(*ue.pressure_gradient(ns.grid(), t)));
    r = lincomb(1.0, r, -1.0, to_spectral(manufactured_forcing(ns, ue, t)));
    EXPECT_LE(ns.divergence_norm(u), 1e-10);
    EXPECT_LE(l2_norm(to_real(r)), 1e-10);
}

TEST(Models, ShapeChecks)
{
    const AllenCahn ac(periodic_2pi(8), 0.7);
    EXPECT_THROW((void)eval_nonlinear(ac, State{}), GridMismatchError);
    EXPECT_THROW((void)eval_nonlinear(ac, State{RealField(periodic_2pi(16))}), GridMismatchError);
    EXPECT_THROW(AllenCahn(periodic_2pi(8), -1.0), ConfigError);
}
