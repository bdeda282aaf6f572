#include "stagmesh/harness/run.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/harness/analysis.hpp"
#include "stagmesh/models/mbe.hpp"
#include "stagmesh/models/navier_stokes.hpp"
#include "stagmesh/models/ternary.hpp"
#include "stagmesh/spectral/operators.hpp"
#include "stagmesh/spectral/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace stagmesh::harness {
namespace {

bool is_ns(const models::DissipativeModel& m)
{
    return dynamic_cast<const models::NavierStokes2D*>(&m) != nullptr;
}

bool is_ternary(const models::DissipativeModel& m)
{
    return dynamic_cast<const models::TernaryCahnHilliard*>(&m) != nullptr;
}

bool is_mbe(const models::DissipativeModel& m)
{
    return dynamic_cast<const models::MbeNoSlope*>(&m) != nullptr;
}

std::string time_tag(double t)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "t%.6g", t);
    return buf;
}

}  // namespace

std::vector<std::string> diagnostic_columns(const models::DissipativeModel& model)
{
    if (is_ns(model)) {
        return {"div_max", "omega_min", "omega_max"};
    }
    if (is_ternary(model)) {
        return {"mean1", "mean2"};
    }
    if (is_mbe(model)) {
        return {"W"};
    }
    return {"mean"};
}

std::vector<double> diagnostics(const models::DissipativeModel& model, const State& u)
{
    if (is_ns(model)) {
        const RealField w = spectral::vorticity(u[0], u[1]);
        return {spectral::divergence(u[0], u[1]).max_abs(), w.min(), w.max()};
    }
    if (is_ternary(model)) {
        return {spectral::mean(u[0]), spectral::mean(u[1])};
    }
    if (is_mbe(model)) {
        return {roughness(u[0])};
    }
    return {spectral::mean(u[0])};
}

std::vector<std::string> snapshot_fields(const models::DissipativeModel& model)
{
    if (is_ns(model)) {
        return {"u1", "u2", "omega"};
    }
    if (is_ternary(model)) {
        return {"phi1", "phi2"};
    }
    return {"phi"};
}

std::vector<std::filesystem::path> write_state(const std::filesystem::path& dir, const std::string& prefix,
                                               const models::DissipativeModel& model, const State& u)
{
    const auto names = snapshot_fields(model);
    std::vector<std::filesystem::path> out;
    for (std::size_t c = 0; c < names.size(); ++c) {
        const auto path = dir / (prefix + names[c] + ".smf");
        if (c < u.size()) {
            spectral::write_snapshot(path, u[c]);
        } else {
            spectral::write_snapshot(path, spectral::vorticity(u[0], u[1]));
        }
        out.push_back(path);
    }
    return out;
}

RunResult run(const ExperimentSpec& spec)
{
    spec.validate();
    const Grid2D grid = make_grid(spec.grid);
    const auto model = make_model(spec.model, grid);
    const auto exact = make_exact(spec.exact);
    integrators::Stepper stepper(make_problem(model, exact), spec.scheme);

    RunResult res{RunTrace(diagnostic_columns(*model)), {}, 0, {}, -1, 0.0, 0};
    const bool files = !spec.output_dir.empty();
    const std::filesystem::path dir(spec.output_dir);
    if (files) {
        std::filesystem::create_directories(dir);
        res.trace.open(dir / "trace.csv");
    }

    const State u0 = make_initial(spec, grid, exact.get());
    std::vector<double> pending = spec.snapshot_times;
    std::sort(pending.begin(), pending.end());
    const double dt = spec.scheme.dt;
    auto take_snapshots = [&](const State& u, double t) {
        while (!pending.empty() && pending.front() <= t + 0.5 * dt) {
            if (files) {
                const std::string prefix = "snap_" + time_tag(pending.front()) + "_";
                const auto names = snapshot_fields(*model);
                const auto paths = write_state(dir, prefix, *model, u);
                for (std::size_t c = 0; c < paths.size(); ++c) {
                    res.trace.add_snapshot(t, names[c], paths[c]);
                }
            }
            pending.erase(pending.begin());
        }
    };

    const bool has_v = spec.scheme.scheme != integrators::Scheme::cn_imex;
    double v_last = has_v ? stepper.shifted_energy(u0) : 0.0;
    auto record = [&](const integrators::StepState& s, bool force) {
        const double eta = s.aux.eta;
        res.max_eta_deviation = std::max(res.max_eta_deviation, std::abs(eta - 1.0));
        const double v = s.aux.v_half;
        if (has_v && s.step > 0) {
            if (!(v > 0.0) || v > v_last) {
                ++res.v_violations;
            }
            v_last = v;
        }
        if (s.step > 0 && (force || s.step % spec.trace_stride == 0)) {
            res.trace.append(s.t, models::energy_tot(*model, s.u), v, eta, models::dissipation_rate(*model, s.u),
                             diagnostics(*model, s.u));
        }
    };

    integrators::StepState s;
    State last_finite = u0;
    try {
        take_snapshots(u0, 0.0);
        s = stepper.start(u0);
        // Bootstrap V^{1/2} is not bounded by the initial shifted energy; monotonicity is checked from here on.
        v_last = s.aux.v_half;
        record(s, false);
        take_snapshots(s.u, s.t);
        last_finite = s.u;
        while (stepper.can_step(s, spec.t_final)) {
            stepper.step(s);
            record(s, !stepper.can_step(s, spec.t_final));
            take_snapshots(s.u, s.t);
            last_finite = s.u;
        }
        res.steps = s.step;
        res.landing = stepper.finish(s);
    } catch (const ConfigError&) {
        throw;
    } catch (const BlowUpError& e) {
        res.failure = e.what();
        res.failed_step = e.step();
    } catch (const NonFiniteError& e) {
        // A finite state whose energy or dissipation overflows.
        res.failure = "blow-up at step " + std::to_string(s.step) + ": " + e.what();
        res.failed_step = s.step;
    } catch (const Error& e) {
        res.failure = e.what();
    }
    if (!res.ok()) {
        res.steps = s.step;
        if (files) {
            write_state(dir, "blowup_", *model, last_finite);
        }
    }
    return res;
}

}  // namespace stagmesh::harness
