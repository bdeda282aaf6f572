#pragma once

#include "stagmesh/harness/spec.hpp"
#include "stagmesh/harness/trace.hpp"

#include <string>
#include <vector>

namespace stagmesh::harness {

/// Model-specific trace columns: mean (scalar phase fields), W (mbe),
/// div_max/omega_min/omega_max (navier-stokes), mean1/mean2 (ternary).
[[nodiscard]] std::vector<std::string> diagnostic_columns(const models::DissipativeModel& model);
[[nodiscard]] std::vector<double> diagnostics(const models::DissipativeModel& model, const State& u);

/// Field names written to snapshots, one per state component (plus omega for flows).
[[nodiscard]] std::vector<std::string> snapshot_fields(const models::DissipativeModel& model);

struct RunResult {
    RunTrace trace;
    integrators::Landing landing;
    long steps = 0;
    /// Empty on success; otherwise the error message that stopped the run.
    std::string failure;
    /// Step index of a blow-up (-1 otherwise).
    long failed_step = -1;
    /// Largest |eta - 1| over all steps.
    double max_eta_deviation = 0.0;
    /// Number of steps where V increased (or became non-positive).
    long v_violations = 0;

    [[nodiscard]] bool ok() const noexcept { return failure.empty(); }
};

/// Runs spec to t_final.
///
/// Numerical failures (blow-up, branch or energy-shift errors) stop the run and are
/// reported in RunResult; the trace up to that point is kept and, if an output
/// directory is set, the last finite state is written as blowup_<field>.smf.
/// ConfigError propagates.
[[nodiscard]] RunResult run(const ExperimentSpec& spec);

/// Writes u as SMF1 snapshots named <prefix><field>.smf in dir; returns the paths.
std::vector<std::filesystem::path> write_state(const std::filesystem::path& dir, const std::string& prefix,
                                               const models::DissipativeModel& model, const State& u);

}  // namespace stagmesh::harness
