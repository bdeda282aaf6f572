#pragma once

#include "stagmesh/harness/spec.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace stagmesh::harness {

enum class ReferenceKind { exact, self };

struct ConvergenceRow {
    double dt = 0.0;
    /// L2 error of the full state at t_final.
    double err_u = 0.0;
    /// |discrete energy - reference energy| at t_final.
    double err_e = 0.0;
    /// L2 error per state component.
    std::vector<double> err_components;
    double max_eta_deviation = 0.0;
    /// log(err_prev/err)/log(dt_prev/dt); NaN on the first row or next to a failed row.
    double order_u = 0.0;
    double order_e = 0.0;
    std::vector<double> order_components;
    /// Empty unless this member failed (the study continues without it).
    std::string failure;
};

struct ConvergenceReport {
    std::string name;
    ReferenceKind reference = ReferenceKind::exact;
    double reference_dt = 0.0;
    std::vector<ConvergenceRow> rows;

    /// Order between the two finest rows.
    [[nodiscard]] double final_order_u() const;
    [[nodiscard]] double final_order_e() const;
    [[nodiscard]] double final_order_component(std::size_t c) const;

    /// CSV with columns dt,err_u,err_E,order_u,order_E (plus per-component columns when there are several).
    void write_csv(const std::filesystem::path& path) const;
};

/// Runs every dt in spec.dt_list and measures errors at t_final.
///
/// With an exact solution the truth is u_e(t_final) and E_tot(u_e(t_final)). Without one
/// the truth is a run of the same scheme at spec.reference_dt, or at the last dt_list entry
/// (which is then not reported as a row). Members run in parallel on up to `threads`
/// threads; threads <= 0 reads SM_THREADS (default: hardware concurrency).
[[nodiscard]] ConvergenceReport convergence_study(const ExperimentSpec& spec, int threads = 0);

/// Thread cap from SM_THREADS, falling back to the hardware concurrency.
[[nodiscard]] int thread_budget();

}  // namespace stagmesh::harness
