#include "stagmesh/harness/convergence.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/harness/trace.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

namespace stagmesh::harness {
namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

struct Member {
    State u;
    double energy = 0.0;
    double t = 0.0;
    double max_eta_deviation = 0.0;
    std::string failure;
};

Member simulate(const ExperimentSpec& spec, double dt)
{
    const Grid2D grid = make_grid(spec.grid);
    const auto model = make_model(spec.model, grid);
    const auto exact = make_exact(spec.exact);
    SMConfig cfg = spec.scheme;
    cfg.dt = dt;
    integrators::Stepper stepper(make_problem(model, exact), cfg);
    Member out;
    try {
        auto s = stepper.start(make_initial(spec, grid, exact.get()));
        out.max_eta_deviation = std::abs(s.aux.eta - 1.0);
        while (stepper.can_step(s, spec.t_final)) {
            stepper.step(s);
            out.max_eta_deviation = std::max(out.max_eta_deviation, std::abs(s.aux.eta - 1.0));
        }
        auto landing = stepper.finish(s);
        if (std::abs(landing.t - spec.t_final) > 1e-6 * dt) {
            throw ConfigError("dt " + format_double(dt) + " does not divide t_final");
        }
        out.u = std::move(landing.u);
        out.energy = landing.energy;
        out.t = landing.t;
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        out.failure = e.what();
    }
    return out;
}

double order(double e_prev, double e, double dt_prev, double dt)
{
    if (!(e_prev > 0.0) || !(e > 0.0) || !std::isfinite(e_prev) || !std::isfinite(e)) {
        return nan_value;
    }
    return std::log(e_prev / e) / std::log(dt_prev / dt);
}

}  // namespace

int thread_budget()
{
    if (const char* env = std::getenv("SM_THREADS"); env != nullptr && *env != '\0') {
        const int n = std::atoi(env);
        if (n >= 1) {
            return n;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double ConvergenceReport::final_order_u() const
{
    return rows.empty() ? nan_value : rows.back().order_u;
}

double ConvergenceReport::final_order_e() const
{
    return rows.empty() ? nan_value : rows.back().order_e;
}

double ConvergenceReport::final_order_component(std::size_t c) const
{
    if (rows.empty() || c >= rows.back().order_components.size()) {
        return nan_value;
    }
    return rows.back().order_components[c];
}

void ConvergenceReport::write_csv(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write report " + path.string());
    }
    const std::size_t nc = rows.empty() ? 0 : rows.front().err_components.size();
    out << "dt,err_u,err_E,order_u,order_E";
    if (nc > 1) {
        for (std::size_t c = 0; c < nc; ++c) {
            out << ",err_u" << c + 1 << ",order_u" << c + 1;
        }
    }
    out << '\n';
    for (const auto& r : rows) {
        out << format_double(r.dt) << ',' << format_double(r.err_u) << ',' << format_double(r.err_e) << ','
            << format_double(r.order_u) << ',' << format_double(r.order_e);
        if (nc > 1) {
            for (std::size_t c = 0; c < nc; ++c) {
                out << ',' << format_double(r.err_components[c]) << ',' << format_double(r.order_components[c]);
            }
        }
        out << '\n';
    }
}

ConvergenceReport convergence_study(const ExperimentSpec& spec, int threads)
{
    spec.validate();
    if (spec.dt_list.empty()) {
        throw ConfigError("dt_list must not be empty for a convergence study");
    }
    const Grid2D grid = make_grid(spec.grid);
    const auto model = make_model(spec.model, grid);
    const auto exact = make_exact(spec.exact);

    ConvergenceReport rep;
    rep.name = spec.name;
    std::vector<double> dts = spec.dt_list;
    if (exact) {
        rep.reference = ReferenceKind::exact;
    } else {
        rep.reference = ReferenceKind::self;
        if (spec.reference_dt > 0.0) {
            rep.reference_dt = spec.reference_dt;
        } else {
            if (dts.size() < 2) {
                throw ConfigError("self-reference study needs reference_dt or at least two dt_list entries");
            }
            rep.reference_dt = dts.back();
            dts.pop_back();
        }
        dts.push_back(rep.reference_dt);
    }

    std::vector<Member> members(dts.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < dts.size(); i = next++) {
            try {
                members[i] = simulate(spec, dts[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    const int n_threads = std::clamp(threads > 0 ? threads : thread_budget(), 1, static_cast<int>(dts.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    State truth;
    double e_truth = 0.0;
    std::size_t n_rows = dts.size();
    if (exact) {
        truth = exact->value(grid, spec.t_final);
        e_truth = models::energy_tot(*model, truth);
    } else {
        Member& ref = members.back();
        if (!ref.failure.empty()) {
            throw BlowUpError("reference run failed: " + ref.failure, -1);
        }
        truth = ref.u;
        e_truth = ref.energy;
        --n_rows;
    }

    for (std::size_t i = 0; i < n_rows; ++i) {
        ConvergenceRow row;
        row.dt = dts[i];
        const Member& m = members[i];
        row.failure = m.failure;
        row.max_eta_deviation = m.max_eta_deviation;
        if (m.failure.empty()) {
            row.err_u = models::l2_norm(models::lincomb(1.0, m.u, -1.0, truth));
            row.err_e = std::abs(m.energy - e_truth);
            for (std::size_t c = 0; c < truth.size(); ++c) {
                row.err_components.push_back(spectral::l2_norm(m.u[c] - truth[c]));
            }
        } else {
            row.err_u = nan_value;
            row.err_e = nan_value;
            row.err_components.assign(truth.size(), nan_value);
        }
        row.order_u = nan_value;
        row.order_e = nan_value;
        row.order_components.assign(truth.size(), nan_value);
        if (i > 0) {
            const ConvergenceRow& prev = rep.rows.back();
            row.order_u = order(prev.err_u, row.err_u, prev.dt, row.dt);
            row.order_e = order(prev.err_e, row.err_e, prev.dt, row.dt);
            for (std::size_t c = 0; c < truth.size(); ++c) {
                row.order_components[c] = order(prev.err_components[c], row.err_components[c], prev.dt, row.dt);
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace stagmesh::harness
