#pragma once

#include "stagmesh/models/state.hpp"

#include <memory>
#include <string>

namespace stagmesh::models {

/// A dissipative system u_t + A u + g(u) = 0 with energy law dE_tot/dt = -K(u).
///
/// A is diagonal in Fourier space for each component (or couples components
/// mode by mode, as in the ternary model); g is evaluated pseudo-spectrally.
/// Implementations are immutable parameter bundles and safe to share across threads.
class DissipativeModel {
public:
    explicit DissipativeModel(const Grid2D& grid) : grid_(grid) {}
    virtual ~DissipativeModel() = default;

    DissipativeModel(const DissipativeModel&) = default;
    DissipativeModel& operator=(const DissipativeModel&) = delete;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::size_t components() const = 0;
    [[nodiscard]] const Grid2D& grid() const noexcept { return grid_; }

    /// A u, mode by mode.
    [[nodiscard]] virtual SpectralState apply_linear(const SpectralState& u) const = 0;
    /// Solves (a + b A) x = rhs mode by mode, followed by project().
    [[nodiscard]] virtual SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const = 0;
    /// Removes constrained components (Leray projection for incompressible flow). Identity by default.
    virtual void project(SpectralState& /*u*/) const {}

    /// g(u). Raw evaluation; see eval_nonlinear() for the checked entry point.
    [[nodiscard]] virtual State nonlinear(const State& u) const = 0;
    [[nodiscard]] virtual double energy_tot(const State& u) const = 0;
    [[nodiscard]] virtual double dissipation(const State& u) const = 0;
    /// delta E_tot / delta u in the L2 pairing; for incompressible flow this is u itself.
    [[nodiscard]] virtual State energy_gradient(const State& u) const = 0;

    /// Largest eigenvalue of A over all modes (explicit-stability estimates).
    [[nodiscard]] virtual double linear_spectral_radius() const = 0;

    /// Default energy shift C0 for the log-form auxiliary variable.
    [[nodiscard]] virtual double default_c0() const { return 1.0; }

    void set_dealias(bool on) noexcept { dealias_ = on; }
    [[nodiscard]] bool dealias() const noexcept { return dealias_; }

    void require_shape(const State& u, const char* where) const;

protected:
    /// 2/3-filters a field when dealiasing is enabled; otherwise returns it unchanged.
    [[nodiscard]] RealField filtered(const RealField& f) const;
    [[nodiscard]] SpectralField filtered(const SpectralField& f) const;

private:
    Grid2D grid_;
    bool dealias_ = false;
};

using ModelPtr = std::shared_ptr<const DissipativeModel>;

/// g(u) with shape and finiteness checks; throws NonFiniteError if the result is not finite.
[[nodiscard]] State eval_nonlinear(const DissipativeModel& model, const State& u);
[[nodiscard]] double energy_tot(const DissipativeModel& model, const State& u);
/// K(u) >= 0.
[[nodiscard]] double dissipation_rate(const DissipativeModel& model, const State& u);

}  // namespace stagmesh::models
