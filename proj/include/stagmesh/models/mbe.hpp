#pragma once

#include "stagmesh/models/model.hpp"

namespace stagmesh::models {

/// Molecular beam epitaxy without slope selection.
///
///   phi_t = -M (eps^2 Lap^2 phi + div(grad phi / (1 + |grad phi|^2)))
///   E_tot = int eps^2/2 |Lap phi|^2 - 1/2 ln(1 + |grad phi|^2)
///   K     = M ||eps^2 Lap^2 phi + div(grad phi / (1 + |grad phi|^2))||^2
///
/// E_tot is unbounded below.
class MbeNoSlope final : public DissipativeModel {
public:
    MbeNoSlope(const Grid2D& grid, double mobility, double eps);

    [[nodiscard]] std::string name() const override { return "mbe"; }
    [[nodiscard]] std::size_t components() const override { return 1; }
    [[nodiscard]] double mobility() const noexcept { return mobility_; }
    [[nodiscard]] double eps() const noexcept { return eps_; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override { return symbol_.max(); }
    /// E_tot is unbounded below, so the shift is large.
    [[nodiscard]] double default_c0() const override { return 1e5; }

    /// div(grad phi / (1 + |grad phi|^2)), the nonlinear force without mobility.
    [[nodiscard]] RealField slope_force(const RealField& phi) const;

private:
    double mobility_;
    double eps_;
    DiagonalSymbol k4_;
    DiagonalSymbol symbol_;
};

}  // namespace stagmesh::models
