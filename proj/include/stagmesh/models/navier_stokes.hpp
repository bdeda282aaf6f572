#pragma once

#include "stagmesh/models/model.hpp"

namespace stagmesh::models {

/// Incompressible 2D Navier-Stokes: u_t - nu Lap u + (u.grad) u + grad p = 0, div u = 0.
///
/// State is (u1, u2). The pressure is not stored; project() applies the
/// per-mode Leray projection I - k k^T / |k|^2 and pressure() recovers p from
/// the removed gradient component. E_tot = ||u||^2 / 2, K = nu ||grad u||^2.
class NavierStokes2D final : public DissipativeModel {
public:
    NavierStokes2D(const Grid2D& grid, double nu);

    [[nodiscard]] std::string name() const override { return "navier-stokes"; }
    [[nodiscard]] std::size_t components() const override { return 2; }
    [[nodiscard]] double nu() const noexcept { return nu_; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    /// Diagonal solve followed by the Leray projection.
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    void project(SpectralState& u) const override;

    /// (u.grad) u, not projected.
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override { return symbol_.max(); }

    /// Mean-free p with grad p equal to the gradient part of the vector field f.
    [[nodiscard]] RealField pressure(const SpectralState& f) const;
    /// max |div u| on the grid.
    [[nodiscard]] double divergence_norm(const State& u) const;

private:
    double nu_;
    DiagonalSymbol k2_;
    DiagonalSymbol symbol_;
};

}  // namespace stagmesh::models
