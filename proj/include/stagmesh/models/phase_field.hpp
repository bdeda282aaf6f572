#pragma once

#include "stagmesh/models/model.hpp"

namespace stagmesh::models {

/// Allen-Cahn: A = -Laplacian, g(u) = (u^3 - u)/eps^2,
/// E_tot = int |grad u|^2/2 + (u^2 - 1)^2/(4 eps^2), K = ||dE/du||^2.
class AllenCahn final : public DissipativeModel {
public:
    AllenCahn(const Grid2D& grid, double eps);

    [[nodiscard]] std::string name() const override { return "allen-cahn"; }
    [[nodiscard]] std::size_t components() const override { return 1; }
    [[nodiscard]] double eps() const noexcept { return eps_; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override { return k2_.max(); }

private:
    double eps_;
    DiagonalSymbol k2_;
};

/// Cahn-Hilliard: A = bi-Laplacian, g(u) = -Laplacian((u^3 - u)/eps^2),
/// same E_tot as Allen-Cahn, K = ||grad mu||^2 with mu = -Laplacian u + (u^3 - u)/eps^2.
class CahnHilliard final : public DissipativeModel {
public:
    CahnHilliard(const Grid2D& grid, double eps);

    [[nodiscard]] std::string name() const override { return "cahn-hilliard"; }
    [[nodiscard]] std::size_t components() const override { return 1; }
    [[nodiscard]] double eps() const noexcept { return eps_; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override { return k4_.max(); }

private:
    double eps_;
    DiagonalSymbol k2_;
    DiagonalSymbol k4_;
};

/// Heat equation u_t = kappa Laplacian u with E_tot = |grad u|^2/2. g = 0.
class LinearDiffusion final : public DissipativeModel {
public:
    LinearDiffusion(const Grid2D& grid, double kappa);

    [[nodiscard]] std::string name() const override { return "linear-diffusion"; }
    [[nodiscard]] std::size_t components() const override { return 1; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override { return symbol_.max(); }

private:
    double kappa_;
    DiagonalSymbol k2_;
    DiagonalSymbol symbol_;
};

}  // namespace stagmesh::models
