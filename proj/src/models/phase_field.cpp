#include "stagmesh/models/phase_field.hpp"

#include "detail.hpp"
#include "stagmesh/errors.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <cmath>

namespace stagmesh::models {
namespace sp = stagmesh::spectral;
using detail::diagonal_apply;
using detail::diagonal_solve;
using detail::require_positive;

namespace {

// (u^3 - u)/eps^2, the derivative of (u^2 - 1)^2/(4 eps^2).
RealField double_well_derivative(const RealField& u, double eps)
{
    RealField out(u.grid());
    const double inv = 1.0 / (eps * eps);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double v = u[k];
        out[k] = (v * v * v - v) * inv;
    }
    return out;
}

double double_well_energy(const RealField& u, double eps)
{
    RealField density(u.grid());
    const double inv = 1.0 / (4.0 * eps * eps);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double w = u[k] * u[k] - 1.0;
        density[k] = w * w * inv;
    }
    return sp::integral(density);
}

// mu = -Laplacian u + (u^3 - u)/eps^2, returned in spectral form.
SpectralField chemical_potential(const RealField& u, const SpectralField& u_hat, const DiagonalSymbol& k2, double eps)
{
    SpectralField mu = sp::apply_symbol(u_hat, k2);
    mu += sp::to_spectral(double_well_derivative(u, eps));
    return mu;
}

}  // namespace

AllenCahn::AllenCahn(const Grid2D& grid, double eps)
    : DissipativeModel(grid), eps_(eps), k2_(DiagonalSymbol::neg_laplacian(grid))
{
    require_positive(eps, "allen-cahn eps");
}

SpectralState AllenCahn::apply_linear(const SpectralState& u) const
{
    return diagonal_apply(k2_, u);
}

SpectralState AllenCahn::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    return diagonal_solve(a, b, k2_, rhs);
}

State AllenCahn::nonlinear(const State& u) const
{
    RealField g = double_well_derivative(filtered(u[0]), eps_);
    return {filtered(g)};
}

double AllenCahn::energy_tot(const State& u) const
{
    const SpectralField u_hat = sp::to_spectral(u[0]);
    return 0.5 * sp::spectral_quadratic(u_hat, k2_) + double_well_energy(u[0], eps_);
}

double AllenCahn::dissipation(const State& u) const
{
    const SpectralField mu = chemical_potential(u[0], sp::to_spectral(u[0]), k2_, eps_);
    return sp::spectral_inner(mu, mu);
}

State AllenCahn::energy_gradient(const State& u) const
{
    return {sp::to_real(chemical_potential(u[0], sp::to_spectral(u[0]), k2_, eps_))};
}

CahnHilliard::CahnHilliard(const Grid2D& grid, double eps)
    : DissipativeModel(grid), eps_(eps), k2_(DiagonalSymbol::neg_laplacian(grid)),
      k4_(DiagonalSymbol::bilaplacian(grid))
{
    require_positive(eps, "cahn-hilliard eps");
}

SpectralState CahnHilliard::apply_linear(const SpectralState& u) const
{
    return diagonal_apply(k4_, u);
}

SpectralState CahnHilliard::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    return diagonal_solve(a, b, k4_, rhs);
}

State CahnHilliard::nonlinear(const State& u) const
{
    const RealField fp = double_well_derivative(filtered(u[0]), eps_);
    // -Laplacian in Fourier space multiplies by |k|^2; the zero mode is annihilated exactly.
    SpectralField g = sp::apply_symbol(sp::to_spectral(fp), k2_);
    return {sp::to_real(filtered(g))};
}

double CahnHilliard::energy_tot(const State& u) const
{
    const SpectralField u_hat = sp::to_spectral(u[0]);
    return 0.5 * sp::spectral_quadratic(u_hat, k2_) + double_well_energy(u[0], eps_);
}

double CahnHilliard::dissipation(const State& u) const
{
    const SpectralField mu = chemical_potential(u[0], sp::to_spectral(u[0]), k2_, eps_);
    return sp::spectral_quadratic(mu, k2_);
}

State CahnHilliard::energy_gradient(const State& u) const
{
    return {sp::to_real(chemical_potential(u[0], sp::to_spectral(u[0]), k2_, eps_))};
}

LinearDiffusion::LinearDiffusion(const Grid2D& grid, double kappa)
    : DissipativeModel(grid), kappa_(kappa), k2_(DiagonalSymbol::neg_laplacian(grid)),
      symbol_(k2_.scaled(kappa))
{
    require_positive(kappa, "diffusion coefficient");
}

SpectralState LinearDiffusion::apply_linear(const SpectralState& u) const
{
    return diagonal_apply(symbol_, u);
}

SpectralState LinearDiffusion::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    return diagonal_solve(a, b, symbol_, rhs);
}

State LinearDiffusion::nonlinear(const State& u) const
{
    return {RealField(u[0].grid())};
}

double LinearDiffusion::energy_tot(const State& u) const
{
    return 0.5 * sp::spectral_quadratic(sp::to_spectral(u[0]), k2_);
}

double LinearDiffusion::dissipation(const State& u) const
{
    const SpectralField lap = sp::apply_symbol(sp::to_spectral(u[0]), k2_);
    return kappa_ * sp::spectral_inner(lap, lap);
}

State LinearDiffusion::energy_gradient(const State& u) const
{
    return {sp::to_real(sp::apply_symbol(sp::to_spectral(u[0]), k2_))};
}

}  // namespace stagmesh::models
