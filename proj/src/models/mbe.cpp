#include "stagmesh/models/mbe.hpp"

#include "detail.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <cmath>

namespace stagmesh::models {
namespace sp = stagmesh::spectral;

MbeNoSlope::MbeNoSlope(const Grid2D& grid, double mobility, double eps)
    : DissipativeModel(grid), mobility_(mobility), eps_(eps), k4_(DiagonalSymbol::bilaplacian(grid)),
      symbol_(k4_.scaled(mobility * eps * eps))
{
    detail::require_positive(mobility, "mbe mobility");
    detail::require_positive(eps, "mbe eps");
}

SpectralState MbeNoSlope::apply_linear(const SpectralState& u) const
{
    return detail::diagonal_apply(symbol_, u);
}

SpectralState MbeNoSlope::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    return detail::diagonal_solve(a, b, symbol_, rhs);
}

RealField MbeNoSlope::slope_force(const RealField& phi) const
{
    auto [px, py] = sp::gradient(filtered(phi));
    for (std::size_t k = 0; k < px.size(); ++k) {
        const double w = 1.0 / (1.0 + px[k] * px[k] + py[k] * py[k]);
        px[k] *= w;
        py[k] *= w;
    }
    SpectralField d = sp::ddx(sp::to_spectral(px));
    d += sp::ddy(sp::to_spectral(py));
    return sp::to_real(filtered(d));
}

State MbeNoSlope::nonlinear(const State& u) const
{
    return {mobility_ * slope_force(u[0])};
}

double MbeNoSlope::energy_tot(const State& u) const
{
    const SpectralField phi_hat = sp::to_spectral(u[0]);
    const auto [px, py] = sp::gradient(u[0]);
    RealField density(u[0].grid());
    for (std::size_t k = 0; k < density.size(); ++k) {
        density[k] = -0.5 * std::log1p(px[k] * px[k] + py[k] * py[k]);
    }
    return 0.5 * eps_ * eps_ * sp::spectral_quadratic(phi_hat, k4_) + sp::integral(density);
}

State MbeNoSlope::energy_gradient(const State& u) const
{
    SpectralField grad = sp::apply_symbol(sp::to_spectral(u[0]), k4_);
    grad *= eps_ * eps_;
    grad += sp::to_spectral(slope_force(u[0]));
    return {sp::to_real(grad)};
}

double MbeNoSlope::dissipation(const State& u) const
{
    const RealField grad = energy_gradient(u)[0];
    return mobility_ * sp::inner(grad, grad);
}

}  // namespace stagmesh::models
