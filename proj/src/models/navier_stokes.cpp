#include "stagmesh/models/navier_stokes.hpp"

#include "detail.hpp"

namespace stagmesh::models {
namespace sp = stagmesh::spectral;

NavierStokes2D::NavierStokes2D(const Grid2D& grid, double nu)
    : DissipativeModel(grid), nu_(nu), k2_(DiagonalSymbol::neg_laplacian(grid)), symbol_(k2_.scaled(nu))
{
    detail::require_positive(nu, "viscosity nu");
}

SpectralState NavierStokes2D::apply_linear(const SpectralState& u) const
{
    return detail::diagonal_apply(symbol_, u);
}

SpectralState NavierStokes2D::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    SpectralState out = detail::diagonal_solve(a, b, symbol_, rhs);
    project(out);
    return out;
}

void NavierStokes2D::project(SpectralState& u) const
{
    if (u.size() != 2) {
        throw GridMismatchError("navier-stokes project expects two velocity components");
    }
    require_same_grid(u[0].grid(), grid(), "navier-stokes project");
    require_same_grid(u[1].grid(), grid(), "navier-stokes project");
    const Grid2D& g = grid();
    for (int i = 0; i < g.nx(); ++i) {
        const double kx = g.kx_deriv(i);
        for (int j = 0; j < g.spectral_ny(); ++j) {
            const double ky = g.ky_deriv(j);
            const double kk = kx * kx + ky * ky;
            if (kk == 0.0) {
                continue;
            }
            const sp::Complex dot = (kx * u[0](i, j) + ky * u[1](i, j)) / kk;
            u[0](i, j) -= kx * dot;
            u[1](i, j) -= ky * dot;
        }
    }
}

State NavierStokes2D::nonlinear(const State& u) const
{
    const RealField u1 = filtered(u[0]);
    const RealField u2 = filtered(u[1]);
    State out;
    for (const RealField* c : {&u1, &u2}) {
        auto [cx, cy] = sp::gradient(*c);
        for (std::size_t k = 0; k < cx.size(); ++k) {
            cx[k] = u1[k] * cx[k] + u2[k] * cy[k];
        }
        out.push_back(filtered(cx));
    }
    return out;
}

double NavierStokes2D::energy_tot(const State& u) const
{
    return 0.5 * inner(u, u);
}

double NavierStokes2D::dissipation(const State& u) const
{
    double s = 0.0;
    for (const auto& c : u) {
        s += sp::spectral_quadratic(sp::to_spectral(c), k2_);
    }
    return nu_ * s;
}

State NavierStokes2D::energy_gradient(const State& u) const
{
    return u;
}

RealField NavierStokes2D::pressure(const SpectralState& f) const
{
    // (I - P) f = k (k.f) / |k|^2 = i k p  =>  p = -i (k.f) / |k|^2
    const Grid2D& g = grid();
    SpectralField p(g);
    for (int i = 0; i < g.nx(); ++i) {
        const double kx = g.kx_deriv(i);
        for (int j = 0; j < g.spectral_ny(); ++j) {
            const double ky = g.ky_deriv(j);
            const double kk = kx * kx + ky * ky;
            if (kk == 0.0) {
                continue;
            }
            p(i, j) = sp::Complex(0.0, -1.0) * (kx * f[0](i, j) + ky * f[1](i, j)) / kk;
        }
    }
    return sp::to_real(p);
}

double NavierStokes2D::divergence_norm(const State& u) const
{
    return sp::divergence(u.at(0), u.at(1)).max_abs();
}

}  // namespace stagmesh::models
