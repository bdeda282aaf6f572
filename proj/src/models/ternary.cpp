#include "stagmesh/models/ternary.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>

namespace stagmesh::models {
namespace sp = stagmesh::spectral;

TernaryCahnHilliard::TernaryCahnHilliard(const Grid2D& grid, SurfaceTensions t, double lambda, double mobility,
                                         double eps)
    : DissipativeModel(grid), s1_(t.sigma12 + t.sigma13 - t.sigma23), s2_(t.sigma12 + t.sigma23 - t.sigma13),
      s3_(t.sigma13 + t.sigma23 - t.sigma12), lambda_(lambda), mobility_(mobility), eps_(eps),
      c_(0.75 * eps * eps), k2_(DiagonalSymbol::neg_laplacian(grid)), k4_(DiagonalSymbol::bilaplacian(grid))
{
    detail::require_positive(mobility, "ternary mobility");
    detail::require_positive(eps, "ternary eps");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw ConfigError("ternary lambda must be non-negative and finite");
    }
    detail::require_positive(s1_, "ternary Sigma_1 = sigma12 + sigma13 - sigma23");
    detail::require_positive(s2_, "ternary Sigma_2 = sigma12 + sigma23 - sigma13");
    // G = [[S1+S3, S3], [S3, S2+S3]] must be positive definite.
    const double det = (s1_ + s3_) * (s2_ + s3_) - s3_ * s3_;
    if (!(s1_ + s3_ > 0.0) || !(det > 0.0)) {
        throw ConfigError("ternary surface tensions give an indefinite gradient energy");
    }
}

double TernaryCahnHilliard::big_sigma(int l) const
{
    switch (l) {
    case 1: return s1_;
    case 2: return s2_;
    case 3: return s3_;
    default: throw ConfigError("Sigma index must be 1, 2 or 3");
    }
}

// Per mode the linear operator is M c |k|^4 D^{-1} G with D = diag(S1, S2).
SpectralState TernaryCahnHilliard::apply_linear(const SpectralState& u) const
{
    require_same_grid(u.at(0).grid(), grid(), "ternary apply_linear");
    SpectralState out{SpectralField(grid()), SpectralField(grid())};
    const double m = mobility_ * c_;
    for (std::size_t k = 0; k < out[0].size(); ++k) {
        const double w = m * k4_[k];
        const sp::Complex a = u[0][k];
        const sp::Complex b = u[1][k];
        out[0][k] = w / s1_ * ((s1_ + s3_) * a + s3_ * b);
        out[1][k] = w / s2_ * (s3_ * a + (s2_ + s3_) * b);
    }
    return out;
}

SpectralState TernaryCahnHilliard::solve_shifted(double a, double b, const SpectralState& rhs) const
{
    require_same_grid(rhs.at(0).grid(), grid(), "ternary solve_shifted");
    SpectralState out{SpectralField(grid()), SpectralField(grid())};
    const double m = mobility_ * c_;
    for (std::size_t k = 0; k < out[0].size(); ++k) {
        const double w = b * m * k4_[k];
        const double m11 = a + w * (s1_ + s3_) / s1_;
        const double m12 = w * s3_ / s1_;
        const double m21 = w * s3_ / s2_;
        const double m22 = a + w * (s2_ + s3_) / s2_;
        const double det = m11 * m22 - m12 * m21;
        // Eigenvalues are a + w*lambda_i with lambda_i > 0; det > 0 iff the mode is regular.
        if (!(det > 0.0) || !(m11 + m22 > 0.0) || !std::isfinite(det)) {
            throw SingularSolveError("ternary 2x2 mode matrix is singular");
        }
        const sp::Complex r1 = rhs[0][k];
        const sp::Complex r2 = rhs[1][k];
        out[0][k] = (m22 * r1 - m12 * r2) / det;
        out[1][k] = (m11 * r2 - m21 * r1) / det;
    }
    return out;
}

double TernaryCahnHilliard::linear_spectral_radius() const
{
    // Largest eigenvalue of D^{-1} G.
    const double p = (s1_ + s3_) / s1_;
    const double q = (s2_ + s3_) / s2_;
    const double off = s3_ * s3_ / (s1_ * s2_);
    const double tr = p + q;
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - (p * q - off)));
    return mobility_ * c_ * k4_.max() * (0.5 * tr + disc);
}

double TernaryCahnHilliard::potential(double p1, double p2) const noexcept
{
    const double s = p1 + p2;
    const double w = 1.0 - s;
    const double a = p1 * (1.0 - p1);
    const double b = p2 * (1.0 - p2);
    return 0.5 * s1_ * a * a + 0.5 * s2_ * b * b + 0.5 * s3_ * s * s * w * w + 3.0 * lambda_ * p1 * p1 * p2 * p2 * w * w;
}

std::pair<double, double> TernaryCahnHilliard::potential_gradient(double p1, double p2) const noexcept
{
    const double s = p1 + p2;
    const double w = 1.0 - s;
    const double shared = s3_ * s * w * (1.0 - 2.0 * s);
    const double d1 = s1_ * p1 * (1.0 - p1) * (1.0 - 2.0 * p1) + shared + 6.0 * lambda_ * p1 * p2 * p2 * w * (w - p1);
    const double d2 = s2_ * p2 * (1.0 - p2) * (1.0 - 2.0 * p2) + shared + 6.0 * lambda_ * p1 * p1 * p2 * w * (w - p2);
    return {d1, d2};
}

State TernaryCahnHilliard::bulk_gradient(const State& u) const
{
    State out{RealField(grid()), RealField(grid())};
    for (std::size_t k = 0; k < out[0].size(); ++k) {
        const auto [d1, d2] = potential_gradient(u[0][k], u[1][k]);
        out[0][k] = 12.0 * d1;
        out[1][k] = 12.0 * d2;
    }
    return out;
}

State TernaryCahnHilliard::nonlinear(const State& u) const
{
    const State bulk = bulk_gradient({filtered(u[0]), filtered(u[1])});
    State out;
    const double sig[2] = {s1_, s2_};
    for (std::size_t l = 0; l < 2; ++l) {
        SpectralField f = sp::apply_symbol(sp::to_spectral(bulk[l]), k2_);
        f *= mobility_ / sig[l];
        out.push_back(sp::to_real(filtered(f)));
    }
    return out;
}

State TernaryCahnHilliard::energy_gradient(const State& u) const
{
    const SpectralState hat = to_spectral(u);
    const State bulk = bulk_gradient(u);
    State out;
    for (std::size_t l = 0; l < 2; ++l) {
        const double own = l == 0 ? s1_ + s3_ : s2_ + s3_;
        SpectralField lin = sp::apply_symbol(own * hat[l] + s3_ * hat[1 - l], k2_);
        lin *= c_;
        out.push_back(sp::to_real(lin) + bulk[l]);
    }
    return out;
}

double TernaryCahnHilliard::energy_tot(const State& u) const
{
    const SpectralState hat = to_spectral(u);
    const double grad = s1_ * sp::spectral_quadratic(hat[0], k2_) + s2_ * sp::spectral_quadratic(hat[1], k2_) +
                        s3_ * sp::spectral_quadratic(hat[0] + hat[1], k2_);
    RealField density(grid());
    for (std::size_t k = 0; k < density.size(); ++k) {
        density[k] = 12.0 * potential(u[0][k], u[1][k]);
    }
    return 0.5 * c_ * grad + sp::integral(density);
}

double TernaryCahnHilliard::dissipation(const State& u) const
{
    const SpectralState mu = to_spectral(energy_gradient(u));
    return mobility_ * (sp::spectral_quadratic(mu[0], k2_) / s1_ + sp::spectral_quadratic(mu[1], k2_) / s2_);
}

}  // namespace stagmesh::models
