#pragma once

#include "stagmesh/models/model.hpp"

namespace stagmesh::models {

struct SurfaceTensions {
    double sigma12 = 1.0;
    double sigma13 = 1.0;
    double sigma23 = 1.0;
};

/// Three-phase Cahn-Hilliard with phi3 = 1 - phi1 - phi2 eliminated.
///
/// State is (phi1, phi2). With c = 3 eps^2 / 4,
///   mu_1 = -c (S1 + S3) Lap phi1 - c S3 Lap phi2 + 12 dF/dphi1
///   mu_2 = -c S3 Lap phi1 - c (S2 + S3) Lap phi2 + 12 dF/dphi2
///   phi_l,t = (M / S_l) Lap mu_l
/// The linear part couples both components mode by mode through a 2x2 matrix.
class TernaryCahnHilliard final : public DissipativeModel {
public:
    TernaryCahnHilliard(const Grid2D& grid, SurfaceTensions tensions, double lambda, double mobility, double eps);

    [[nodiscard]] std::string name() const override { return "ternary"; }
    [[nodiscard]] std::size_t components() const override { return 2; }

    [[nodiscard]] double big_sigma(int l) const;
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double mobility() const noexcept { return mobility_; }
    [[nodiscard]] double eps() const noexcept { return eps_; }

    [[nodiscard]] SpectralState apply_linear(const SpectralState& u) const override;
    [[nodiscard]] SpectralState solve_shifted(double a, double b, const SpectralState& rhs) const override;
    [[nodiscard]] State nonlinear(const State& u) const override;
    [[nodiscard]] double energy_tot(const State& u) const override;
    [[nodiscard]] double dissipation(const State& u) const override;
    /// (mu_1, mu_2)
    [[nodiscard]] State energy_gradient(const State& u) const override;
    [[nodiscard]] double linear_spectral_radius() const override;

    /// Bulk potential F(phi1, phi2).
    [[nodiscard]] double potential(double p1, double p2) const noexcept;
    /// (dF/dphi1, dF/dphi2)
    [[nodiscard]] std::pair<double, double> potential_gradient(double p1, double p2) const noexcept;

private:
    [[nodiscard]] State bulk_gradient(const State& u) const;

    double s1_;
    double s2_;
    double s3_;
    double lambda_;
    double mobility_;
    double eps_;
    double c_;
    DiagonalSymbol k2_;
    DiagonalSymbol k4_;
};

}  // namespace stagmesh::models
