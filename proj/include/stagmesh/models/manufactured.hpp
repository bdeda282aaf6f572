#pragma once

#include "stagmesh/models/model.hpp"

#include <memory>
#include <optional>

namespace stagmesh::models {

/// Analytic solution u_e(x, y, t) used to manufacture a forcing term.
class ExactSolution {
public:
    virtual ~ExactSolution() = default;

    [[nodiscard]] virtual std::size_t components() const = 0;
    [[nodiscard]] virtual State value(const Grid2D& grid, double t) const = 0;
    [[nodiscard]] virtual State time_derivative(const Grid2D& grid, double t) const = 0;
    /// grad p_e for incompressible flow; empty for gradient flows.
    [[nodiscard]] virtual std::optional<State> pressure_gradient(const Grid2D& /*grid*/, double /*t*/) const
    {
        return std::nullopt;
    }
};

using ExactPtr = std::shared_ptr<const ExactSolution>;

/// Amplitude a(t) of a separable manufactured solution.
struct TimeProfile {
    enum class Kind { sine, exponential, linear };
    Kind kind = Kind::sine;
    double a0 = 0.0;  ///< linear only: a(t) = a0 + a1 t
    double a1 = 1.0;

    [[nodiscard]] double value(double t) const noexcept;
    [[nodiscard]] double derivative(double t) const noexcept;
};

/// u_e = a(t) cos(2 pi mx x / lx) cos(2 pi my y / ly), one component.
///
/// On [0, 2 pi)^2 with mx = my = 1 and a = sin t this is cos x cos y sin t.
class TrigProductSolution final : public ExactSolution {
public:
    TrigProductSolution(int mx, int my, TimeProfile profile);

    [[nodiscard]] std::size_t components() const override { return 1; }
    [[nodiscard]] State value(const Grid2D& grid, double t) const override;
    [[nodiscard]] State time_derivative(const Grid2D& grid, double t) const override;

private:
    [[nodiscard]] RealField shape(const Grid2D& grid) const;

    int mx_;
    int my_;
    TimeProfile profile_;
};

/// Divergence-free velocity on [0,L)^2:
///   u_e = pi sin t (sin X cos Y, -cos X sin Y),  p_e = sin t cos X sin Y,
/// with X = 2 pi x / lx, Y = 2 pi y / ly. Requires lx == ly.
class VortexSolution final : public ExactSolution {
public:
    [[nodiscard]] std::size_t components() const override { return 2; }
    [[nodiscard]] State value(const Grid2D& grid, double t) const override;
    [[nodiscard]] State time_derivative(const Grid2D& grid, double t) const override;
    [[nodiscard]] std::optional<State> pressure_gradient(const Grid2D& grid, double t) const override;
};

/// f = d_t u_e + A u_e + g(u_e) (+ grad p_e), so that u_e solves u_t + A u + g(u) (+ grad p) = f on the grid.
[[nodiscard]] State manufactured_forcing(const DissipativeModel& model, const ExactSolution& exact, double t);

}  // namespace stagmesh::models
