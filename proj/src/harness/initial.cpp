#include "stagmesh/harness/initial.hpp"

#include "stagmesh/spectral/operators.hpp"

#include <cmath>
#include <numbers>

namespace stagmesh::harness {

RealField uniform_noise(const Grid2D& grid, double amplitude, Rng& rng)
{
    RealField f(grid);
    for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = amplitude * rng.uniform_pm1();
    }
    return f;
}

RealField smooth_random(const Grid2D& grid, int max_mode, double amplitude, Rng& rng)
{
    spectral::SpectralField hat(grid);
    const double n = static_cast<double>(grid.size());
    for (int i = 0; i < grid.nx(); ++i) {
        const int mx = grid.mode_x(i);
        for (int j = 0; j < grid.spectral_ny(); ++j) {
            const int my = grid.mode_y(j);
            if (std::abs(mx) > max_mode || my > max_mode || 2 * std::abs(mx) >= grid.nx() || 2 * my >= grid.ny()) {
                continue;
            }
            const double re = rng.uniform_pm1();
            const double im = rng.uniform_pm1();
            hat(i, j) = n * spectral::Complex(re, (my == 0 ? 0.0 : im));
        }
    }
    // Column 0 must be Hermitian in x; symmetrize it.
    for (int i = 1; i < grid.nx() / 2; ++i) {
        const spectral::Complex a = hat(i, 0);
        const spectral::Complex b = hat(grid.nx() - i, 0);
        const spectral::Complex s = 0.5 * (a + std::conj(b));
        hat(i, 0) = s;
        hat(grid.nx() - i, 0) = std::conj(s);
    }
    hat(0, 0) = 0.0;
    RealField f = spectral::to_real(hat);
    const double m = f.max_abs();
    if (m > 0.0) {
        f *= amplitude / m;
    }
    return f;
}

State double_shear_layer(const Grid2D& grid, double rho, double sigma)
{
    const double lx = grid.lx();
    const double ly = grid.ly();
    return {RealField::from_function(grid,
                                     [&](double, double y) {
                                         const double s = y / ly;
                                         return s <= 0.5 ? std::tanh(rho * (s - 0.25)) : std::tanh(rho * (0.75 - s));
                                     }),
            RealField::from_function(
                grid, [&](double x, double) { return sigma * std::sin(2.0 * std::numbers::pi * x / lx); })};
}

State ternary_bubbles(const Grid2D& grid, double eps, Bubble b1, Bubble b2)
{
    auto profile = [eps](const Bubble& b) {
        return [b, eps](double x, double y) {
            return 0.5 * (1.0 + std::tanh((b.r - std::hypot(x - b.x, y - b.y)) / eps));
        };
    };
    return {RealField::from_function(grid, profile(b1)), RealField::from_function(grid, profile(b2))};
}

State ternary_spinodal(const Grid2D& grid, double amplitude, Rng& rng)
{
    State out;
    for (int c = 0; c < 2; ++c) {
        RealField f = RealField::from_function(grid, [](double, double y) { return 0.5 * (0.5 * y + 0.25); });
        f += uniform_noise(grid, amplitude, rng);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace stagmesh::harness
