#pragma once

#include "stagmesh/models/state.hpp"

#include <cstdint>
#include <random>

namespace stagmesh::harness {

using models::Grid2D;
using models::RealField;
using models::State;

/// Seeded source of uniform variates.
///
/// Draws come from std::mt19937_64 seeded with the run seed; each 64-bit
/// output x maps to (x >> 11) * 2^-53 in [0, 1), and to 2u - 1 for [-1, 1).
/// Fields are filled in storage order (x-major).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform_pm1() noexcept { return 2.0 * uniform01() - 1.0; }

private:
    std::mt19937_64 engine_;
};

/// amplitude * rand, rand uniform in [-1, 1).
[[nodiscard]] RealField uniform_noise(const Grid2D& grid, double amplitude, Rng& rng);

/// Random trigonometric polynomial with modes |m_x|, |m_y| <= max_mode, scaled to max|u| = amplitude.
[[nodiscard]] RealField smooth_random(const Grid2D& grid, int max_mode, double amplitude, Rng& rng);

/// u1 = tanh(rho (y - 1/4)) for y <= 1/2, tanh(rho (3/4 - y)) above; u2 = sigma sin(2 pi x / lx).
/// y is measured in units of ly.
[[nodiscard]] State double_shear_layer(const Grid2D& grid, double rho, double sigma);

struct Bubble {
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
};

/// phi_i = (1 + tanh((r_i - |x - c_i|) / eps)) / 2 for two bubbles.
[[nodiscard]] State ternary_bubbles(const Grid2D& grid, double eps, Bubble b1, Bubble b2);

/// phi_1 = phi_2 = (y/2 + 1/4)/2 + amplitude * rand, with independent draws per component.
[[nodiscard]] State ternary_spinodal(const Grid2D& grid, double amplitude, Rng& rng);

}  // namespace stagmesh::harness
