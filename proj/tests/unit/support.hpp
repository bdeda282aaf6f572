#pragma once

#include "stagmesh/spectral/field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace test_support {

using stagmesh::spectral::Grid2D;
using stagmesh::spectral::RealField;

inline constexpr double pi = std::numbers::pi;

inline Grid2D periodic_2pi(int n) { return Grid2D(n, n, 2.0 * pi, 2.0 * pi); }

/// Random trigonometric polynomial with |mode| <= max_mode in each direction.
inline RealField random_trig(const Grid2D& g, int max_mode, unsigned seed, double amplitude = 1.0)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    RealField f(g);
    for (int p = -max_mode; p <= max_mode; ++p) {
        for (int q = 0; q <= max_mode; ++q) {
            const double a = d(gen) * amplitude / (1.0 + p * p + q * q);
            const double b = d(gen) * amplitude / (1.0 + p * p + q * q);
            for (int i = 0; i < g.nx(); ++i) {
                for (int j = 0; j < g.ny(); ++j) {
                    const double arg = 2.0 * pi * (p * g.x(i) / g.lx() + q * g.y(j) / g.ly());
                    f(i, j) += a * std::cos(arg) + b * std::sin(arg);
                }
            }
        }
    }
    return f;
}

inline double max_diff(const RealField& a, const RealField& b)
{
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

}  // namespace test_support
