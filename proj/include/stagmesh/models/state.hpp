#pragma once

#include "stagmesh/spectral/field.hpp"

#include <vector>

namespace stagmesh::models {

using spectral::DiagonalSymbol;
using spectral::Grid2D;
using spectral::RealField;
using spectral::SpectralField;

/// Model state: one RealField per component (u; (u1,u2); (phi1,phi2)).
using State = std::vector<RealField>;
using SpectralState = std::vector<SpectralField>;

[[nodiscard]] State lincomb(double a, const State& x, double b, const State& y);
[[nodiscard]] State scaled(double s, State x);
/// x += a*y
void axpy(State& x, double a, const State& y);
[[nodiscard]] State zeros_like(const State& x);

[[nodiscard]] double inner(const State& x, const State& y);
/// sqrt(sum over components of ||x_c||^2)
[[nodiscard]] double l2_norm(const State& x);
[[nodiscard]] bool all_finite(const State& x) noexcept;

[[nodiscard]] SpectralState to_spectral(const State& x);
[[nodiscard]] State to_real(const SpectralState& x);

[[nodiscard]] SpectralState lincomb(double a, const SpectralState& x, double b, const SpectralState& y);
void axpy(SpectralState& x, double a, const SpectralState& y);
void scale(SpectralState& x, double s);

}  // namespace stagmesh::models
