#pragma once

#include "stagmesh/spectral/field.hpp"

#include <utility>

namespace stagmesh::spectral {

/// Forward real-to-complex transform (unnormalized). Throws NonFiniteError on NaN/Inf input.
[[nodiscard]] SpectralField to_spectral(const RealField& f);
/// Inverse transform, normalized by 1/(nx*ny).
[[nodiscard]] RealField to_real(const SpectralField& f);

[[nodiscard]] SpectralField apply_symbol(const SpectralField& f, const DiagonalSymbol& s);

/// Spectral first derivatives. The Nyquist row/column of ik is zero.
[[nodiscard]] SpectralField ddx(const SpectralField& f);
[[nodiscard]] SpectralField ddy(const SpectralField& f);

[[nodiscard]] std::pair<RealField, RealField> gradient(const RealField& f);
[[nodiscard]] RealField divergence(const RealField& fx, const RealField& fy);
/// omega = d(u2)/dx - d(u1)/dy
[[nodiscard]] RealField vorticity(const RealField& u1, const RealField& u2);

/// Rectangle-rule quadrature (lx*ly/(nx*ny)) * sum(f), spectrally exact on periodic grids.
[[nodiscard]] double integral(const RealField& f);
[[nodiscard]] double inner(const RealField& f, const RealField& g);
[[nodiscard]] double l2_norm(const RealField& f);
[[nodiscard]] double mean(const RealField& f);

/// <f, g> evaluated from coefficients by Parseval; matches inner() of the inverse transforms.
[[nodiscard]] double spectral_inner(const SpectralField& f, const SpectralField& g);
/// sum_k w(k) s(k) |f(k)|^2 scaled like spectral_inner: the quadratic form <f, S f>.
[[nodiscard]] double spectral_quadratic(const SpectralField& f, const DiagonalSymbol& s);

/// Solves (a + b*s(k)) F(k) = rhs(k) mode by mode.
/// Throws SingularSolveError if a + b*s(k) <= 0 for any mode.
[[nodiscard]] SpectralField solve_shifted(double a, double b, const DiagonalSymbol& s, const SpectralField& rhs);

/// Zeroes every mode with |mode_x| > nx/3 or |mode_y| > ny/3.
[[nodiscard]] SpectralField dealias_two_thirds(const SpectralField& f);
/// Round-trip through the 2/3 filter in physical space.
[[nodiscard]] RealField dealias_two_thirds(const RealField& f);

/// Throws NonFiniteError naming `what` if f has a non-finite sample.
void require_finite(const RealField& f, const char* what);

}  // namespace stagmesh::spectral
