#pragma once

#include <cstddef>

namespace stagmesh::spectral {

/// Uniform periodic grid on [0,lx) x [0,ly).
///
/// Samples are stored x-major: sample (i, j) sits at index i*ny + j and
/// represents the point (i*lx/nx, j*ly/ny). Both counts must be even and >= 4.
class Grid2D {
public:
    Grid2D(int nx, int ny, double lx, double ly);

    [[nodiscard]] int nx() const noexcept { return nx_; }
    [[nodiscard]] int ny() const noexcept { return ny_; }
    [[nodiscard]] double lx() const noexcept { return lx_; }
    [[nodiscard]] double ly() const noexcept { return ly_; }

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(nx_) * ny_; }
    /// Number of stored complex columns in the half spectrum (ny/2 + 1).
    [[nodiscard]] int spectral_ny() const noexcept { return ny_ / 2 + 1; }
    [[nodiscard]] std::size_t spectral_size() const noexcept {
        return static_cast<std::size_t>(nx_) * spectral_ny();
    }

    [[nodiscard]] double dx() const noexcept { return lx_ / nx_; }
    [[nodiscard]] double dy() const noexcept { return ly_ / ny_; }
    [[nodiscard]] double area() const noexcept { return lx_ * ly_; }
    [[nodiscard]] double x(int i) const noexcept { return i * dx(); }
    [[nodiscard]] double y(int j) const noexcept { return j * dy(); }

    /// Signed integer mode number along x for spectral row i (in [-nx/2, nx/2)).
    [[nodiscard]] int mode_x(int i) const noexcept { return i <= nx_ / 2 ? (i == nx_ / 2 ? -nx_ / 2 : i) : i - nx_; }
    /// Mode number along y for spectral column j (0..ny/2).
    [[nodiscard]] int mode_y(int j) const noexcept { return j; }

    /// Angular wavenumber along x; the Nyquist row keeps its magnitude.
    [[nodiscard]] double kx(int i) const noexcept;
    [[nodiscard]] double ky(int j) const noexcept;
    /// Wavenumbers for odd (first) derivatives: Nyquist entries are zero.
    [[nodiscard]] double kx_deriv(int i) const noexcept;
    [[nodiscard]] double ky_deriv(int j) const noexcept;
    /// |k|^2 with full Nyquist magnitudes.
    [[nodiscard]] double k2(int i, int j) const noexcept { return kx(i) * kx(i) + ky(j) * ky(j); }

    friend bool operator==(const Grid2D& a, const Grid2D& b) noexcept {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.lx_ == b.lx_ && a.ly_ == b.ly_;
    }

private:
    int nx_;
    int ny_;
    double lx_;
    double ly_;
};

/// Throws GridMismatchError unless both grids are identical.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where);

}  // namespace stagmesh::spectral
