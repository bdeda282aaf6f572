#pragma once

#include "stagmesh/spectral/grid.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace stagmesh::spectral {

using Complex = std::complex<double>;

/// Real samples of a scalar field on a periodic grid.
class RealField {
public:
    explicit RealField(const Grid2D& grid, double fill = 0.0);
    RealField(const Grid2D& grid, std::vector<double> values);

    /// Samples f(x_i, y_j) on the grid.
    static RealField from_function(const Grid2D& grid, const std::function<double(double, double)>& f);

    [[nodiscard]] const Grid2D& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<double> values() noexcept { return values_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    double& operator()(int i, int j) noexcept { return values_[static_cast<std::size_t>(i) * grid_.ny() + j]; }
    double operator()(int i, int j) const noexcept { return values_[static_cast<std::size_t>(i) * grid_.ny() + j]; }
    double& operator[](std::size_t k) noexcept { return values_[k]; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }

    [[nodiscard]] bool all_finite() const noexcept;
    [[nodiscard]] double max_abs() const noexcept;
    [[nodiscard]] double min() const noexcept;
    [[nodiscard]] double max() const noexcept;

    RealField& operator+=(const RealField& other);
    RealField& operator-=(const RealField& other);
    RealField& operator*=(double s) noexcept;
    /// this += a * other
    RealField& axpy(double a, const RealField& other);

private:
    Grid2D grid_;
    std::vector<double> values_;
};

RealField operator+(RealField a, const RealField& b);
RealField operator-(RealField a, const RealField& b);
RealField operator*(double s, RealField a);
/// a*x + b*y
RealField lincomb(double a, const RealField& x, double b, const RealField& y);

/// Half-spectrum Fourier coefficients (nx rows by ny/2+1 columns) of a real field.
///
/// The forward transform is unnormalized: a constant field c has coefficient
/// c*nx*ny at mode (0,0). The inverse transform divides by nx*ny.
class SpectralField {
public:
    explicit SpectralField(const Grid2D& grid);
    SpectralField(const Grid2D& grid, std::vector<Complex> coeffs);

    [[nodiscard]] const Grid2D& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<Complex> coeffs() noexcept { return coeffs_; }
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    Complex& operator()(int i, int j) noexcept { return coeffs_[static_cast<std::size_t>(i) * grid_.spectral_ny() + j]; }
    Complex operator()(int i, int j) const noexcept { return coeffs_[static_cast<std::size_t>(i) * grid_.spectral_ny() + j]; }
    Complex& operator[](std::size_t k) noexcept { return coeffs_[k]; }
    Complex operator[](std::size_t k) const noexcept { return coeffs_[k]; }

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double s) noexcept;
    SpectralField& axpy(double a, const SpectralField& other);

    /// Largest violation of conjugate symmetry on the self-paired columns (j = 0, ny/2).
    [[nodiscard]] double symmetry_defect() const noexcept;

private:
    Grid2D grid_;
    std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Per-mode real symbol a(k) of a diagonal constant-coefficient operator.
class DiagonalSymbol {
public:
    DiagonalSymbol(const Grid2D& grid, std::vector<double> symbol);

    static DiagonalSymbol from_function(const Grid2D& grid, const std::function<double(double, double)>& f);
    static DiagonalSymbol constant(const Grid2D& grid, double c);
    /// |k|^2, the symbol of -Laplacian.
    static DiagonalSymbol neg_laplacian(const Grid2D& grid);
    /// |k|^4, the symbol of the bi-Laplacian.
    static DiagonalSymbol bilaplacian(const Grid2D& grid);

    [[nodiscard]] const Grid2D& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return symbol_; }
    double operator[](std::size_t k) const noexcept { return symbol_[k]; }
    double operator()(int i, int j) const noexcept { return symbol_[static_cast<std::size_t>(i) * grid_.spectral_ny() + j]; }
    [[nodiscard]] double max() const noexcept;

    [[nodiscard]] DiagonalSymbol scaled(double s) const;

private:
    Grid2D grid_;
    std::vector<double> symbol_;
};

}  // namespace stagmesh::spectral
