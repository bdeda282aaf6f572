#include "stagmesh/spectral/field.hpp"

#include "stagmesh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stagmesh::spectral {

RealField::RealField(const Grid2D& grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

RealField::RealField(const Grid2D& grid, std::vector<double> values) : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size()) {
        throw GridMismatchError("RealField: sample count does not match grid");
    }
}

RealField RealField::from_function(const Grid2D& grid, const std::function<double(double, double)>& f)
{
    RealField out(grid);
    for (int i = 0; i < grid.nx(); ++i) {
        const double x = grid.x(i);
        for (int j = 0; j < grid.ny(); ++j) {
            out(i, j) = f(x, grid.y(j));
        }
    }
    return out;
}

bool RealField::all_finite() const noexcept
{
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double RealField::max_abs() const noexcept
{
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double RealField::min() const noexcept
{
    return *std::min_element(values_.begin(), values_.end());
}

double RealField::max() const noexcept
{
    return *std::max_element(values_.begin(), values_.end());
}

RealField& RealField::operator+=(const RealField& other)
{
    require_same_grid(grid_, other.grid_, "RealField +=");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        values_[k] += other.values_[k];
    }
    return *this;
}

RealField& RealField::operator-=(const RealField& other)
{
    require_same_grid(grid_, other.grid_, "RealField -=");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        values_[k] -= other.values_[k];
    }
    return *this;
}

RealField& RealField::operator*=(double s) noexcept
{
    for (double& v : values_) {
        v *= s;
    }
    return *this;
}

RealField& RealField::axpy(double a, const RealField& other)
{
    require_same_grid(grid_, other.grid_, "RealField axpy");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        values_[k] += a * other.values_[k];
    }
    return *this;
}

RealField operator+(RealField a, const RealField& b)
{
    a += b;
    return a;
}

RealField operator-(RealField a, const RealField& b)
{
    a -= b;
    return a;
}

RealField operator*(double s, RealField a)
{
    a *= s;
    return a;
}

RealField lincomb(double a, const RealField& x, double b, const RealField& y)
{
    require_same_grid(x.grid(), y.grid(), "lincomb");
    RealField out(x.grid());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a * x[k] + b * y[k];
    }
    return out;
}

SpectralField::SpectralField(const Grid2D& grid) : grid_(grid), coeffs_(grid.spectral_size()) {}

SpectralField::SpectralField(const Grid2D& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != grid_.spectral_size()) {
        throw GridMismatchError("SpectralField: coefficient count does not match grid");
    }
}

SpectralField& SpectralField::operator+=(const SpectralField& other)
{
    require_same_grid(grid_, other.grid_, "SpectralField +=");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other)
{
    require_same_grid(grid_, other.grid_, "SpectralField -=");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

SpectralField& SpectralField::operator*=(double s) noexcept
{
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

SpectralField& SpectralField::axpy(double a, const SpectralField& other)
{
    require_same_grid(grid_, other.grid_, "SpectralField axpy");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += a * other.coeffs_[k];
    }
    return *this;
}

double SpectralField::symmetry_defect() const noexcept
{
    const int nx = grid_.nx();
    double defect = 0.0;
    for (int j : {0, grid_.ny() / 2}) {
        for (int i = 0; i < nx; ++i) {
            const int mirror = (nx - i) % nx;
            defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(mirror, j))));
        }
    }
    return defect;
}

SpectralField operator+(SpectralField a, const SpectralField& b)
{
    a += b;
    return a;
}

SpectralField operator-(SpectralField a, const SpectralField& b)
{
    a -= b;
    return a;
}

SpectralField operator*(double s, SpectralField a)
{
    a *= s;
    return a;
}

DiagonalSymbol::DiagonalSymbol(const Grid2D& grid, std::vector<double> symbol)
    : grid_(grid), symbol_(std::move(symbol))
{
    if (symbol_.size() != grid_.spectral_size()) {
        throw GridMismatchError("DiagonalSymbol: entry count does not match grid");
    }
    for (double v : symbol_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError("DiagonalSymbol: entries must be finite and non-negative");
        }
    }
}

DiagonalSymbol DiagonalSymbol::from_function(const Grid2D& grid, const std::function<double(double, double)>& f)
{
    std::vector<double> s(grid.spectral_size());
    const int nyh = grid.spectral_ny();
    for (int i = 0; i < grid.nx(); ++i) {
        for (int j = 0; j < nyh; ++j) {
            s[static_cast<std::size_t>(i) * nyh + j] = f(grid.kx(i), grid.ky(j));
        }
    }
    return DiagonalSymbol(grid, std::move(s));
}

DiagonalSymbol DiagonalSymbol::constant(const Grid2D& grid, double c)
{
    return DiagonalSymbol(grid, std::vector<double>(grid.spectral_size(), c));
}

DiagonalSymbol DiagonalSymbol::neg_laplacian(const Grid2D& grid)
{
    return from_function(grid, [](double kx, double ky) { return kx * kx + ky * ky; });
}

DiagonalSymbol DiagonalSymbol::bilaplacian(const Grid2D& grid)
{
    return from_function(grid, [](double kx, double ky) {
        const double k2 = kx * kx + ky * ky;
        return k2 * k2;
    });
}

double DiagonalSymbol::max() const noexcept
{
    return *std::max_element(symbol_.begin(), symbol_.end());
}

DiagonalSymbol DiagonalSymbol::scaled(double s) const
{
    std::vector<double> out(symbol_);
    for (double& v : out) {
        v *= s;
    }
    return DiagonalSymbol(grid_, std::move(out));
}

}  // namespace stagmesh::spectral
