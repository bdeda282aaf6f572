#include "stagmesh/spectral/grid.hpp"

#include "stagmesh/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace stagmesh::spectral {

Grid2D::Grid2D(int nx, int ny, double lx, double ly) : nx_(nx), ny_(ny), lx_(lx), ly_(ly)
{
    if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0) {
        std::ostringstream os;
        os << "grid sizes must be even and >= 4, got " << nx << "x" << ny;
        throw ConfigError(os.str());
    }
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
        throw ConfigError("domain lengths must be positive and finite");
    }
}

double Grid2D::kx(int i) const noexcept
{
    return 2.0 * std::numbers::pi / lx_ * mode_x(i);
}

double Grid2D::ky(int j) const noexcept
{
    return 2.0 * std::numbers::pi / ly_ * mode_y(j);
}

double Grid2D::kx_deriv(int i) const noexcept
{
    return i == nx_ / 2 ? 0.0 : kx(i);
}

double Grid2D::ky_deriv(int j) const noexcept
{
    return j == ny_ / 2 ? 0.0 : ky(j);
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where)
{
    if (!(a == b)) {
        std::ostringstream os;
        os << where << ": grid mismatch (" << a.nx() << "x" << a.ny() << " on " << a.lx() << "x" << a.ly()
           << " vs " << b.nx() << "x" << b.ny() << " on " << b.lx() << "x" << b.ly() << ")";
        throw GridMismatchError(os.str());
    }
}

}  // namespace stagmesh::spectral
