#include "stagmesh/spectral/operators.hpp"

#include "stagmesh/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace stagmesh::spectral {
namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
class PlanCache {
public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    fftw_plan forward(int nx, int ny) { return get(nx, ny, true); }
    fftw_plan backward(int nx, int ny) { return get(nx, ny, false); }

    PlanCache(const PlanCache&) = delete;
    PlanCache& operator=(const PlanCache&) = delete;

    ~PlanCache()
    {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

private:
    PlanCache() = default;

    fftw_plan get(int nx, int ny, bool fwd)
    {
        std::lock_guard lock(mutex_);
        const auto key = std::make_tuple(nx, ny, fwd);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        std::vector<double> real(static_cast<std::size_t>(nx) * ny);
        std::vector<Complex> cplx(static_cast<std::size_t>(nx) * (ny / 2 + 1));
        auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        fftw_plan plan = fwd ? fftw_plan_dft_r2c_2d(nx, ny, real.data(), c, flags)
                             : fftw_plan_dft_c2r_2d(nx, ny, c, real.data(), flags);
        if (plan == nullptr) {
            throw Error("FFTW failed to create a plan");
        }
        plans_.emplace(key, plan);
        return plan;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, bool>, fftw_plan> plans_;
};

double column_weight(int j, int ny) noexcept
{
    return (j == 0 || j == ny / 2) ? 1.0 : 2.0;
}

}  // namespace

void require_finite(const RealField& f, const char* what)
{
    if (!f.all_finite()) {
        std::ostringstream os;
        os << what << ": field contains non-finite samples";
        throw NonFiniteError(os.str());
    }
}

SpectralField to_spectral(const RealField& f)
{
    require_finite(f, "to_spectral");
    const Grid2D& g = f.grid();
    SpectralField out(g);
    fftw_plan plan = PlanCache::instance().forward(g.nx(), g.ny());
    // FFTW's r2c reads the input without modifying it.
    fftw_execute_dft_r2c(plan, const_cast<double*>(f.values().data()),
                         reinterpret_cast<fftw_complex*>(out.coeffs().data()));
    return out;
}

RealField to_real(const SpectralField& f)
{
    const Grid2D& g = f.grid();
    std::vector<Complex> scratch(f.coeffs().begin(), f.coeffs().end());
    RealField out(g);
    fftw_plan plan = PlanCache::instance().backward(g.nx(), g.ny());
    fftw_execute_dft_c2r(plan, reinterpret_cast<fftw_complex*>(scratch.data()), out.values().data());
    out *= 1.0 / static_cast<double>(g.size());
    return out;
}

SpectralField apply_symbol(const SpectralField& f, const DiagonalSymbol& s)
{
    require_same_grid(f.grid(), s.grid(), "apply_symbol");
    SpectralField out(f);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] *= s[k];
    }
    return out;
}

SpectralField ddx(const SpectralField& f)
{
    const Grid2D& g = f.grid();
    SpectralField out(g);
    const int nyh = g.spectral_ny();
    for (int i = 0; i < g.nx(); ++i) {
        const Complex ik(0.0, g.kx_deriv(i));
        for (int j = 0; j < nyh; ++j) {
            out(i, j) = ik * f(i, j);
        }
    }
    return out;
}

SpectralField ddy(const SpectralField& f)
{
    const Grid2D& g = f.grid();
    SpectralField out(g);
    const int nyh = g.spectral_ny();
    for (int i = 0; i < g.nx(); ++i) {
        for (int j = 0; j < nyh; ++j) {
            out(i, j) = Complex(0.0, g.ky_deriv(j)) * f(i, j);
        }
    }
    return out;
}

std::pair<RealField, RealField> gradient(const RealField& f)
{
    const SpectralField fh = to_spectral(f);
    return {to_real(ddx(fh)), to_real(ddy(fh))};
}

RealField divergence(const RealField& fx, const RealField& fy)
{
    require_same_grid(fx.grid(), fy.grid(), "divergence");
    SpectralField d = ddx(to_spectral(fx));
    d += ddy(to_spectral(fy));
    return to_real(d);
}

RealField vorticity(const RealField& u1, const RealField& u2)
{
    require_same_grid(u1.grid(), u2.grid(), "vorticity");
    SpectralField w = ddx(to_spectral(u2));
    w -= ddy(to_spectral(u1));
    return to_real(w);
}

double integral(const RealField& f)
{
    double sum = 0.0;
    for (double v : f.values()) {
        sum += v;
    }
    const Grid2D& g = f.grid();
    return g.area() / static_cast<double>(g.size()) * sum;
}

double inner(const RealField& f, const RealField& g)
{
    require_same_grid(f.grid(), g.grid(), "inner");
    double sum = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        sum += f[k] * g[k];
    }
    return f.grid().area() / static_cast<double>(f.grid().size()) * sum;
}

double l2_norm(const RealField& f)
{
    return std::sqrt(inner(f, f));
}

double mean(const RealField& f)
{
    return integral(f) / f.grid().area();
}

double spectral_inner(const SpectralField& f, const SpectralField& g)
{
    require_same_grid(f.grid(), g.grid(), "spectral_inner");
    const Grid2D& grid = f.grid();
    const int nyh = grid.spectral_ny();
    double sum = 0.0;
    for (int i = 0; i < grid.nx(); ++i) {
        for (int j = 0; j < nyh; ++j) {
            const Complex a = f(i, j);
            const Complex b = g(i, j);
            sum += column_weight(j, grid.ny()) * (a.real() * b.real() + a.imag() * b.imag());
        }
    }
    const double n = static_cast<double>(grid.size());
    return grid.area() / (n * n) * sum;
}

double spectral_quadratic(const SpectralField& f, const DiagonalSymbol& s)
{
    require_same_grid(f.grid(), s.grid(), "spectral_quadratic");
    const Grid2D& grid = f.grid();
    const int nyh = grid.spectral_ny();
    double sum = 0.0;
    for (int i = 0; i < grid.nx(); ++i) {
        for (int j = 0; j < nyh; ++j) {
            sum += column_weight(j, grid.ny()) * s(i, j) * std::norm(f(i, j));
        }
    }
    const double n = static_cast<double>(grid.size());
    return grid.area() / (n * n) * sum;
}

SpectralField solve_shifted(double a, double b, const DiagonalSymbol& s, const SpectralField& rhs)
{
    require_same_grid(s.grid(), rhs.grid(), "solve_shifted");
    SpectralField out(rhs.grid());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double d = a + b * s[k];
        if (!(d > 0.0)) {
            std::ostringstream os;
            os << "solve_shifted: singular mode " << k << " (a + b*s = " << d << ")";
            throw SingularSolveError(os.str());
        }
        out[k] = rhs[k] / d;
    }
    return out;
}

SpectralField dealias_two_thirds(const SpectralField& f)
{
    const Grid2D& g = f.grid();
    SpectralField out(f);
    const int nyh = g.spectral_ny();
    for (int i = 0; i < g.nx(); ++i) {
        const bool cut_x = 3 * std::abs(g.mode_x(i)) > g.nx();
        for (int j = 0; j < nyh; ++j) {
            if (cut_x || 3 * g.mode_y(j) > g.ny()) {
                out(i, j) = 0.0;
            }
        }
    }
    return out;
}

RealField dealias_two_thirds(const RealField& f)
{
    return to_real(dealias_two_thirds(to_spectral(f)));
}

}  // namespace stagmesh::spectral
