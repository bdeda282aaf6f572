#include "stagmesh/models/state.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <cmath>

namespace stagmesh::models {
namespace {

void require_same_shape(std::size_t a, std::size_t b, const char* where)
{
    if (a != b) {
        throw GridMismatchError(std::string(where) + ": component count mismatch");
    }
}

}  // namespace

State lincomb(double a, const State& x, double b, const State& y)
{
    require_same_shape(x.size(), y.size(), "lincomb");
    State out;
    out.reserve(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) {
        out.push_back(spectral::lincomb(a, x[c], b, y[c]));
    }
    return out;
}

State scaled(double s, State x)
{
    for (auto& f : x) {
        f *= s;
    }
    return x;
}

void axpy(State& x, double a, const State& y)
{
    require_same_shape(x.size(), y.size(), "axpy");
    for (std::size_t c = 0; c < x.size(); ++c) {
        x[c].axpy(a, y[c]);
    }
}

State zeros_like(const State& x)
{
    State out;
    out.reserve(x.size());
    for (const auto& f : x) {
        out.emplace_back(f.grid());
    }
    return out;
}

double inner(const State& x, const State& y)
{
    require_same_shape(x.size(), y.size(), "inner");
    double sum = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        sum += spectral::inner(x[c], y[c]);
    }
    return sum;
}

double l2_norm(const State& x)
{
    return std::sqrt(inner(x, x));
}

bool all_finite(const State& x) noexcept
{
    for (const auto& f : x) {
        if (!f.all_finite()) {
            return false;
        }
    }
    return true;
}

SpectralState to_spectral(const State& x)
{
    SpectralState out;
    out.reserve(x.size());
    for (const auto& f : x) {
        out.push_back(spectral::to_spectral(f));
    }
    return out;
}

State to_real(const SpectralState& x)
{
    State out;
    out.reserve(x.size());
    for (const auto& f : x) {
        out.push_back(spectral::to_real(f));
    }
    return out;
}

SpectralState lincomb(double a, const SpectralState& x, double b, const SpectralState& y)
{
    require_same_shape(x.size(), y.size(), "lincomb");
    SpectralState out;
    out.reserve(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) {
        SpectralField f = a * x[c];
        f.axpy(b, y[c]);
        out.push_back(std::move(f));
    }
    return out;
}

void axpy(SpectralState& x, double a, const SpectralState& y)
{
    require_same_shape(x.size(), y.size(), "axpy");
    for (std::size_t c = 0; c < x.size(); ++c) {
        x[c].axpy(a, y[c]);
    }
}

void scale(SpectralState& x, double s)
{
    for (auto& f : x) {
        f *= s;
    }
}

}  // namespace stagmesh::models
