#pragma once

#include "stagmesh/errors.hpp"
#include "stagmesh/models/state.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <cmath>
#include <string>

namespace stagmesh::models::detail {

inline void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(what) + " must be positive and finite");
    }
}

inline SpectralState diagonal_solve(double a, double b, const DiagonalSymbol& s, const SpectralState& rhs)
{
    SpectralState out;
    out.reserve(rhs.size());
    for (const auto& r : rhs) {
        out.push_back(spectral::solve_shifted(a, b, s, r));
    }
    return out;
}

inline SpectralState diagonal_apply(const DiagonalSymbol& s, const SpectralState& u)
{
    SpectralState out;
    out.reserve(u.size());
    for (const auto& f : u) {
        out.push_back(spectral::apply_symbol(f, s));
    }
    return out;
}

}  // namespace stagmesh::models::detail
