#pragma once

#include "stagmesh/spectral/field.hpp"

#include <vector>

namespace stagmesh::harness {

using spectral::RealField;

/// Standard deviation of the field over the domain: sqrt(mean((phi - mean phi)^2)).
[[nodiscard]] double roughness(const RealField& phi);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
};

/// Least-squares line through (x, y). Throws ConfigError with fewer than 3 points.
[[nodiscard]] LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Slope of log y against log t over t in [t_lo, t_hi].
/// Throws ConfigError if fewer than 3 points fall in the window or a value is not positive.
[[nodiscard]] LinearFit loglog_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi);
[[nodiscard]] double slope_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi);

/// Fit of y against log10 t over t in [t_lo, t_hi].
[[nodiscard]] LinearFit semilog_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi);

struct ClusterCount {
    int positive = 0;
    int negative = 0;
};

/// Connected components (4-neighbour, periodic wrap) of {f >= level} and {f <= -level},
/// with level = fraction * max|f|.
[[nodiscard]] ClusterCount count_extremum_clusters(const RealField& f, double fraction = 0.5);

}  // namespace stagmesh::harness
