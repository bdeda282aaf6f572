#include "stagmesh/harness/analysis.hpp"

#include "stagmesh/errors.hpp"
#include "stagmesh/spectral/operators.hpp"

#include <cmath>
#include <vector>

namespace stagmesh::harness {

double roughness(const RealField& phi)
{
    spectral::require_finite(phi, "roughness");
    const double m = spectral::mean(phi);
    double acc = 0.0;
    for (double v : phi.values()) {
        acc += (v - m) * (v - m);
    }
    return std::sqrt(acc / static_cast<double>(phi.size()));
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size()) {
        throw ConfigError("linear_fit: x and y differ in length");
    }
    const std::size_t n = x.size();
    if (n < 3) {
        throw ConfigError("linear_fit: need at least 3 points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw ConfigError("linear_fit: x values are all equal");
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
    f.points = n;
    return f;
}

namespace {

LinearFit windowed(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi, bool log_y)
{
    if (t.size() != y.size()) {
        throw ConfigError("slope fit: t and y differ in length");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) {
            continue;
        }
        if (!(t[i] > 0.0) || (log_y && !(y[i] > 0.0))) {
            throw ConfigError("slope fit: values must be positive");
        }
        xs.push_back(log_y ? std::log(t[i]) : std::log10(t[i]));
        ys.push_back(log_y ? std::log(y[i]) : y[i]);
    }
    if (xs.size() < 3) {
        throw ConfigError("slope fit: fewer than 3 points in the window");
    }
    return linear_fit(xs, ys);
}

}  // namespace

LinearFit loglog_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi)
{
    return windowed(t, y, t_lo, t_hi, true);
}

double slope_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi)
{
    return loglog_fit(t, y, t_lo, t_hi).slope;
}

LinearFit semilog_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi)
{
    return windowed(t, y, t_lo, t_hi, false);
}

namespace {

int label_components(const RealField& f, double level, double sign)
{
    const int nx = f.grid().nx();
    const int ny = f.grid().ny();
    std::vector<char> seen(f.size(), 0);
    std::vector<int> stack;
    int count = 0;
    for (int start = 0; start < nx * ny; ++start) {
        if (seen[start] || sign * f[static_cast<std::size_t>(start)] < level) {
            continue;
        }
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int k = stack.back();
            stack.pop_back();
            const int i = k / ny;
            const int j = k % ny;
            const int nbr[4] = {((i + 1) % nx) * ny + j, ((i + nx - 1) % nx) * ny + j, i * ny + (j + 1) % ny,
                                i * ny + (j + ny - 1) % ny};
            for (int q : nbr) {
                if (!seen[q] && sign * f[static_cast<std::size_t>(q)] >= level) {
                    seen[q] = 1;
                    stack.push_back(q);
                }
            }
        }
    }
    return count;
}

}  // namespace

ClusterCount count_extremum_clusters(const RealField& f, double fraction)
{
    spectral::require_finite(f, "count_extremum_clusters");
    const double level = fraction * f.max_abs();
    if (!(level > 0.0)) {
        return {};
    }
    return {label_components(f, level, 1.0), label_components(f, level, -1.0)};
}

}  // namespace stagmesh::harness
