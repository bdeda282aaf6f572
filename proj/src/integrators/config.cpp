#include "stagmesh/integrators/config.hpp"

#include "stagmesh/errors.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace stagmesh::integrators {
namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::pair<std::string_view, E>, N>& table, const char* what)
{
    for (const auto& [name, value] : table) {
        if (name == s) {
            return value;
        }
    }
    std::string msg = std::string("unknown ") + what + " '" + std::string(s) + "' (expected";
    for (const auto& [name, value] : table) {
        msg += " ";
        msg += name;
    }
    throw ConfigError(msg + ")");
}

constexpr std::array<std::pair<std::string_view, Variant>, 2> variants{{{"log", Variant::log},
                                                                        {"arctan", Variant::arctan}}};
constexpr std::array<std::pair<std::string_view, ChiKind>, 4> chis{
    {{"chi1", ChiKind::chi1}, {"chi2", ChiKind::chi2}, {"chi3", ChiKind::chi3}, {"chi4", ChiKind::chi4}}};
constexpr std::array<std::pair<std::string_view, EtaPlacement>, 2> placements{
    {{"inside_g", EtaPlacement::inside_g}, {"outside_g", EtaPlacement::outside_g}}};
constexpr std::array<std::pair<std::string_view, Scheme>, 4> schemes{{{"sm", Scheme::sm},
                                                                      {"swapped", Scheme::swapped},
                                                                      {"cn_imex", Scheme::cn_imex},
                                                                      {"gsav", Scheme::gsav}}};
constexpr std::array<std::pair<std::string_view, Bdf2Eta>, 2> bdf2_etas{{{"linear", Bdf2Eta::linear},
                                                                         {"quadratic", Bdf2Eta::quadratic}}};

template <typename E, std::size_t N>
std::string_view name_of(E v, const std::array<std::pair<std::string_view, E>, N>& table) noexcept
{
    for (const auto& [name, value] : table) {
        if (value == v) {
            return name;
        }
    }
    return "?";
}

bool finite_positive(double x)
{
    return std::isfinite(x) && x > 0.0;
}

}  // namespace

void SMConfig::validate() const
{
    if (!finite_positive(dt)) {
        throw ConfigError("scheme.dt must be positive and finite");
    }
    if (!finite_positive(theta)) {
        throw ConfigError("scheme.theta must be positive and finite");
    }
    if (c0 && (!std::isfinite(*c0) || *c0 < 0.0)) {
        throw ConfigError("scheme.c0 must be non-negative and finite");
    }
    if (!std::isfinite(s_stab) || s_stab < 0.0) {
        throw ConfigError("scheme.s_stab must be non-negative and finite");
    }
    if (!finite_positive(chi_base)) {
        throw ConfigError("scheme.chi_base must be positive and finite");
    }
    if (c_star && !std::isfinite(*c_star)) {
        throw ConfigError("scheme.c_star must be finite");
    }
    if (c_star && variant != Variant::arctan) {
        throw ConfigError("scheme.c_star applies to the arctan variant only");
    }
    if (bdf_order < 1 || bdf_order > 4) {
        throw ConfigError("scheme.bdf_order must be 1, 2, 3 or 4");
    }
    if (bdf_order > 1 && scheme != Scheme::sm) {
        throw ConfigError("scheme.bdf_order > 1 requires scheme 'sm'");
    }
    if (cn_modified && scheme == Scheme::swapped) {
        throw ConfigError("scheme.cn_modified is not available for the swapped scheme");
    }
    if (bdf_order > 1 && cn_modified) {
        throw ConfigError("scheme.cn_modified cannot be combined with BDF");
    }
}

std::string_view to_string(Variant v) noexcept { return name_of(v, variants); }
std::string_view to_string(ChiKind c) noexcept { return name_of(c, chis); }
std::string_view to_string(EtaPlacement p) noexcept { return name_of(p, placements); }
std::string_view to_string(Scheme s) noexcept { return name_of(s, schemes); }
std::string_view to_string(Bdf2Eta e) noexcept { return name_of(e, bdf2_etas); }

Variant parse_variant(std::string_view s) { return parse_enum(s, variants, "variant"); }
ChiKind parse_chi(std::string_view s) { return parse_enum(s, chis, "chi kind"); }
EtaPlacement parse_placement(std::string_view s) { return parse_enum(s, placements, "eta placement"); }
Scheme parse_scheme(std::string_view s) { return parse_enum(s, schemes, "scheme"); }
Bdf2Eta parse_bdf2_eta(std::string_view s) { return parse_enum(s, bdf2_etas, "bdf2 eta form"); }

}  // namespace stagmesh::integrators
