#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace stagmesh::integrators {

/// Auxiliary-variable law: ln V (V = theta*E_tot + C0 > 0) or arctan V (V may be negative).
enum class Variant { log, arctan };
enum class ChiKind { chi1, chi2, chi3, chi4 };
/// g(eta*u_bar) or eta*g(u_bar).
enum class EtaPlacement { inside_g, outside_g };

/// sm: u on integer levels, V on half levels (CN-SM, or BDFk-SM when bdf_order > 1).
/// swapped: u on half levels, V on integer levels.
/// cn_imex: plain semi-implicit CN with eta = 1 and no V.
/// gsav: CN-IMEX predictor rescaled by a backward-Euler energy variable r.
enum class Scheme { sm, swapped, cn_imex, gsav };
/// BDF2 correction: eta = chi (linear) or eta = 1 - (1 - chi)^2 (quadratic, as for BDF3/4).
enum class Bdf2Eta { linear, quadratic };

struct SMConfig {
    Scheme scheme = Scheme::sm;
    Variant variant = Variant::log;
    ChiKind chi = ChiKind::chi1;
    /// Base x of chi2 = x^(V - E).
    double chi_base = 2.718281828459045;
    double theta = 1.0;
    /// Energy shift; unset means the model default.
    std::optional<double> c0;
    double s_stab = 0.0;
    /// Arctan variant only: lower clamp level C*.
    std::optional<double> c_star;
    EtaPlacement placement = EtaPlacement::inside_g;
    double dt = 1e-3;
    /// 1 is Crank-Nicolson; 2..4 select BDFk-SM.
    int bdf_order = 1;
    /// Implicit part A(3/4 u^{n+1} + 1/4 u^{n-1}) instead of A(u^{n+1} + u^n)/2.
    bool cn_modified = false;
    Bdf2Eta bdf2_eta = Bdf2Eta::quadratic;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
[[nodiscard]] std::string_view to_string(ChiKind c) noexcept;
[[nodiscard]] std::string_view to_string(EtaPlacement p) noexcept;
[[nodiscard]] std::string_view to_string(Scheme s) noexcept;
[[nodiscard]] std::string_view to_string(Bdf2Eta e) noexcept;

// Parsers throw ConfigError on unknown names.
[[nodiscard]] Variant parse_variant(std::string_view s);
[[nodiscard]] ChiKind parse_chi(std::string_view s);
[[nodiscard]] EtaPlacement parse_placement(std::string_view s);
[[nodiscard]] Scheme parse_scheme(std::string_view s);
[[nodiscard]] Bdf2Eta parse_bdf2_eta(std::string_view s);

}  // namespace stagmesh::integrators
