#include "stagmesh/errors.hpp"
#include "stagmesh/integrators/config.hpp"

#include <gtest/gtest.h>

using namespace stagmesh;
using namespace stagmesh::integrators;

TEST(SMConfig, DefaultsAreValid)
{
    const SMConfig c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.theta, 1.0);
    EXPECT_EQ(c.s_stab, 0.0);
    EXPECT_EQ(c.bdf_order, 1);
    EXPECT_FALSE(c.c0.has_value());
}

TEST(SMConfig, RejectsOutOfRangeFields)
{
    auto bad = [](auto mutate) {
        SMConfig c;
        mutate(c);
        EXPECT_THROW(c.validate(), ConfigError);
    };
    bad([](SMConfig& c) { c.dt = 0.0; });
    bad([](SMConfig& c) { c.dt = -1e-3; });
    bad([](SMConfig& c) { c.dt = std::numeric_limits<double>::infinity(); });
    bad([](SMConfig& c) { c.theta = 0.0; });
    bad([](SMConfig& c) { c.c0 = -1.0; });
    bad([](SMConfig& c) { c.s_stab = -0.5; });
    bad([](SMConfig& c) { c.chi_base = 0.0; });
    bad([](SMConfig& c) { c.bdf_order = 5; });
    bad([](SMConfig& c) { c.bdf_order = 0; });
    bad([](SMConfig& c) { c.c_star = 0.1; });
    bad([](SMConfig& c) {
        c.bdf_order = 2;
        c.scheme = Scheme::gsav;
    });
    bad([](SMConfig& c) {
        c.cn_modified = true;
        c.scheme = Scheme::swapped;
    });
}

TEST(SMConfig, ArctanAcceptsClamp)
{
    SMConfig c;
    c.variant = Variant::arctan;
    c.c_star = -0.25;
    EXPECT_NO_THROW(c.validate());
}

TEST(SMConfig, ErrorNamesField)
{
    SMConfig c;
    c.theta = -2.0;
    try {
        c.validate();
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("theta"), std::string::npos);
    }
}

TEST(EnumNames, RoundTrip)
{
    for (auto v : {Variant::log, Variant::arctan}) {
        EXPECT_EQ(parse_variant(to_string(v)), v);
    }
    for (auto v : {ChiKind::chi1, ChiKind::chi2, ChiKind::chi3, ChiKind::chi4}) {
        EXPECT_EQ(parse_chi(to_string(v)), v);
    }
    for (auto v : {EtaPlacement::inside_g, EtaPlacement::outside_g}) {
        EXPECT_EQ(parse_placement(to_string(v)), v);
    }
    for (auto v : {Scheme::sm, Scheme::swapped, Scheme::cn_imex, Scheme::gsav}) {
        EXPECT_EQ(parse_scheme(to_string(v)), v);
    }
    for (auto v : {Bdf2Eta::linear, Bdf2Eta::quadratic}) {
        EXPECT_EQ(parse_bdf2_eta(to_string(v)), v);
    }
}

TEST(EnumNames, UnknownNameThrows)
{
    EXPECT_THROW((void)parse_variant("sqrt"), ConfigError);
    EXPECT_THROW((void)parse_chi("chi5"), ConfigError);
    EXPECT_THROW((void)parse_scheme(""), ConfigError);
}
