#include <doctest.h>

#include <cmath>
#include <string>

#include "spectherm/scenario.hpp"

using namespace spectherm;

namespace {

const std::string kDataDir = SPECTHERM_DATA_DIR;

std::string minimal_scenario() {
    return "[geometry]\n"
           "r_in_m = 0.004\n"
           "r_out_m = 0.032\n"
           "height_m = 0.198\n"
           "[props]\n"
           "rho_kg_m3 = 2118\n"
           "cp_J_kgK = 765\n"
           "k_r_W_mK = 0.66\n"
           "k_z_W_mK = 66\n"
           "[face.radial_inner]\n"
           "h_W_m2K = 0\n"
           "T_inf_degC = 18\n"
           "[face.radial_outer]\n"
           "h_W_m2K = 100\n"
           "T_inf_degC = 18\n"
           "[face.axial_low]\n"
           "h_W_m2K = 100\n"
           "T_inf_degC = 18\n"
           "[face.axial_high]\n"
           "h_W_m2K = 100\n"
           "T_inf_degC = 18\n"
           "[solver]\n"
           "n_r = 2\n"
           "n_z = 2\n";
}

} // namespace

TEST_CASE("bundled scenarios parse with their table values") {
    const Scenario c1 = parse_scenario_file(kDataDir + "/case1.scenario");
    CHECK(c1.geometry.r_in == 0.004);
    CHECK(c1.geometry.r_out == 0.032);
    CHECK(c1.geometry.height == 0.198);
    CHECK(c1.props.rho == 2118.0);
    CHECK(c1.props.cp == 765.0);
    CHECK(c1.props.k_r == 0.66);
    CHECK(c1.props.k_z == 66.0);
    CHECK(c1.faces.radial_inner.h == 0.0);
    CHECK(c1.faces.radial_outer.h == 100.0);
    CHECK(c1.n_r == 2);
    CHECK(c1.dt == 1.0);
    CHECK(c1.T_init == 18.0);
    CHECK(c1.profile == "pulse.profile");

    const Scenario c2 = parse_scenario_file(kDataDir + "/case2.scenario");
    CHECK(c2.faces.axial_low.h == 400.0);
    CHECK(c2.faces.axial_low.T_inf == 3.0);
    CHECK(c2.faces.radial_outer.h == 30.0);
    CHECK(c2.faces.axial_high.h == 30.0);
}

TEST_CASE("round trip through serialization is the identity") {
    Scenario s = parse_scenario_file(kDataDir + "/case2.scenario");
    CHECK(parse_scenario_text(serialize_scenario(s)) == s);
    // values that do not print exactly in decimal survive too
    s.dt = 0.1;
    s.T_init = 17.300000000000001;
    s.props.k_r = 2.0 / 3.0;
    CHECK(parse_scenario_text(serialize_scenario(s)) == s);
    CHECK(parse_scenario_text(serialize_scenario(s)).props.k_r == 2.0 / 3.0);
}

TEST_CASE("solver step and start temperature default sensibly") {
    const Scenario s = parse_scenario_text(minimal_scenario());
    CHECK(s.dt == 1.0);
    CHECK(s.T_init == 18.0);
    CHECK(s.profile.empty());
}

TEST_CASE("schema violations carry a line diagnostic") {
    std::string text = minimal_scenario() + "mystery_key = 4\n";
    try {
        parse_scenario_text(text);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("mystery_key") != std::string::npos);
        CHECK(msg.find("line") != std::string::npos);
    }

    text = minimal_scenario() + "n_r = 3\n";
    try {
        parse_scenario_text(text);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }

    text = minimal_scenario();
    text.replace(text.find("0.66"), 4, "fast");
    try {
        parse_scenario_text(text);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("not a number") != std::string::npos);
        CHECK(msg.find("fast") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_scenario_text("r_in_m = 1\n"), SchemaError); // key before section
    CHECK_THROWS_AS(parse_scenario_text("[geometry\n"), SchemaError);
}

TEST_CASE("physical validation happens after parsing") {
    std::string text = minimal_scenario();
    text.replace(text.find("k_r_W_mK = 0.66"), 15, "k_r_W_mK = 0");
    CHECK_THROWS_AS(parse_scenario_text(text), SchemaError);

    text = minimal_scenario();
    text.replace(text.find("r_in_m = 0.004"), 14, "r_in_m = 0");
    CHECK_THROWS_AS(parse_scenario_text(text), SchemaError);

    text = minimal_scenario() + "dt_s = -2\n";
    CHECK_THROWS_AS(parse_scenario_text(text), SchemaError);

    text = minimal_scenario();
    text.replace(text.find("n_r = 2"), 7, "n_r = 2.5");
    CHECK_THROWS_AS(parse_scenario_text(text), SchemaError);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text = "# leading comment\n\n" + minimal_scenario() +
                             "; trailing comment\ndt_s = 2 # inline\n";
    const Scenario s = parse_scenario_text(text);
    CHECK(s.dt == 2.0);
}

TEST_CASE("bundled pulse profile parses to the published train") {
    const Scenario c1 = parse_scenario_file(kDataDir + "/case1.scenario");
    const LoadProfile p = parse_profile_file(
        resolve_relative(kDataDir + "/case1.scenario", c1.profile), c1.geometry);
    REQUIRE(p.times.size() == 9);
    CHECK(p.times.front() == 0.0);
    CHECK(p.times.back() == 600.0);
    CHECK(p.q[0] == 2e5);
    CHECK(p.q[1] == 0.0);
    CHECK(p.value_at(125.0) == 2e5);
    CHECK(p.duration() == 600.0);
}

TEST_CASE("power-form profiles convert over the cell volume") {
    const CellGeometry geom{0.004, 0.032, 0.198};
    const LoadProfile p =
        parse_profile_text("t_s,P_W\n0,10\n100,0\n", geom);
    const double volume = M_PI * (0.032 * 0.032 - 0.004 * 0.004) * 0.198;
    CHECK(p.q[0] == doctest::Approx(10.0 / volume).epsilon(1e-14));
    CHECK(p.q[1] == 0.0);
}

TEST_CASE("profile schema violations are rejected") {
    const CellGeometry geom{0.004, 0.032, 0.198};
    CHECK_THROWS_AS(parse_profile_text("time,heat\n0,1\n", geom), SchemaError);
    CHECK_THROWS_AS(parse_profile_text("t_s,q_W_per_m3\n5,1\n10,0\n", geom), SchemaError);
    CHECK_THROWS_AS(parse_profile_text("t_s,q_W_per_m3\n0,1\n0,2\n", geom), SchemaError);
    CHECK_THROWS_AS(parse_profile_text("t_s,q_W_per_m3\n0,1\n", geom), SchemaError);
    CHECK_THROWS_AS(parse_profile_text("t_s,q_W_per_m3\n0\n", geom), SchemaError);
    CHECK_THROWS_AS(parse_profile_text("", geom), SchemaError);
}

TEST_CASE("relative profile references resolve against the scenario directory") {
    const std::string resolved = resolve_relative("/a/b/case.scenario", "pulse.profile");
    CHECK(resolved == "/a/b/pulse.profile");
    CHECK(resolve_relative("/a/b/case.scenario", "/abs/p.csv") == "/abs/p.csv");
}
