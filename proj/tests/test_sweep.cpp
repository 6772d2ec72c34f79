#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "trio/sweep.hpp"

namespace sweep = trio::sweep;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("parse_states") {
    const auto st = sweep::parse_states("1,0,0;0,2,0;1,1,1");
    REQUIRE(st.size() == 3);
    CHECK(st[0] == trio::FockState{1, 0, 0});
    CHECK(st[1] == trio::FockState{0, 2, 0});
    CHECK(st[2] == trio::FockState{1, 1, 1});
    CHECK_THROWS_AS((void)sweep::parse_states("1,0"), std::invalid_argument);
    CHECK_THROWS_AS((void)sweep::parse_states("1,-1,0"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)sweep::parse_states("a,b,c"),
                    std::invalid_argument);
}

TEST_CASE("presets") {
    sweep::SweepConfig cfg;
    CHECK(!sweep::apply_preset("fig99", cfg));
    CHECK(sweep::apply_preset("fig2", cfg));
    CHECK(cfg.states.size() == 12);
    CHECK(sweep::apply_preset("fig10", cfg));
    CHECK(cfg.states.size() == 3);
    CHECK(sweep::preset_names().size() == 9);
}

TEST_CASE("CSV header and row count") {
    sweep::SweepConfig cfg;
    cfg.states = {{0, 0, 0}, {1, 0, 0}};
    cfg.theta_min = -0.5;
    cfg.theta_max = 0.5;
    cfg.samples = 5;
    std::ostringstream os;
    sweep::run_sweep(cfg, os, 2);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] ==
          "theta,mu_theta,n,m,l,S_Lx,S_Ly,S_Lz,M_x,M_y,M_z,flag");
    // ground-state rows carry zero entropies
    CHECK(lines[1].find(",0,0,0,0,0,0,0,0,0,") != std::string::npos);
}

TEST_CASE("deterministic output independent of thread count") {
    sweep::SweepConfig cfg;
    cfg.states = {{1, 1, 0}, {0, 1, 1}};
    cfg.samples = 17;
    std::ostringstream a, b;
    sweep::run_sweep(cfg, a, 1);
    sweep::run_sweep(cfg, b, 4);
    CHECK(a.str() == b.str());
    std::ostringstream c;
    sweep::run_sweep(cfg, c, 4);
    CHECK(b.str() == c.str());
}

TEST_CASE("out-of-domain rows are flagged with empty fields") {
    sweep::SweepConfig cfg;
    cfg.states = {{1, 0, 0}};
    cfg.theta_min = 0.9;
    cfg.theta_max = 1.1; // tan > sqrt(2) beyond ~0.9553
    cfg.samples = 5;
    std::ostringstream os;
    sweep::run_sweep(cfg, os, 1);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 6);
    bool saw_domain = false, saw_value = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].find(",,,,,,domain") != std::string::npos) {
            saw_domain = true;
        } else {
            saw_value = true;
            CHECK(lines[i].find("nan") == std::string::npos);
        }
    }
    CHECK(saw_domain);
    CHECK(saw_value);
}

TEST_CASE("pole samples are evaluated and flagged") {
    sweep::SweepConfig cfg;
    cfg.states = {{1, 0, 0}};
    const double pole_theta = 0.78539816339744831; // pi/4, mu_theta = 1
    cfg.theta_min = pole_theta - 1e-9;
    cfg.theta_max = pole_theta + 1e-9;
    cfg.samples = 3;
    std::ostringstream os;
    sweep::run_sweep(cfg, os, 1);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(lines[i].find("pole_limit") != std::string::npos);
        CHECK(lines[i].find(",,") == std::string::npos); // values present
    }
}

TEST_CASE("invalid config rejected") {
    sweep::SweepConfig cfg;
    std::ostringstream os;
    CHECK_THROWS_AS(sweep::run_sweep(cfg, os), std::invalid_argument);
    cfg.states = {{1, 0, 0}};
    cfg.samples = 1;
    CHECK_THROWS_AS(sweep::run_sweep(cfg, os), std::invalid_argument);
}
