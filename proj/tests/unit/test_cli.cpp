#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <string>

#include "kgring/cli.hpp"
#include "kgring/radial.hpp"

using namespace kgring;
using namespace kgring::cli;

namespace {

RunConfig kratzer_cfg() {
    RunConfig cfg;
    cfg.mu = 1.0;
    cfg.a0 = 0.25;
    cfg.r0 = 2.0;
    return cfg;
}

} // namespace

TEST_CASE("spectrum with a degenerate range yields one ok row") {
    RunConfig cfg = kratzer_cfg();
    const auto rows = cmd_spectrum(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "ok");
    CHECK(std::abs(rows[0].E) < cfg.mu);
    CHECK(rows[0].binding == doctest::Approx(rows[0].E - cfg.mu));
}

TEST_CASE("spectrum rows are sorted and complete over ranges") {
    RunConfig cfg = kratzer_cfg();
    cfg.n = {0, 1};
    cfg.ntheta = {0, 1};
    cfg.m = {0, 1};
    const auto rows = cmd_spectrum(cfg);
    REQUIRE(rows.size() == 8);
    int idx = 0;
    for (int n = 0; n <= 1; ++n)
        for (int nt = 0; nt <= 1; ++nt)
            for (int m = 0; m <= 1; ++m) {
                CHECK(rows[idx].n == n);
                CHECK(rows[idx].ntheta == nt);
                CHECK(rows[idx].m == m);
                ++idx;
            }
}

TEST_CASE("C = 0 spectrum matches the fixed-j kratzer route row by row") {
    RunConfig cfg = kratzer_cfg();
    cfg.n = {0, 2};
    cfg.ntheta = {0, 1};
    cfg.m = {0, 1};
    for (const auto& row : cmd_spectrum(cfg)) {
        REQUIRE(row.status == "ok");
        const ModelParams p = cfg.params();
        const double f = energy_residual_kratzer(p, row.n, row.j, row.E);
        CHECK(std::abs(f) <= 1e-12);
    }
}

TEST_CASE("coulomb channel rows match the closed form") {
    RunConfig cfg;
    cfg.coulomb_A = 1.5;
    cfg.n = {0, 1};
    cfg.ntheta = {0, 1};
    cfg.m = {0, 0};
    for (const auto& row : cmd_spectrum(cfg)) {
        const int ell = row.ntheta + row.m;
        const double closed = coulomb_energy(1.0, 1.5 * 1.5, row.n, ell, 3);
        CHECK(std::abs(row.E - closed) <= 1e-10 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("csv output is byte-stable and carries the schema header") {
    RunConfig cfg = kratzer_cfg();
    cfg.n = {0, 1};
    const auto rows = cmd_spectrum(cfg);
    const std::string a = to_csv(rows);
    const std::string b = to_csv(cmd_spectrum(cfg));
    CHECK(a == b);
    CHECK(a.rfind("n,ntheta,m,j,j_prime,m_prime,E_R,binding,E_NR,zeta,status,roots_found\n", 0) ==
          0);
    CHECK(a.back() == '\n');
}

TEST_CASE("json numeric fields round-trip bit-exactly") {
    RunConfig cfg = kratzer_cfg();
    cfg.n = {0, 1};
    cfg.ntheta = {0, 1};
    const auto rows = cmd_spectrum(cfg);
    const auto parsed = nlohmann::json::parse(to_json(rows));
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i]["n"].get<int>() == rows[i].n);
        CHECK(parsed[i]["ntheta"].get<int>() == rows[i].ntheta);
        CHECK(parsed[i]["m"].get<int>() == rows[i].m);
        CHECK(parsed[i]["j"].get<double>() == rows[i].j);
        CHECK(parsed[i]["j_prime"].get<double>() == rows[i].j_prime);
        CHECK(parsed[i]["m_prime"].get<double>() == rows[i].m_prime);
        CHECK(parsed[i]["E_R"].get<double>() == rows[i].E);
        CHECK(parsed[i]["binding"].get<double>() == rows[i].binding);
        CHECK(parsed[i]["E_NR"].get<double>() == rows[i].E_nr);
        CHECK(parsed[i]["zeta"].get<double>() == rows[i].zeta);
        CHECK(parsed[i]["status"].get<std::string>() == rows[i].status);
    }
}

TEST_CASE("json null stands in for non-finite fields") {
    RunConfig cfg = kratzer_cfg();  // no --coulomb: E_coulomb and E_series are NaN
    const auto parsed = nlohmann::json::parse(to_json(cmd_limits(cfg)));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["E_coulomb"].is_null());
    CHECK(parsed[0]["E_series"].is_null());
    CHECK(parsed[0]["E_NR"].is_number());
}

TEST_CASE("limits rows expose the nonrelativistic cross-check") {
    RunConfig cfg = kratzer_cfg();
    const auto rows = cmd_limits(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].E_nr == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(std::abs(rows[0].transformed_residual) <= 1e-10);
    CHECK(std::isnan(rows[0].E_coulomb));
}

TEST_CASE("limits rows in the coulomb channel") {
    RunConfig cfg;
    cfg.coulomb_A = 1.0;
    const auto rows = cmd_limits(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].E_coulomb == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(std::abs(rows[0].E - rows[0].E_coulomb) <= 1e-10);
    CHECK(rows[0].E_series == doctest::Approx(coulomb_series(1.0, 1.0, 0, 0, 3)).epsilon(1e-15));
}

TEST_CASE("wavefunction sampling") {
    RunConfig cfg = kratzer_cfg();
    cfg.samples = 50;
    SUBCASE("radial log grid") {
        const auto rows = cmd_wavefunction(cfg);
        REQUIRE(rows.size() == 50);
        CHECK(rows.front().coord < rows.back().coord);
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].coord > rows[i - 1].coord);
        // ground state: strictly positive samples, g = r R at D = 3
        for (const auto& r : rows) {
            CHECK(r.value > 0.0);
            CHECK(r.extra == doctest::Approx(r.coord * r.value).epsilon(1e-12));
        }
    }
    SUBCASE("polar grid") {
        cfg.coord = 't';
        const auto rows = cmd_wavefunction(cfg);
        REQUIRE(rows.size() == 50);
        CHECK(rows.front().coord == 0.0);
        CHECK(rows.back().coord == doctest::Approx(3.14159265358979).epsilon(1e-12));
    }
}

TEST_CASE("verify rows pass for the ground state") {
    RunConfig cfg = kratzer_cfg();
    cfg.grid = 800;  // keep the unit suite quick; acceptance runs the full size
    cfg.rmax = 100.0;
    const auto rows = cmd_verify(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "ok");
    CHECK(rows[0].radial_residual <= 1e-7);
    CHECK(rows[0].angular_residual <= 1e-7);
    CHECK(rows[0].norm_radial_err <= 1e-8);
    CHECK(rows[0].norm_polar_err <= 1e-8);
    CHECK(rows[0].norm_azimuthal_err <= 1e-8);
    CHECK(rows[0].pass);
    CHECK(all_pass(rows));
}
