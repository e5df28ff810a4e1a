// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the installed command line surface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& out_file) {
    const std::string cmd = std::string(OSCINT_CLI_PATH) + " " + args + " > " + out_file +
                            " 2> " + out_file + ".err";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("pv1d command") {
    const RunResult r = run_cli("pv1d --poly \"[0,1]\"", "/tmp/oscint_pv1d.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 1);
    CHECK(std::abs(j["value_im"].get<double>() - 3.14159265358979) < 1e-6);
    CHECK(std::abs(j["value_re"].get<double>()) < 1e-7);
    CHECK(j["converged"] == true);
}

TEST_CASE("sublevel command reports certified endpoints") {
    const RunResult r =
        run_cli("sublevel --poly \"[0,-3,1]\" --alpha 1", "/tmp/oscint_sub.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["intervals"].size() == 1);
    const double lo = j["intervals"][0][0].get<double>();
    const double hi = j["intervals"][0][1].get<double>();
    CHECK(std::abs(lo - (3 + std::sqrt(5.0)) / 2) < 1e-9);
    CHECK(std::abs(hi - (3 + std::sqrt(13.0)) / 2) < 1e-9);
}

TEST_CASE("bound command") {
    const RunResult r = run_cli(
        "bound --formula log_lemma --alpha 1e-8 --M 1 --d 4", "/tmp/oscint_bound.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["value"].get<double>() - 1e-2) < 1e-12);
    CHECK(j["branch"] == "power");
}

TEST_CASE("vdc command maps hypothesis violations to exit code 2") {
    const RunResult bad =
        run_cli("vdc --phase \"[0,0,0.5]\" --lambda 10 --a 0.5 --b 3", "/tmp/oscint_vdc.json");
    CHECK(bad.exit_code == 2);
    const RunResult ok =
        run_cli("vdc --phase \"[0,1]\" --lambda 10 --a 0 --b 1", "/tmp/oscint_vdc2.json");
    REQUIRE(ok.exit_code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["N"] == 1);
}

TEST_CASE("pvn and certify commands") {
    const RunResult r =
        run_cli("pvn --mpoly \"1 1\" --n 1 --kernel sign", "/tmp/oscint_pvn.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["value_im"].get<double>() - 3.14159265358979) < 1e-6);

    const RunResult c = run_cli(
        "certify --mpoly \"1 1;1 3\" --n 1 --kernel sign --measure 0 --out /tmp/oscint_cert.json",
        "/tmp/oscint_cert_stdout.txt");
    REQUIRE(c.exit_code == 0);
    std::ifstream in("/tmp/oscint_cert.json");
    json cj;
    in >> cj;
    CHECK(cj["padded_degree"] == 4);
    CHECK(cj["total_bracket"].get<double>() > 0.0);
}

TEST_CASE("growth command is byte-reproducible") {
    const std::string args =
        "growth --degrees 2,4 --n 1 --kernel sign --samples 4 --seed 7 --format csv";
    const RunResult a = run_cli(args, "/tmp/oscint_growth_a.csv");
    const RunResult b = run_cli(args, "/tmp/oscint_growth_b.csv");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("d,n,kernel_id,samples,sup_abs_integral,empirical_c") == 0);
}

TEST_CASE("config file provides defaults") {
    {
        std::ofstream cfg("/tmp/oscint_cfg.json");
        cfg << "{\"poly\": \"[0,0,0,1]\"}\n";
    }
    const RunResult r =
        run_cli("--config /tmp/oscint_cfg.json pv1d", "/tmp/oscint_pv1d_cfg.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["value_im"].get<double>() - 3.14159265358979 / 3.0) < 1e-6);
}

TEST_CASE("kernel table loading") {
    {
        std::ofstream tab("/tmp/oscint_kernel.txt");
        tab << "# odd two-point kernel\n";
        tab << "dim 1\n";
        tab << "1.0 -1.0\n";
    }
    const RunResult r = run_cli(
        "pvn --mpoly \"1 1\" --n 1 --kernel table:/tmp/oscint_kernel.txt",
        "/tmp/oscint_pvn_tab.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["value_im"].get<double>() - 3.14159265358979) < 1e-6);
}
