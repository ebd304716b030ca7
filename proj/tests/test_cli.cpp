#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "run.hpp"

using json = nlohmann::json;
using namespace relcut_test;

namespace {

RunResult run_relcut(const std::string& args) {
    return run_command(std::string(RELCUT_BIN) + " " + args + " 2>/dev/null");
}

json relcut_json(const std::string& args, int expected_status = 0) {
    RunResult r = run_relcut(args);
    INFO(args);
    REQUIRE(r.status == expected_status);
    return json::parse(r.out);
}

std::string data(const std::string& name) { return fixture_path(name); }

std::string scratch(const std::string& ext) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("relcut_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "." + ext);
    return path.string();
}

}

TEST_CASE("betti reports the diamond table") {
    json out = relcut_json("betti " + data("diamond") + " --family smt");
    CHECK(out["ranks"] == json({8, 11, 4}));
    CHECK(out["quotient_ranks"] == json({1, 8, 11, 4}));
    CHECK(out["z_graded"][0] == json({{"degree", 3}, {"i", 0}, {"rank", 8}}));
    CHECK(out["pd_ideal"] == 2);
    CHECK(out["family"] == "smt");
    CHECK_FALSE(out.contains("oracle"));
}

TEST_CASE("betti with the oracle") {
    json out = relcut_json("betti " + data("diamond") + " --family smt --oracle");
    CHECK(out["oracle"]["verdict"] == "MATCH");
    out = relcut_json("betti " + data("fig3") + " --family path --oracle --field 2");
    CHECK(out["oracle"]["verdict"] == "MATCH");
    CHECK(out["ranks"] == json({9, 25, 31, 18, 4}));
    out = relcut_json("betti " + data("directed") + " --family cut", 2);
    CHECK(out["error"]["kind"] == "input");
}

TEST_CASE("reliability") {
    json out = relcut_json("reliability " + data("diamond") + " --system smt --p 1/2");
    CHECK(out["value"]["exact"] == "7/16");
    CHECK(out["value"]["decimal"] == 0.4375);
    out = relcut_json("reliability " + data("single_edge") + " --system path --p 1/3");
    CHECK(out["value"]["exact"] == "1/3");

    std::string file = scratch("json");
    std::ofstream(file) << R"({"x1": "1", "x2": "0", "x3": "1", "x4": "1", "x5": "0"})";
    out = relcut_json("reliability " + data("diamond") + " --system smt --p-file " + file);
    CHECK(out["value"]["exact"] == "1");
    std::ofstream(file) << R"(["1/2", "1/2"])";
    out = relcut_json("reliability " + data("diamond") + " --system smt --p-file " + file, 2);
    std::remove(file.c_str());
    out = relcut_json("reliability " + data("diamond") + " --system smt --p 3/2", 2);
    CHECK(out["error"]["kind"] == "input");
}

TEST_CASE("ideal, genfun and tutte") {
    json out = relcut_json("ideal " + data("diamond") + " --family cut_st");
    CHECK(out["generators"].size() == 3);
    out = relcut_json("genfun " + data("fig3"));
    CHECK(out["polynomial"]["terms"].size() == 9);
    out = relcut_json("genfun " + data("triangle") + " --spanning");
    CHECK(out["polynomial"]["text"] == "x1*x2 + x1*x3 + x2*x3");
    out = relcut_json("tutte " + data("diamond"));
    CHECK(out["spanning_trees"] == "8");
    out = relcut_json("genfun " + data("diamond") + " --targets 1");
    CHECK(out["polynomial"]["terms"].size() == 3);
}

TEST_CASE("cells, orient and reduce") {
    json out = relcut_json("cells " + data("diamond"));
    CHECK(out["bounded"]["f_vector"] == json({6, 9, 4}));
    CHECK(out["sink"]["f_vector"] == json({3, 3, 1}));
    out = relcut_json("orient " + data("diamond") + " --kind spanning");
    CHECK(out["levels"].size() == 3);
    CHECK(out["levels"][1]["count"] == 11);
    out = relcut_json("orient " + data("diamond") + " --kind path --k 0");
    CHECK(out["levels"].size() == 1);
    CHECK(out["levels"][0]["count"] == 3);
    out = relcut_json("reduce " + data("diamond") + " --divisor '[0, 2, 0, -2]'");
    CHECK(out["degree"] == 0);
    CHECK(out["input_is_q_reduced"] == false);
    int total = 0;
    for (const auto& x : out["reduced"]) {
        total += x.get<int>();
    }
    CHECK(total == 0);
    out = relcut_json("reduce " + data("diamond") + " --divisor '[0, 0, 0, -1]'");
    CHECK(out["input_is_q_reduced"] == true);
    CHECK(out.contains("orientation"));
    CHECK(out["orientation"]["k"] == 0);
}

TEST_CASE("syzygy and check-all") {
    json out = relcut_json("syzygy " + data("diamond"));
    CHECK(out["verification"]["ok"] == true);
    out = relcut_json("syzygy " + data("diamond") + " --sign head-rank", 3);
    CHECK(out["verification"]["composes_to_zero"] == false);
    out = relcut_json("check-all " + data("diamond"));
    CHECK(out["ok"] == true);
    for (const auto& [name, verdict] : out["checks"].items()) {
        INFO(name);
        CHECK(verdict == "pass");
    }
    out = relcut_json("check-all " + data("directed"));
    CHECK(out["ok"] == true);
}

TEST_CASE("errors and usage") {
    json out = relcut_json("betti " + data("diamond") + " --family nope", 2);
    CHECK(out["error"]["kind"] == "input");
    CHECK(run_relcut("").status == 2);
    CHECK(run_relcut("betti /nonexistent.g").status == 2);
    CHECK(run_relcut("--help").status == 0);
    std::string file = scratch("g");
    std::ofstream(file) << "vertices 2\nq 0\nedge 1 0 5\n";
    out = relcut_json("ideal " + file, 2);
    std::remove(file.c_str());
}

TEST_CASE("output file and thread count") {
    std::string file = scratch("json");
    RunResult r = run_relcut("--threads 3 -o " + file + " tutte " + data("triangle"));
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(file);
    json out = json::parse(in);
    CHECK(out["polynomial"]["text"] == "x^2 + x + y");
    std::remove(file.c_str());
}
