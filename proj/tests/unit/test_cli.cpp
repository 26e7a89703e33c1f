#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace qgw::cli;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qgw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(QGW_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("config files and flag precedence") {
    const std::string cfg = temp_file("run.cfg", "# run\ngenus = 1\norder=16\nmargin=4\ngauge=c1b=3/5;c2=-2/25\nformat=csv\n");
    RunConfig c = parse_arguments({"solve", "--config", cfg, "--order", "18"});
    CHECK(c.genus == 1);
    CHECK(c.order == 18);
    CHECK(c.margin == 4);
    CHECK(c.gauge == "c1b=3/5;c2=-2/25");
    CHECK(c.format == "csv");
    CHECK(parse_arguments({"table", "--config=" + cfg}).order == 16);
    CHECK_THROWS(parse_arguments({"solve", "--config", temp_file("bad.cfg", "colour=red\n")}));
    CHECK_THROWS(parse_arguments({"solve", "--config", temp_file("bad2.cfg", "genus\n")}));
    CHECK_THROWS(parse_arguments({"solve", "--gauge", "c2=1,2,3,4"}));  // degree bound at parse time
    CHECK_THROWS(parse_arguments({"solve", "--format", "xml"}));
    CHECK_THROWS(parse_arguments({"frobnicate"}));
    CHECK_THROWS(parse_arguments({}));
}

TEST_CASE("solve emits exact rationals and embeds its configuration") {
    const Result r = invoke({"solve", "--genus", "2", "--order", "14"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["config"]["genus"] == 2);
    CHECK(j["config"]["order"] == 14);
    CHECK(j["config"]["gauge"] == "c1a=0;c1b=3/5;c2=-2/25;c3=-4/125");
    const auto& g1 = j["results"][1];
    CHECK(g1["ambiguity"] == json::array({"-107/60", "-1/12"}));
    const auto& g2 = j["results"][2];
    CHECK(g2["invariants"][1]["d"] == 1);
    CHECK(g2["invariants"][1]["value"] == "575/48");
    CHECK(g2["invariants"][0]["value"] == "-5/144");
    CHECK(j["results"][0]["invariants"][0]["value"] == "2875");
    CHECK(g2["residual_margin"] >= 10);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const Result a = invoke({"solve", "--genus", "2", "--threads", "1"});
    const Result b = invoke({"solve", "--genus", "2", "--threads", "3"});
    const Result c = invoke({"solve", "--genus", "2"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("table rows") {
    const Result r = invoke({"table", "--genus-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("g,d,numerator,denominator\n", 0) == 0);
    for (const char* row : {"\n1,1,2875,12\n", "\n2,1,575,48\n", "\n2,0,-5,144\n", "\n0,2,4876875,8\n"})
        CHECK(r.out.find(row) != std::string::npos);
}

TEST_CASE("exit codes") {
    const Result missing = invoke({"solve", "--genus", "3"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("N_{3,1}") != std::string::npos);
    CHECK(invoke({"solve", "--genus", "2", "--initial-data", "/nonexistent"}).code == 2);
    CHECK(invoke({"solve", "--genus", "2", "--order", "8"}).code == 2);
    CHECK(invoke({"solve", "--bogus"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    const Result v = invoke({"verify", "--suite", "mirror"});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["pass"] == true);
}

TEST_CASE("verify reports every check by name") {
    const Result r = invoke({"verify", "--suite", "gauge", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gauge.special_vs_sample.P2,true") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = std::string(QGW_TEST_TMP) + "/table.csv";
    std::remove(path.c_str());
    const Result r = invoke({"table", "--genus-max", "1", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "g,d,numerator,denominator");
}

TEST_CASE("golden genus-two report") {
    std::ifstream in(std::string(QGW_TEST_DATA) + "/solve_genus2.json");
    REQUIRE(in);
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(invoke({"solve", "--genus", "2", "--order", "16"}).out == golden.str());
}
