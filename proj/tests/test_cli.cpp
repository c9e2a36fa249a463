#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "lcforge/report_io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lcforge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = lcforge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("lc") {
    auto r = run({"lc", "--n", "4", "--bits", "1100000000000000"});
    CHECK(r.code == 0);
    CHECK(r.out == "L=15 W=2 class=LessLC\n");

    r = run({"lc", "--n", "3", "--bits", "00000000"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "L=0 "));

    r = run({"lc", "--n", "4", "--hex", "8000", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("L") == 16);
    CHECK(j.at("weight") == 1);
    CHECK(j.at("class") == "FullLC");
}

TEST_CASE("lc reads a file") {
    const std::string path = "test_cli_period.txt";
    {
        std::ofstream f(path);
        f << "1100 0000\n0000 0000\n";
    }
    const auto r = run({"lc", "--n", "4", "--file", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "L=15"));
}

TEST_CASE("kerr and profile") {
    auto r = run({"kerr", "--n", "4", "--k", "1", "--bits", "1110000000000000"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Lk=13"));
    CHECK(contains(r.out, "witness=[3]"));

    r = run({"kerr", "--n", "4", "--k", "2", "--bits", "1100000000000000", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("Lk") == 0);
    CHECK(j.at("L") == 15);
    CHECK(j.at("witness") == nlohmann::json::array({0, 1}));

    r = run({"profile", "--n", "4", "--kmax", "3", "--bits", "1100000000000000"});
    CHECK(r.code == 0);
    CHECK(r.out == "profile 15,15,0,0\n");

    r = run({"profile", "--n", "4", "--kmax", "3", "--bits", "1100000000000000", "--format", "csv"});
    CHECK(r.out == "k,Lk\n0,15\n1,15\n2,0\n3,0\n");
}

TEST_CASE("count") {
    auto r = run({"count", "--n", "4", "--L", "5", "--k", "3", "--class", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "8400\n");

    // Exact decimal well beyond 64 bits.
    r = run({"count", "--n", "8", "--L", "255", "--k", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "28948022309329048855892746252171976963317496166410141009864396001978282409984\n");

    r = run({"count", "--n", "4", "--L", "13", "--k", "1", "--class", "full", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).at("count") == "16384");

    r = run({"count", "--n", "4", "--L", "3", "--k", "4", "--class", "less"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "NoFormulaAvailable"));

    r = run({"count", "--n", "4", "--L", "17", "--k", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("verify, census and refute") {
    auto r = run({"verify", "--n", "4", "--k", "3", "--class", "all", "--format", "csv"});
    CHECK(r.code == 0);
    std::size_t matches = 0;
    for (std::size_t pos = 0; (pos = r.out.find(",Match\n", pos)) != std::string::npos; ++pos) ++matches;
    CHECK(matches == 16);

    r = run({"verify", "--n", "4", "--k", "4", "--class", "less"});
    CHECK(r.code == 2);

    r = run({"refute", "--format", "csv"});
    CHECK(r.code == 0);
    for (const char* row : {"4,2824,2824,5128,FixtureWrong", "5,8400,8400,10704,FixtureWrong",
                            "6,4384,4384,18720,FixtureWrong", "7,2624,2624,30272,FixtureWrong",
                            "10,8704,8704,22016,FixtureWrong", "11,5120,5120,37888,FixtureWrong"}) {
        CHECK(contains(r.out, row));
    }
    CHECK(!contains(r.out, "9,23808,23808,23808,FixtureWrong"));

    r = run({"census", "--n", "3", "--k", "4", "--class", "less", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "L,census,formula,verdict\n0,"));

    r = run({"census", "--n", "4", "--k", "3", "--samples", "3000", "--seed", "4", "--format", "json", "--stable"});
    CHECK(r.code == 0);
    CHECK(lcforge::census::to_json(lcforge::census::from_json(r.out)) == r.out);

    r = run({"census", "--n", "5", "--k", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("json output is byte-stable across runs and job counts") {
    const auto a = run({"verify", "--n", "4", "--k", "2", "--format", "json", "--stable", "--jobs", "1"});
    const auto b = run({"verify", "--n", "4", "--k", "2", "--format", "json", "--stable", "--jobs", "8"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lcforge::census::to_json(lcforge::census::from_json(a.out)) == a.out);
}

TEST_CASE("exit codes for invalid input") {
    CHECK(run({"lc", "--n", "4", "--bits", "110"}).code == 2);
    CHECK(run({"lc", "--n", "2", "--bits", "1x00"}).code == 2);
    CHECK(run({"lc", "--n", "2"}).code == 2);
    CHECK(run({"lc", "--n", "2", "--bits", "1000", "--hex", "8"}).code == 2);
    CHECK(run({"lc", "--n", "2", "--bits", "1000", "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);

    const auto budget = run({"kerr", "--n", "10", "--k", "6", "--hex", std::string(256, '0')});
    CHECK(budget.code == 2);
    CHECK(contains(budget.err, "SearchTooLarge"));
}

TEST_CASE("help documents the bit orders") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    r = run({"lc", "--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "position 0 first"));
    CHECK(contains(r.out, "most significant bit first"));
}
