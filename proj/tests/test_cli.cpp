#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meropole/cli.hpp"
#include "meropole/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace meropole;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "meropole");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MEROPOLE_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("mu") {
    const Result r = run_cli({"mu", "--vars", "x,z", "--poly", "x*z^2 - x^4 + x^2*z^2", "--point", "0,0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mu = 5"));
    const Result j = run_cli({"mu", "--poly", "x^2 - z^2", "--point", "1,1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out)["mu"] == 0);
    const Result three = run_cli({"mu", "--vars", "x,y,z", "--poly", "x^2 + y^3 + z^4"});
    CHECK(contains(three.out, "mu = 6"));
}

TEST_CASE("classify") {
    const Result r = run_cli({"classify", "--poly", "x*z^2 + x^2", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["class"] == "A_3");
    CHECK(j["mu"] == 3);
    CHECK(j["corank"] == 1);
    CHECK(run_cli({"classify", "--vars", "x,y,z", "--poly", "x^2"}).code == 1);
}

TEST_CASE("germ") {
    const Result r = run_cli({"germ", "--vars", "x,z", "--p", "x^2 + x*z^2", "--q", "z^3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "A_3 <- A_2"));
    const Result j = run_cli({"germ", "--p", "x^2 + x*z^2", "--q", "z^3", "--format", "json"});
    const Json g = Json::parse(j.out);
    CHECK(g["generic_mu"] == 2);
    REQUIRE(g["specials"].size() == 1);
    CHECK(g["specials"][0]["a"] == "0/1");
    CHECK(g["specials"][0]["mu_special"] == 3);
    CHECK(g["specials"][0]["lambda_polar"] == 1);

    const Result w = run_cli({"germ", "--p", "x*z^2 + x^2*z^2 - x^4", "--q", "z^3", "--candidates=-1,0,1,2", "--format",
                              "json"});
    const Json wj = Json::parse(w.out);
    CHECK(wj["specials"].size() == 4);
    for (const auto& s : wj["specials"]) CHECK(s["class_special"] == "D_5");

    const Result moved = run_cli({"germ", "--p", "x - 1", "--q", "z", "--point", "1,0"});
    CHECK(moved.code == 0);
}

TEST_CASE("pencil reports") {
    const Result t = run_cli({"pencil", "--atlas", data("quadric.atlas")});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "b_2(X,F) = mu + lambda = 3"));
    CHECK(contains(t.out, "Lambda_f = {-1, 0, 1}"));

    const Result r = run_cli({"pencil", "--atlas", data("quadric.atlas"), "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["atypical_values"] == Json::array({"-1/1", "0/1", "1/1"}));
    CHECK(j["totals"]["mu"] == 2);
    CHECK(j["totals"]["lambda"] == 1);
    CHECK(j["totals"]["b2"] == 3);
    CHECK(j["totals"]["chi_rel"] == 3);

    SUBCASE("top-level key order is fixed") {
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"charts", "atypical_values", "per_value", "totals", "warnings"});
    }
    SUBCASE("round trip is byte-identical") { CHECK(dump(Json::parse(r.out)) == r.out); }
    SUBCASE("same seed, any parallelism, same bytes") {
        CHECK(run_cli({"pencil", "--atlas", data("quadric.atlas"), "--format", "json"}).out == r.out);
        CHECK(run_cli({"pencil", "--atlas", data("quadric.atlas"), "--format", "json", "--parallelism", "4"}).out ==
              r.out);
    }

    const Result e = run_cli({"pencil", "--atlas", data("brieskorn_1112.atlas"), "--format", "json"});
    const Json ej = Json::parse(e.out);
    CHECK(ej["totals"]["mu"] == 0);
    CHECK(ej["totals"]["lambda"] == 2);
    CHECK(ej["totals"]["b2"] == 2);
    CHECK(contains(run_cli({"pencil", "--atlas", data("brieskorn_1112.atlas")}).out, "b_2(X,F) = mu + lambda = 2"));
}

TEST_CASE("empty report") {
    const Result r = run_cli({"pencil", "--p", "x", "--q", "z", "--format", "json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["atypical_values"].empty());
    CHECK(j["totals"] == Json::parse(R"({"mu":0,"lambda":0,"b2":0,"chi_rel":0})"));
}

TEST_CASE("--out writes the same bytes") {
    const auto path = std::filesystem::temp_directory_path() / "meropole_cli_test.json";
    const Result r = run_cli({"pencil", "--atlas", data("quadric.atlas"), "--format", "json", "--out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == r.out);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"mu", "--poly", "x^2 +* z"}).code == 1);
    CHECK(run_cli({"mu", "--poly", "x^2 + w"}).code == 1);
    CHECK(run_cli({"mu", "--poly", "x^2", "--point", "0,0,0"}).code == 1);
    CHECK(run_cli({"mu", "--poly", "x^2*z^2"}).code == 2);
    CHECK(run_cli({"mu", "--poly", "x^2 + 1"}).code == 2);
    CHECK(run_cli({"germ", "--p", "x^2", "--q", "z", "--candidates", "0"}).code == 2);
    CHECK(run_cli({"germ", "--p", "x+1", "--q", "z"}).code == 1);
    CHECK(run_cli({"germ", "--p", "x", "--q", "z", "--format", "xml"}).code == 1);
    CHECK(run_cli({"germ", "--p", "x", "--q", "z", "--jet-cap", "3"}).code == 1);
    CHECK(run_cli({"pencil", "--atlas", "/nonexistent/file.atlas"}).code == 1);
    CHECK(run_cli({"pencil", "--p", "x^2 - 2", "--q", "z"}).code == 2);
    CHECK(run_cli({"pencil", "--p", "x^2 - 2", "--q", "z", "--allow-incomplete"}).code == 0);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    const Result refusal = run_cli({"mu", "--poly", "x^2*z^2"});
    CHECK(contains(refusal.err, "not isolated or cap too low"));
}

TEST_CASE("atlas errors name the line") {
    const auto path = std::filesystem::temp_directory_path() / "meropole_bad.atlas";
    {
        std::ofstream f(path);
        f << "[chart a]\nvars = x, z\np = x +\nq = z\n";
    }
    const Result r = run_cli({"pencil", "--atlas", path.string()});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "atlas line 3"));
    std::filesystem::remove(path);
}
