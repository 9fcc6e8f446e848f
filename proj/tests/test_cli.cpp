#include "commands.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ratsurf::cli::run(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

const std::string kF2 = R"({"kind":"blowup","e":2,"s0":0,"s1_parents":[]})";
const std::string kF0 = R"({"kind":"blowup","e":0,"s0":0,"s1_parents":[]})";

}  // namespace

TEST_CASE("cohom command") {
    CliResult r = run({"cohom", "--surface", kF2, "--divisor", R"({"a":1,"b":1,"e":[]})"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["h"] == nlohmann::json::array({2, 0, 0}));
}

TEST_CASE("cohom reports unknown with exit 2") {
    std::string x = R"({"kind":"blowup","e":2,"s0":1,"s1_parents":[]})";
    // a deep negative exceptional multiple falls outside every rule
    CliResult r = run({"cohom", "--surface", x, "--divisor", R"({"a":1,"b":1,"e":["-3"]})"});
    CHECK(r.code == 2);
    auto j = r.json();
    CHECK(j["unknown"] == true);
    CHECK(j.contains("chi"));
}

TEST_CASE("gaeta exists exit codes") {
    CliResult bad =
        run({"gaeta", "exists", "--surface", kF0, "--class", R"({"r":1,"c1":{"a":0,"b":0,"e":[]},"chi":-1})"});
    CHECK(bad.code == 1);
    auto j = bad.json();
    CHECK(j["admits"] == false);
    CHECK(j["first_failing"] == "alpha4");

    CliResult good =
        run({"gaeta", "exists", "--surface", kF0, "--class", R"({"r":1,"c1":{"a":0,"b":0,"e":[]},"chi":1})"});
    CHECK(good.code == 0);
}

TEST_CASE("gaeta twist command") {
    CliResult r = run({"gaeta", "twist", "--surface", kF0, "--class",
                       R"({"r":1,"c1":{"a":0,"b":0,"e":[]},"chi":-1})", "--M", "0"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["feasible"] == true);
    CHECK(j["L"]["a"] == "1");
    CHECK(j["L"]["b"] == "1");
    CHECK(j["chi_after"] == 2);
}

TEST_CASE("exc verify command") {
    CliResult r = run({"exc", "verify", "--surface", kF2});
    CHECK(r.code == 0);
    CHECK(r.json()["pass"] == true);
}

TEST_CASE("malformed input is a located error with exit 2") {
    CliResult r = run({"cohom", "--surface", "{\"kind\":", "--divisor", R"({"a":1,"b":1,"e":[]})"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);

    CliResult r2 = run({"cohom", "--surface", R"({"kind":"torus"})", "--divisor", R"({"a":1})"});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("kind") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    std::vector<std::string> args = {"sd",  "report", "--surface", kF0,
                                     "--r", "2",      "--ell",     "2",
                                     "--L", R"({"a":20,"b":20,"e":[]})", "--H",
                                     R"({"u":13,"v":1,"d":[]})"};
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    std::vector<std::string> sweep = {"sweep", "orthogonality", "--n", "50", "--seed", "3"};
    CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("stab check command") {
    std::string x = R"({"kind":"blowup","e":1,"s0":1,"s1_parents":[1]})";
    CliResult r = run({"stab", "check", "--surface", x, "--H", R"({"u":3,"v":2,"d":["1/2","1/4"]})"});
    CHECK(r.code == 0);
    CHECK(r.json()["pass"] == true);

    CliResult bad = run({"stab", "check", "--surface", x, "--H", R"({"u":3,"v":2,"d":["3/2","1/4"]})"});
    CHECK(bad.code == 1);
    CHECK(bad.json()["pass"] == false);
}

TEST_CASE("sd report includes the l = 1 identity") {
    CliResult r = run({"sd", "report", "--surface", kF0, "--r", "2", "--ell", "1", "--L",
                       R"({"a":2,"b":2,"e":[]})"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["numbers_match"]["c2_v"] == 9);
    CHECK(j["numbers_match"]["chi_L"] == 9);
    CHECK(j["numbers_match"]["equal"] == true);
}

TEST_CASE("small sweeps run clean") {
    CHECK(run({"sweep", "cohom-oracle", "--e-max", "2", "--range", "6"}).code == 0);
    CHECK(run({"sweep", "exc-all", "--e-max", "2", "--t-max", "2"}).code == 0);
    CHECK(run({"sweep", "gaeta-roundtrip", "--n", "20", "--seed", "1"}).code == 0);
    CHECK(run({"sweep", "numbers-match", "--n", "40", "--seed", "1"}).code == 0);
    CHECK(run({"sweep", "stratum-gap", "--n", "60", "--seed", "1"}).code == 0);
    CHECK(run({"sweep", "ext1", "--n", "40", "--seed", "1"}).code == 0);
    CHECK(run({"sweep", "twist", "--n", "10", "--seed", "1"}).code == 0);
}
