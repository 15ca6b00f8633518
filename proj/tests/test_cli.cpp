#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "zetakit/zero_cache.hpp"

namespace fs = std::filesystem;
using zetakit::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& env_cache = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, env_cache);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "zetakit_test_cli";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("eval") {
    auto r = invoke({"eval", "2", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["regime"] == "dirichlet");
    CHECK(std::abs(j["result"]["value"]["re"].get<double>() - 1.6449340668) < 1e-9);
    CHECK(r.err.empty());

    r = invoke({"eval", "1", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not defined") != std::string::npos);
    CHECK(r.out.empty());

    r = invoke({"eval", "-2", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto k = nlohmann::json::parse(r.out);
    CHECK(k["result"]["regime"] == "functional");
    CHECK(k["result"]["value"]["re"].get<double>() == 0.0);

    CHECK(invoke({"eval", "x", "0"}).code == 64);
    CHECK(invoke({"eval", "2"}).code == 64);
    CHECK(invoke({"eval", "2", "0", "--tol", "0"}).code == 64);
    CHECK(invoke({"eval", "2", "0", "--max-terms", "15"}).code == 64);
    CHECK(invoke({"--tol", "1e-10", "eval", "2", "0"}).code == 0);
    CHECK(invoke({}).code == 64);
    CHECK(invoke({"bogus"}).code == 64);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("eval csv") {
    const auto r = invoke({"eval", "0.5", "0", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("s_re,s_im,regime,value_re,value_im,terms_used,est_error\n", 0) == 0);
    CHECK(r.out.find(",eta,") != std::string::npos);
}

TEST_CASE("zeros: cache writes, idempotence, precedence") {
    const fs::path cache = scratch("zeros.csv");
    auto r = invoke({"zeros", "0", "30", "--cache", cache.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["zeros"].size() == 3);
    const std::string bytes = slurp(cache);
    CHECK(invoke({"zeros", "0", "30", "--cache", cache.string()}).code == 0);
    CHECK(slurp(cache) == bytes);

    r = invoke({"zeros", "0", "5", "--cache", cache.string(), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["zeros"].empty());

    // Environment path is used when no flag is given; the flag wins otherwise.
    const fs::path env_cache = scratch("env.csv");
    CHECK(invoke({"zeros", "14", "15"}, env_cache.string()).code == 0);
    CHECK(fs::exists(env_cache));
    const fs::path flag_cache = scratch("flag.csv");
    CHECK(invoke({"zeros", "20", "22", "--cache", flag_cache.string()}, env_cache.string()).code == 0);
    CHECK(zetakit::zeta::read_zero_cache(env_cache).size() == 1);
    CHECK(zetakit::zeta::read_zero_cache(flag_cache).size() == 1);

    CHECK(invoke({"zeros", "0", "30", "--cache", "/nonexistent-dir/z.csv"}).code == 74);
}

TEST_CASE("zeros output is independent of the worker count") {
    const fs::path a = scratch("jobs1.csv");
    const fs::path b = scratch("jobs4.csv");
    const auto one = invoke({"zeros", "10", "50", "--jobs", "1", "--cache", a.string(), "--format", "csv"});
    const auto four = invoke({"zeros", "10", "50", "--jobs", "4", "--cache", b.string(), "--format", "csv"});
    CHECK(one.out == four.out);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("beta") {
    auto r = invoke({"beta", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const std::vector<int> expected{1, -2, 0, 1, 0, 0, 0, -2, 1, 0};
    REQUIRE(j["rows"].size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(j["rows"][i]["beta_closed_form"] == expected[i]);

    r = invoke({"beta", "1", "--format", "csv"});
    CHECK(r.out == "n,beta_divisor_sum,beta_closed_form,classification\n1,1,1,square\n");
    CHECK(invoke({"beta", "0"}).code == 65);
    CHECK(invoke({"beta", "20000000"}).code == 65);
}

TEST_CASE("verify") {
    CHECK(invoke({"verify", "nonsense"}).code == 64);
    const auto r = invoke({"verify", "identities", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() >= 6);
}

TEST_CASE("probe") {
    const fs::path cache = scratch("probe.csv");
    CHECK(invoke({"probe", "0.5", "zero:1", "--cache", cache.string()}).code == 66);
    REQUIRE(invoke({"zeros", "0", "30", "--cache", cache.string()}).code == 0);

    auto r = invoke({"probe", "0.5", "zero:1", "--cache", cache.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["residual_31"].get<double>()) < 1e-4);
    CHECK(j["A"].is_null());

    r = invoke({"probe", "0.75", "zero:1", "--cache", cache.string(), "--format", "json",
                "--phi", "0,0.5", "--m", "2,3"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["residual_33"].size() == 2);
    CHECK(j["f1_samples"].size() == 2);
    CHECK(j["coeffs"]["det"].get<double>() > 0.0);

    CHECK(invoke({"probe", "1.5", "10"}).code == 65);
    CHECK(invoke({"probe", "0.5", "-1"}).code == 65);
    CHECK(invoke({"probe", "0.5", "zero:x"}).code == 64);
    CHECK(invoke({"probe", "0.5", "zero:9", "--cache", cache.string()}).code == 66);
    CHECK(invoke({"probe", "0.5", "10", "--m", "2,,3"}).code == 64);
}

TEST_CASE("swap") {
    auto r = invoke({"swap", "2.0", "1.0", "50,100,200,400", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reports"].back()["gap"].get<double>() < 1e-4);

    r = invoke({"swap", "0.6", "14.13", "50,100,200", "--format", "json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["asserted"] == false);
    CHECK(j["reports"].size() == 3);

    r = invoke({"swap", "2.0", "0", "50", "--format", "json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["reports"][0]["lhs"].get<double>() == 0.0);
    CHECK(j["reports"][0]["gap"].get<double>() == 0.0);

    CHECK(invoke({"swap", "2.0", "1.0", "50,x"}).code == 64);
    CHECK(invoke({"swap", "2.0", "1.0", "100,50"}).code == 64);
    CHECK(invoke({"swap", "2.0", "1.0", ""}).code == 64);
    // Truncations too short for the gap to fall below 1e-3.
    CHECK(invoke({"swap", "1.05", "1.0", "2,3"}).code == 1);
}

TEST_CASE("every command renders in every format") {
    const fs::path cache = scratch("formats.csv");
    REQUIRE(invoke({"zeros", "14", "15", "--cache", cache.string()}).code == 0);
    const std::vector<std::vector<std::string>> commands{
        {"eval", "0.5", "3"},
        {"zeros", "14", "15", "--cache", cache.string()},
        {"beta", "12"},
        {"probe", "0.75", "zero:1", "--cache", cache.string(), "--max-terms", "100"},
        {"swap", "2", "1", "50,400"},
    };
    for (const auto& base : commands) {
        for (const char* format : {"plain", "csv", "json"}) {
            auto args = base;
            args.insert(args.end(), {"--format", format});
            const auto r = invoke(args);
            CHECK_MESSAGE(r.code == 0, base[0] << " " << std::string(format));
            CHECK_MESSAGE(!r.out.empty(), base[0] << " " << std::string(format));
            if (std::string(format) == "json") CHECK(nlohmann::json::accept(r.out));
        }
    }
}
