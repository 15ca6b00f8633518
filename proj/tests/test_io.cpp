#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/format.hpp"
#include "zetakit/report.hpp"
#include "zetakit/zero_cache.hpp"

using namespace zetakit;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "zetakit_test_io";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(shortest_decimal(0.1) == "0.1");
    CHECK(shortest_decimal(1.6449340668482264) == "1.6449340668482264");
    CHECK(std::strtod(shortest_decimal(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
    CHECK(decimal_min_digits(14.5, 12) == "14.5000000000");
    CHECK(decimal_min_digits(14.134725141734693, 12) == "14.134725141734693");
    CHECK(decimal_min_digits(0.0, 12) == "0");
    CHECK(decimal_min_digits(1e20, 12) == "1.00000000000e+20");
    CHECK(decimal_min_digits(2.5e-300, 12) == "2.50000000000e-300");
}

TEST_CASE("zero cache csv round trip") {
    const std::vector<zeta::ZeroRecord> records{{1, 14.134725141734693, 1.5e-11},
                                                {2, 21.022039638771556, 2e-12}};
    const std::string text = zeta::format_zero_csv(records);
    CHECK(text.rfind("index,t,residual\n", 0) == 0);
    const auto parsed = zeta::parse_zero_csv(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].t == records[0].t);
    CHECK(parsed[1].residual == records[1].residual);
    CHECK(parsed[1].index == 2);

    CHECK_THROWS_AS(zeta::parse_zero_csv("t,index\n"), IoError);
    CHECK_THROWS_AS(zeta::parse_zero_csv("index,t,residual\n1,abc,0\n"), IoError);
    CHECK_THROWS_AS(zeta::parse_zero_csv("index,t,residual\n1,21,0\n2,14,0\n"), IoError);
}

TEST_CASE("zero cache file operations") {
    const fs::path p = scratch("zeros.csv");
    CHECK(zeta::read_zero_cache(p).empty());
    const std::vector<zeta::ZeroRecord> first{{1, 21.0, 0.0}};
    zeta::write_zero_cache(p, first);
    CHECK(zeta::read_zero_cache(p).size() == 1);
    CHECK_THROWS_AS(zeta::write_zero_cache(fs::path("/nonexistent-dir/zeros.csv"), first), IoError);
}

TEST_CASE("merging keeps existing records and reindexes") {
    const std::vector<zeta::ZeroRecord> existing{{1, 21.0, 1e-12}};
    const std::vector<zeta::ZeroRecord> found{{1, 14.0, 3e-12}, {2, 21.0 + 1e-10, 9e-12}};
    const auto merged = zeta::merge_zero_records(existing, found);
    REQUIRE(merged.size() == 2);
    CHECK(merged[0].t == 14.0);
    CHECK(merged[0].index == 1);
    CHECK(merged[1].t == 21.0);
    CHECK(merged[1].residual == 1e-12);
    CHECK(merged[1].index == 2);
}

TEST_CASE("json shapes") {
    const auto j = report::to_json(Complex(1.5, -2.0));
    CHECK(j.dump() == R"({"re":1.5,"im":-2.0})");

    identities::SwapReport s;
    s.truncation = 50;
    const auto sj = report::to_json(s);
    for (const char* key : {"sigma", "t", "truncation", "lhs", "rhs", "gap"}) CHECK(sj.contains(key));

    identities::ProbeReport p;
    p.sigma = 0.5;
    p.t = 14.0;
    const auto pj = report::to_json(p);
    CHECK(pj["A"].is_null());
    CHECK(pj["zeta2s"].is_null());
    CHECK(pj["residual_33"].is_array());
    CHECK(pj["notes"].is_array());
}
