#include "helpers.hpp"

#include <oracles.hpp>
#include <suite.hpp>

#include <doctest.h>

using namespace dualramsey;
using namespace dualramsey::test;

TEST_SUITE("suite")
{
    TEST_CASE("oracle sanity")
    {
        CHECK(oracle::alternating_permutations(1) == 1u);
        CHECK(oracle::alternating_permutations(3) == 2u);
        CHECK(oracle::alternating_permutations(5) == 16u);
        const auto z = oracle::zigzag_numbers(7);
        CHECK(z[7] == BigInt(272));
        CHECK(oracle::tan_derivative_at_zero(1) == 1);
        CHECK(oracle::tan_derivative_at_zero(2) == 0);
        CHECK(oracle::tan_derivative_at_zero(9) == 7936);
        CHECK(oracle::words_up_to(2, 2).size() == 7u);
        CHECK(oracle::standard_tuple(2, 1) == pts({"0(1)"}));
        CHECK(oracle::standard_tuple(3, 1) == pts({"0(2)", "1(2)"}, 3));
        CHECK(oracle::first_between(P("00(1)"), P("1(1)"), 4) == P("0(1)"));
        CHECK(oracle::realized_types(2, 5).size() == 2u);
    }

    TEST_CASE("criteria are listed in order")
    {
        const auto& cs = verify::criteria();
        REQUIRE(cs.size() == 10u);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(cs[i].id == static_cast<int>(i + 1));
        }
    }

    TEST_CASE("cheap criteria pass and report deterministically")
    {
        const auto a = verify::run_suite(7, {1, 2, 6});
        const auto b = verify::run_suite(7, {1, 2, 6});
        REQUIRE(a.size() == 3u);
        for (const auto& r : a) {
            CHECK(r.passed());
        }
        CHECK(verify::report_json(7, a).dump() == verify::report_json(7, b).dump());
        CHECK(verify::report_json(7, a).dump().find("seconds") == std::string::npos);
        CHECK(verify::report_table(a).rfind("PASS", 0) == 0);
    }

    TEST_CASE("replay")
    {
        Json good = Json::parse(R"({"criterion": 1, "seed": 42, "index": 2, "case": {"k": 3, "expected": "16"}, "message": ""})");
        CHECK_FALSE(verify::replay(good));
        Json bad = good;
        bad["case"]["expected"] = "17";
        const auto msg = verify::replay(bad);
        REQUIRE(msg);
        CHECK_FALSE(msg->empty());
        Json broken = good;
        broken["criterion"] = 11;
        CHECK_THROWS_AS(verify::replay(broken), SchemaError);
        CHECK_THROWS_AS(verify::replay(Json::parse(R"({"criterion": 1})")), SchemaError);
    }

    TEST_CASE("replay of generated cases")
    {
        // every drawn case of a cheap criterion replays as passing
        const auto r = verify::run_criterion(6, 3);
        CHECK(r.passed());
        CHECK_FALSE(r.counterexample);
    }
}
