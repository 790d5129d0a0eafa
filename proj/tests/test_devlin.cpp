#include "helpers.hpp"

#include <oracles.hpp>

#include <doctest.h>

#include <set>

using namespace dualramsey;
using namespace dualramsey::test;

TEST_SUITE("devlin")
{
    TEST_CASE("tangent numbers")
    {
        const char* want[] = {"1", "2", "16", "272", "7936", "353792", "22368256", "1903757312"};
        for (unsigned k = 1; k <= 8; ++k) {
            CHECK(tangent_number(k).str() == want[k - 1]);
        }
        CHECK_THROWS(tangent_number(0));
        const auto table = tangent_table(12);
        const auto zig = oracle::zigzag_numbers(23);
        for (unsigned k = 1; k <= 12; ++k) {
            CHECK(table[k - 1] == zig[2 * k - 1]);
            CHECK(table[k - 1] == oracle::tan_derivative_at_zero(2 * k - 1));
        }
        for (unsigned k = 1; k <= 5; ++k) {
            CHECK(BigInt(oracle::alternating_permutations(2 * k - 1)) == table[k - 1]);
        }
    }

    TEST_CASE("meet closure")
    {
        auto m = meet_closure(pts({"0(1)", "10(1)"}));
        REQUIRE(m.nodes.size() == 3);
        CHECK(m.nodes[0].word.empty());
        CHECK(m.nodes[0].leaf == -1);
        CHECK(m.antichain);

        m = meet_closure(pts({"0(1)"}));
        CHECK(m.nodes.size() == 1);

        m = meet_closure(pts({"0(1)", "10(1)", "110(1)"}));
        CHECK(m.nodes.size() == 5);
        CHECK_THROWS(meet_closure(pts({"0(1)", "0(1)"})));
    }

    TEST_CASE("strong diagonality")
    {
        CHECK(is_strongly_diagonal(pts({"0(1)", "10(1)"})));
        CHECK_FALSE(is_strongly_diagonal(pts({"00(1)", "0(1)"})));
        // meets "0" and "1" at one level
        CHECK_FALSE(is_strongly_diagonal(pts({"000(1)", "010(1)", "100(1)", "110(1)"})));
        // the meet "1" shares its level with the stem "0"
        CHECK_FALSE(is_strongly_diagonal(pts({"0(1)", "10(1)", "110(1)"})));
        CHECK(is_strongly_diagonal(pts({"0(1)", "100(1)", "1010(1)"})));
    }

    TEST_CASE("type counts")
    {
        for (unsigned l = 1; l <= 5; ++l) {
            CHECK(BigInt(enumerate_types(l).size()) == tangent_number(l));
        }
        CHECK(enumerate_types(1).front().encoding() == "0");
        CHECK(enumerate_types(2).size() == 2u);
    }

    TEST_CASE("types of explicit antichains")
    {
        for (unsigned l = 1; l <= 3; ++l) {
            std::set<std::string> enumerated;
            for (const auto& t : enumerate_types(l)) {
                enumerated.insert(t.encoding());
            }
            CHECK(oracle::realized_types(l, 7) == enumerated);
        }
    }

    TEST_CASE("rank, unrank and parsing")
    {
        const auto all = enumerate_types(5);
        for (std::size_t i = 0; i < all.size(); ++i) {
            REQUIRE(all[i].rank() == BigInt(i));
            REQUIRE(TreeType::unrank(5, BigInt(i)) == all[i]);
            REQUIRE(TreeType::parse(all[i].encoding()) == all[i]);
        }
        CHECK_THROWS(TreeType::parse("0[1,1]"));
        CHECK_THROWS(TreeType::parse("1[0,2]"));
        CHECK_THROWS(TreeType::parse("0[1,2"));
        CHECK_THROWS(TreeType::unrank(3, 16));
    }

    TEST_CASE("canonical coloring")
    {
        CHECK(canonical_coloring(pts({"00(1)", "0(1)"})) == 0);
        // golden: left leaf shallower
        const auto left = pts({"0(1)", "10(1)"});
        CHECK(similarity_type(left).encoding() == "0[1,2]");
        CHECK(canonical_coloring(left) == 0);
        const auto right = pts({"000(1)", "10(1)"});
        CHECK(canonical_coloring(right) != canonical_coloring(left));
        CHECK_THROWS(similarity_type(pts({"00(1)", "0(1)"})));
    }

    TEST_CASE("types of base-3 tuples go through the binary encoding")
    {
        const auto t = pts({"0(2)", "10(2)", "11(2)"}, 3);
        std::vector<Point> enc;
        for (const auto& p : t) {
            enc.push_back(encode_binary(p));
        }
        CHECK(is_strongly_diagonal(t) == is_strongly_diagonal(enc));
        CHECK(canonical_coloring(t) == canonical_coloring(enc));
    }

    TEST_CASE("type search in Y_identity")
    {
        const Surjection id = Surjection::identity(2);
        const auto hits = search_types(id, 3, 12);
        CHECK(hits.size() == 16u);
        for (const auto& [rank, hit] : hits) {
            CHECK(canonical_coloring(hit.tuple) == rank);
            for (const auto& p : hit.tuple) {
                CHECK(locate_max(id, p, hit.depth).kind == MaxLocation::Kind::Found);
            }
        }
        const auto ty = TreeType::unrank(3, 7);
        const auto one = search_tuple_of_type(id, ty, 12);
        REQUIRE(one);
        CHECK(similarity_type(one->tuple) == ty);
    }

    TEST_CASE("type search in a random Y_h")
    {
        Rng rng(77);
        const Surjection h = random_surjection(rng, 2, 3);
        const auto hits = search_types(h, 3, 20);
        CHECK(hits.size() == 16u);
        for (const auto& [rank, hit] : hits) {
            const auto y = max_set(h, hit.depth);
            CHECK(canonical_coloring(hit.tuple) == rank);
            for (const auto& p : hit.tuple) {
                CHECK(std::binary_search(y.begin(), y.end(), p));
            }
        }
    }
}
