#include "helpers.hpp"

#include <oracles.hpp>

#include <doctest.h>

#include <thread>

using namespace dualramsey;
using namespace dualramsey::test;

namespace {

Surjection from_levels(std::vector<std::vector<Point>> levels)
{
    return Surjection::from_filtering(Filtering::from_levels(2, std::move(levels)));
}

Surjection narrow_h()
{
    return Surjection::from_filtering(
        Filtering::from_levels(2, {}, Domain::of(2, {ClopenInterval::of_node(Node(2, W("0")))})));
}

} // namespace

TEST_SUITE("surjections")
{
    TEST_CASE("from_filtering rejects invalid filterings")
    {
        CHECK_THROWS_AS(from_levels({pts({"0(1)"}), pts({"0(1)", "0(1)", "10(1)"})}), InvalidFiltering);
        try {
            from_levels({pts({"1(0)"})});
        } catch (const InvalidFiltering& e) {
            CHECK_FALSE(e.report().ok);
        }
    }

    TEST_CASE("identity")
    {
        const Surjection id = Surjection::identity(2);
        CHECK(id.boundary_tuple(2) == pts({"00(1)", "0(1)", "10(1)"}));
        CHECK(max_set(id, 2) == pts({"00(1)", "0(1)", "10(1)"}));
        const auto r = evaluate(id, P("0110(0)"), 6);
        CHECK(r.digits == W("011000"));
    }

    TEST_CASE("evaluation")
    {
        const Surjection f = from_levels({pts({"00(1)"})});
        auto r = evaluate(f, P("0(1)"), 1);
        CHECK(r.digits == W("1"));
        r = evaluate(f, P("00(1)"), 3);
        CHECK(r.digits == W("011"));
        REQUIRE(r.exact);
        CHECK(*r.exact == P("0(1)"));
        CHECK_THROWS(evaluate(f, P("0(1)", 3), 2));
    }

    TEST_CASE("evaluation agrees with cell indices")
    {
        Rng rng(2);
        for (int i = 0; i < 40; ++i) {
            const unsigned b = 2 + static_cast<unsigned>(rng.below(2));
            const Surjection f = random_surjection(rng, b, static_cast<unsigned>(rng.below(4)), rng.coin());
            const auto t = f.boundary_tuple(5);
            for (const auto& x : all_points(b, 3)) {
                CHECK(evaluate(f, x, 5).digits == oracle::image_prefix(t, b, 5, x));
            }
        }
    }

    TEST_CASE("preimage of a maximum")
    {
        const Surjection id = Surjection::identity(2);
        CHECK(preimage_max(id, P("01(1)")) == P("01(1)"));
        Rng rng(6);
        for (int i = 0; i < 50; ++i) {
            const Surjection h = random_surjection(rng, 2, static_cast<unsigned>(rng.below(4)), rng.coin());
            for (const auto& t : h.boundary_tuple(3)) {
                const auto y = evaluate(h, t, 8).exact;
                REQUIRE(y);
                CHECK(preimage_max(h, *y) == t);
            }
        }
    }

    TEST_CASE("composition and truncation")
    {
        Rng rng(9);
        for (int i = 0; i < 30; ++i) {
            const Surjection f = random_surjection(rng, 2, 3);
            const Surjection h = random_surjection(rng, 2, 2, rng.coin());
            const Surjection fh = compose(f, h);
            CHECK(fh.is_chain());
            for (const auto& x : all_points(2, 3)) {
                const auto hx = evaluate(h, x, 12);
                if (hx.exact) {
                    CHECK(evaluate(fh, x, 4).digits == evaluate(f, *hx.exact, 4).digits);
                }
            }
            for (unsigned d = 0; d <= 4; ++d) {
                const DistanceResult r = distance(fh, truncate(fh, d), 12);
                CHECK((r.value.is_zero() || r.value.exponent() >= d));
                CHECK(truncate(fh, d).boundary_tuple(d) == fh.boundary_tuple(d));
            }
            CHECK(refines(fh, h, 3).verdict == RefinementResult::Verdict::Refines);
        }
    }

    TEST_CASE("distance")
    {
        const Surjection id = Surjection::identity(2);
        const Surjection g = from_levels({pts({"00(1)"})});
        CHECK(distance(g, g).to_string() == "0 (to cap 64)");
        CHECK(distance(g, g, 9).to_string() == "0 (to cap 9)");
        CHECK(distance(id, g).to_string() == "1");
        const Surjection a = from_levels({pts({"0(1)"}), pts({"00(1)", "0(1)", "10(1)"})});
        const Surjection c = from_levels({pts({"0(1)"}), pts({"000(1)", "0(1)", "10(1)"})});
        const DistanceResult d = distance(a, c);
        CHECK(d.kind == DistanceResult::Kind::Exact);
        CHECK(d.to_string() == "2^-1");
        // sampling oracle over stems <= 10
        CHECK(oracle::sup_distance_exponent(a, c, 10, 12) == 1u);
        CHECK(oracle::sup_distance_exponent(id, g, 10, 12) == 0u);
        CHECK_FALSE(oracle::sup_distance_exponent(g, g, 10, 12));
    }

    TEST_CASE("distance is symmetric and ultrametric")
    {
        Rng rng(13);
        std::vector<Surjection> fs;
        for (int i = 0; i < 10; ++i) {
            fs.push_back(random_surjection(rng, 2, static_cast<unsigned>(1 + rng.below(3)), false, 2));
        }
        fs.push_back(compose(fs[0], fs[1]));
        for (const auto& f : fs) {
            for (const auto& g : fs) {
                const Dyadic fg = distance(f, g).value;
                CHECK(fg == distance(g, f).value);
                for (const auto& h : fs) {
                    CHECK(distance(f, h).value <= std::max(fg, distance(g, h).value));
                }
            }
        }
    }

    TEST_CASE("node budget gives an upper bound")
    {
        Rng rng(1);
        const Surjection f = random_surjection(rng, 2, 2);
        const Surjection h = random_surjection(rng, 2, 2);
        const DistanceResult d = distance(compose(f, h), truncate(compose(f, h), 6), 64, 40);
        CHECK(d.kind == DistanceResult::Kind::AtMost);
        CHECK(d.to_string().rfind("<= 2^-", 0) == 0);
    }

    TEST_CASE("factorization")
    {
        Rng rng(17);
        for (int i = 0; i < 40; ++i) {
            const unsigned b = 2 + static_cast<unsigned>(rng.below(2));
            const Surjection f = random_surjection(rng, b, static_cast<unsigned>(rng.below(3)), rng.coin());
            const Surjection h = random_surjection(rng, b, static_cast<unsigned>(rng.below(3)), rng.coin());
            const Surjection f2 = factor_through(compose(f, h), h, 5);
            for (unsigned d = 1; d <= 5; ++d) {
                CHECK(f2.boundary_tuple(d) == f.boundary_tuple(d));
            }
        }
    }

    TEST_CASE("factorization failures")
    {
        const Surjection id = Surjection::identity(2);
        try {
            factor_through(id, narrow_h(), 2);
            FAIL("expected FactorError");
        } catch (const FactorError& e) {
            CHECK(std::string(e.what()).find("does not refine") != std::string::npos);
            CHECK(e.witness() == P("0(1)"));
            CHECK_FALSE(e.undecided());
        }
        // perturb one entry of a composed fingerprint to a point outside Y_h
        Rng rng(23);
        const Surjection h = narrow_h();
        const Surjection f = random_surjection(rng, 2, 2);
        auto t = compose(f, h).boundary_tuple(2);
        CHECK(compose(tuple_to_factor(h, t), h).boundary_tuple(2) == t);
        t[2] = P("10(1)");
        CHECK_THROWS_AS(tuple_to_factor(h, t), FactorError);
    }

    TEST_CASE("tuple to surjection")
    {
        const Surjection s = tuple_to_surjection(2, 2, oracle::standard_tuple(2, 2));
        CHECK(distance(s, Surjection::identity(2)).to_string() == "0 (to cap 64)");
        CHECK(tuple_to_factor(Surjection::identity(2), oracle::standard_tuple(2, 3)).boundary_tuple(3) ==
              oracle::standard_tuple(2, 3));
        CHECK_THROWS(tuple_to_surjection(2, 2, pts({"0(1)", "00(1)", "10(1)"})));
    }

    TEST_CASE("max sets")
    {
        Rng rng(31);
        const Surjection f = random_surjection(rng, 2, 2);
        const auto y = max_set(f, 3);
        CHECK(std::is_sorted(y.begin(), y.end()));
        CHECK(y.size() == 7u);
        CHECK(y == f.boundary_tuple(3));
    }

    TEST_CASE("concurrent readers see one extension")
    {
        Rng rng(41);
        const Surjection f = random_surjection(rng, 3, 2);
        std::vector<std::vector<Point>> seen(4);
        std::vector<std::thread> ts;
        for (int i = 0; i < 4; ++i) {
            ts.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = f.boundary_tuple(6); });
        }
        for (auto& t : ts) {
            t.join();
        }
        for (const auto& s : seen) {
            CHECK(s == seen[0]);
        }
    }
}
