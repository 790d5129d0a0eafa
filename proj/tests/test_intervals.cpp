#include "helpers.hpp"

#include <oracles.hpp>

#include <doctest.h>

#include <cstdlib>

using namespace dualramsey;
using namespace dualramsey::test;

TEST_SUITE("intervals")
{
    TEST_CASE("partition from a tuple")
    {
        auto p = partition_from_tuple(2, 1, pts({"0(1)"}));
        REQUIRE(p.cells.size() == 2);
        CHECK(p.cells[0] == ClopenInterval(P("(0)"), P("0(1)")));
        CHECK(p.cells[1] == ClopenInterval(P("1(0)"), P("(1)")));

        p = partition_from_tuple(2, 1, pts({"00(1)"}));
        CHECK(p.cells[0] == ClopenInterval(P("(0)"), P("00(1)")));
        CHECK(p.cells[1] == ClopenInterval(P("01(0)"), P("(1)")));

        p = partition_from_tuple(2, 2, oracle::standard_tuple(2, 2));
        const char* words[] = {"00", "01", "10", "11"};
        for (unsigned i = 0; i < 4; ++i) {
            CHECK(p.cells[i] == ClopenInterval::of_node(Node(2, W(words[i]))));
        }
        CHECK(p.boundaries() == BoundaryTuple(2, oracle::standard_tuple(2, 2)));
        CHECK(p.boundaries().depth() == 2u);

        CHECK_THROWS(partition_from_tuple(2, 2, pts({"0(1)"})));
        CHECK_THROWS(partition_from_tuple(2, 1, pts({"0(0)"})));
    }

    TEST_CASE("cell containing")
    {
        const auto p = partition_from_tuple(2, 2, oracle::standard_tuple(2, 2));
        CHECK(cell_containing(p, P("0(1)")) == 1u);
        CHECK(cell_containing(p, P("00(1)")) == 0u);
        CHECK(cell_containing(p, Point::min(2)) == 0u);
        CHECK(cell_containing(p, Point::max(2)) == 3u);
        // linear scan
        for (const auto& x : all_points(2, 5)) {
            std::size_t want = 0;
            while (!p.cells[want].contains(x)) {
                ++want;
            }
            CHECK(cell_containing(p, x) == want);
        }
    }

    TEST_CASE("domains merge and enumerate")
    {
        const Domain d = Domain::of(2, {ClopenInterval::of_node(Node(2, W("01"))),
                                        ClopenInterval::of_node(Node(2, W("00"))),
                                        ClopenInterval::of_node(Node(2, W("11")))});
        REQUIRE(d.pieces().size() == 2);
        CHECK(d.pieces()[0] == ClopenInterval::of_node(Node(2, W("0"))));
        CHECK_FALSE(d.is_full());
        CHECK(Domain::full(2).is_full());
        // the top endpoint of the union belongs to it only when it is max
        CHECK(d.contains(P("0(1)")));
        CHECK_FALSE(Domain::of(2, {ClopenInterval::of_node(Node(2, W("0")))}).contains(P("0(1)")));
        CHECK(d.contains(P("00(1)")));
        CHECK_FALSE(d.contains(P("10(1)")));
        const auto all = all_points(2, 5);
        for (std::size_t i = 0; i < all.size(); i += 7) {
            for (std::size_t j = 0; j < all.size(); j += 11) {
                const Point &a = all[i], &c = all[j];
                if (!(a < c)) {
                    continue;
                }
                std::optional<Point> want;
                for (const auto& w : oracle::words_up_to(2, 8)) {
                    Point y(2, w, 1);
                    if (y.stem().size() == w.size() && !y.is_max() && a < y && y < c && d.contains(y)) {
                        want = y;
                        break;
                    }
                }
                CHECK(d.first_between(a, c) == want);
            }
        }
    }

    TEST_CASE("standard filtering is valid and reproduced by the greedy rule")
    {
        const Filtering s = Filtering::standard(2, 0);
        CHECK(validate_filtering(Filtering::standard(3, 3)).ok);
        for (unsigned b : {2u, 3u}) {
            const Filtering id = Filtering::standard(b, 0);
            for (unsigned d = 1; d <= 4; ++d) {
                CHECK(id.tuple(d) == oracle::standard_tuple(b, d));
                CHECK(refine_canonical(id, d).same_levels(Filtering::standard(b, d)));
            }
        }
        CHECK(s.cell_max(W("01")) == P("0(1)"));
        CHECK(s.cell(W("10")) == ClopenInterval::of_node(Node(2, W("10"))));
    }

    TEST_CASE("validation finds clause violations")
    {
        auto f = Filtering::from_levels(2, {pts({"0(1)"}), pts({"00(1)", "1(1)", "10(1)"})});
        auto r = validate_filtering(f);
        CHECK_FALSE(r.ok);

        f = Filtering::from_levels(2, {pts({"0(1)"}), pts({"0(1)", "0(1)", "10(1)"})});
        r = validate_filtering(f);
        CHECK_FALSE(r.ok);
        CHECK(r.clause.find("ii") != std::string::npos);

        f = Filtering::from_levels(2, {pts({"0(1)"}), pts({"00(1)", "0(1)"})});
        CHECK_FALSE(validate_filtering(f).ok);

        f = Filtering::from_levels(2, {pts({"1(0)"})});
        CHECK_FALSE(validate_filtering(f).ok);

        // a domain too thin to split: one point
        f = Filtering::from_levels(2, {pts({"00(1)"})},
                                   Domain::of(2, {ClopenInterval(P("01(0)"), P("010(1)"))}));
        r = validate_filtering(f);
        CHECK_FALSE(r.ok);
        CHECK(r.clause == "domain");
    }

    TEST_CASE("random filterings are valid and refine deterministically")
    {
        Rng rng(3);
        for (int i = 0; i < 200; ++i) {
            const unsigned b = 2 + static_cast<unsigned>(rng.below(2));
            const Domain dom = rng.coin() ? random_domain(rng, b) : Domain::full(b);
            const Filtering f = random_filtering(rng, b, static_cast<unsigned>(rng.below(4)), dom);
            CHECK(validate_filtering(f).ok);
            const Filtering r1 = refine_canonical(f, 5);
            const Filtering r2 = refine_canonical(f, 5);
            CHECK(validate_filtering(r1).ok);
            CHECK(r1.same_levels(r2));
            for (unsigned d = 1; d <= 5; ++d) {
                const auto t = r1.tuple(d);
                CHECK(t == f.tuple(d));
                CHECK(partition_from_tuple(b, d, t).boundaries().entries() == t);
                // deepest maxima of an expanded level lie in the domain or are stored
                if (d > f.depth()) {
                    for (std::size_t j = 0; j < t.size(); ++j) {
                        if ((j + 1) % b != 0) {
                            CHECK(dom.contains(t[j]));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("cells match tuples")
    {
        Rng rng(8);
        const Filtering f = random_filtering(rng, 3, 2, Domain::full(3));
        const auto t = f.tuple(4);
        const auto part = partition_from_tuple(3, 4, t);
        Word w(4, 0);
        std::size_t i = 0;
        do {
            CHECK(f.cell(w) == part.cells[i++]);
        } while (increment_word(w, 3));
    }

    TEST_CASE("refinement")
    {
        Rng rng(21);
        const Filtering u = random_filtering(rng, 2, 3, Domain::full(2));
        CHECK(is_refinement(u, u, 5).verdict == RefinementResult::Verdict::Refines);
        CHECK(is_refinement(u, Filtering::standard(2), 3).verdict == RefinementResult::Verdict::Refines);

        const Filtering narrow = Filtering::from_levels(2, {}, Domain::of(2, {ClopenInterval::of_node(Node(2, W("0")))}));
        const auto r = is_refinement(Filtering::standard(2, 1), narrow, 1);
        CHECK(r.verdict == RefinementResult::Verdict::NotRefines);
        REQUIRE(r.witness);
        CHECK(*r.witness == P("0(1)"));

        // undecided when the cap is too shallow to find a deep maximum
        const Filtering deep = Filtering::from_levels(2, {pts({"0000001(1)"})});
        CHECK(is_refinement(deep, Filtering::standard(2), 1, 3).verdict == RefinementResult::Verdict::Undecided);
        CHECK(is_refinement(deep, Filtering::standard(2), 1, 64).verdict == RefinementResult::Verdict::Refines);
    }

    TEST_CASE("refinement is a preorder on generated filterings")
    {
        Rng rng(4);
        std::vector<Filtering> fs;
        for (int i = 0; i < 8; ++i) {
            fs.push_back(random_filtering(rng, 2, static_cast<unsigned>(rng.below(3)), Domain::full(2)));
        }
        fs.push_back(Filtering::standard(2));
        auto ref = [](const Filtering& v, const Filtering& u) {
            return is_refinement(v, u, 3).verdict == RefinementResult::Verdict::Refines;
        };
        for (const auto& a : fs) {
            CHECK(ref(a, a));
            for (const auto& b : fs) {
                for (const auto& c : fs) {
                    if (ref(a, b) && ref(b, c)) {
                        CHECK(ref(a, c));
                    }
                }
            }
        }
    }

    TEST_CASE("locate a maximum")
    {
        const Filtering s = Filtering::standard(2);
        auto loc = locate_max(s, P("0(1)"), 10);
        CHECK(loc.kind == MaxLocation::Kind::Found);
        CHECK(loc.node == W("0"));
        loc = locate_max(s, P("0110(1)"), 10);
        CHECK(loc.kind == MaxLocation::Kind::Found);
        CHECK(loc.node == W("0110"));
        CHECK(locate_max(s, P("0110(1)"), 2).kind == MaxLocation::Kind::Undecided);
        const Filtering narrow = Filtering::from_levels(2, {}, Domain::of(2, {ClopenInterval::of_node(Node(2, W("0")))}));
        CHECK(locate_max(narrow, P("10(1)"), 10).kind == MaxLocation::Kind::Absent);
    }

    TEST_CASE("depth cap from the environment")
    {
        ::setenv("RAMSEY_DEPTH_CAP", "17", 1);
        CHECK(default_depth_cap() == 17u);
        ::setenv("RAMSEY_DEPTH_CAP", "junk", 1);
        CHECK(default_depth_cap() == 64u);
        ::unsetenv("RAMSEY_DEPTH_CAP");
        CHECK(default_depth_cap() == 64u);
    }
}
