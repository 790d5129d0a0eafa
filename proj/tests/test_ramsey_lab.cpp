#include "helpers.hpp"

#include <dualramsey/ramsey_lab.hpp>

#include <doctest.h>

#include <set>

using namespace dualramsey;
using namespace dualramsey::test;

namespace {

Surjection narrow_h()
{
    return Surjection::from_filtering(
        Filtering::from_levels(2, {}, Domain::of(2, {ClopenInterval::of_node(Node(2, W("0")))})));
}

bool subset_of(const QCopy& z, const QCopy& y)
{
    for (const auto& p : z.restriction()) {
        bool inside = false;
        for (const auto& q : y.restriction()) {
            inside = inside || q.contains(p);
        }
        if (!inside) {
            return false;
        }
    }
    return z.h().shares_rep(y.h());
}

} // namespace

TEST_SUITE("ramsey_lab")
{
    TEST_CASE("epsilon parameters")
    {
        auto p = epsilon_parameters(2, 0.3);
        CHECK(p.k == 2u);
        CHECK(p.l == 3u);
        CHECK(p.t == 16);
        p = epsilon_parameters(2, 0.6);
        CHECK(p.k == 1u);
        CHECK(p.l == 1u);
        CHECK(p.t == 1);
        p = epsilon_parameters(3, 0.5);
        CHECK(p.k == 2u);
        CHECK(p.l == 8u);
        CHECK(p.t == tangent_number(8));
        // exact powers of two sit on the boundary
        CHECK(epsilon_parameters(2, 0.25).k == 3u);
        CHECK(epsilon_parameters(2, 1.0).k == 1u);
        CHECK_THROWS(epsilon_parameters(2, 0.0));
        CHECK_THROWS(epsilon_parameters(2, 1.5));
        CHECK_THROWS(epsilon_parameters(1, 0.5));
        CHECK_THROWS_AS(epsilon_parameters(2, 0.001), std::out_of_range);
    }

    TEST_CASE("epsilon parameters are monotone")
    {
        EpsilonParameters prev = epsilon_parameters(2, 1.0);
        for (double eps = 1.0; eps > 0.005; eps *= 0.93) {
            const auto p = epsilon_parameters(2, eps);
            CHECK(p.k >= prev.k);
            CHECK(p.l >= prev.l);
            CHECK(p.t >= prev.t);
            prev = p;
        }
    }

    TEST_CASE("lower-bound coloring")
    {
        CHECK(lower_bound_coloring(Surjection::identity(2), 1) == 0);
        Rng rng(5);
        const Surjection f = random_surjection(rng, 2, 2);
        const Surjection g = Surjection::from_filtering(random_filtering(rng, 2, 4, Domain::full(2), {f.filtering().level(1), f.filtering().level(2)}));
        CHECK(lower_bound_coloring(f, 2) == lower_bound_coloring(g, 2));
        // the standard fingerprint at depth 2 is not diagonal: 0 is a prefix of 00
        CHECK(lower_bound_coloring(Surjection::identity(2), 2) == 0);
    }

    TEST_CASE("realize all colors")
    {
        const auto r1 = realize_all_colors(Surjection::identity(2), 1, 20);
        CHECK(r1.t == 1);
        CHECK(r1.realized() == 1u);
        CHECK(r1.all_verified());

        const auto r = realize_all_colors(Surjection::identity(2), 2, 20);
        CHECK(r.realized() == 16u);
        CHECK(r.all_verified());
        for (const auto& w : r.colors) {
            CHECK(canonical_coloring(w.tuple) == w.color);
        }
        CHECK_THROWS(realize_all_colors(Surjection::identity(3), 2, 20));
    }

    TEST_CASE("non-scattered pieces")
    {
        const Surjection id = Surjection::identity(2);
        CHECK(nonscattered_in(id, ClopenInterval::of_node(Node(2, W("0110"))), 20) == Tri::Yes);
        const Surjection h = narrow_h();
        CHECK(nonscattered_in(h, ClopenInterval::of_node(Node(2, W("1"))), 20) == Tri::No);
        CHECK(nonscattered_in(h, ClopenInterval::of_node(Node(2, W("01"))), 20) == Tri::Yes);
        CHECK(contains_full_cell(id, ClopenInterval::of_node(Node(2, W("01"))), 20) == Tri::Yes);
        CHECK(to_string(Tri::Pending) == "pending");
    }

    TEST_CASE("non-scatteredness agrees with the full-cell search")
    {
        Rng rng(12);
        for (int i = 0; i < 30; ++i) {
            const Surjection h = random_surjection(rng, 2, static_cast<unsigned>(rng.below(3)), true);
            for (const char* w : {"0", "1", "00", "01", "10", "11", "010", "101"}) {
                const auto q = ClopenInterval::of_node(Node(2, W(w)));
                const Tri exact = nonscattered_in(h, q, 20);
                const Tri search = contains_full_cell(h, q, 20);
                CHECK(exact != Tri::Pending);
                if (search == Tri::Yes) {
                    CHECK(exact == Tri::Yes);
                }
                if (exact == Tri::No) {
                    CHECK(search != Tri::Yes);
                }
            }
        }
    }

    TEST_CASE("Q-copies")
    {
        const Surjection h = narrow_h();
        CHECK_THROWS_AS(QCopy(h, {ClopenInterval::of_node(Node(2, W("1")))}), std::invalid_argument);
        CHECK_THROWS_AS(QCopy(Surjection::identity(3), {ClopenInterval::whole(3)}), std::invalid_argument);
        const QCopy y(h, {ClopenInterval::of_node(Node(2, W("0")))});
        CHECK(y.in_tree(W("01")) == Tri::Yes);
        CHECK(y.in_tree(W("1")) == Tri::No);
    }

    TEST_CASE("perfect tree")
    {
        const auto whole = perfect_tree(QCopy::whole(Surjection::identity(2)), 3);
        CHECK(whole.size() == 15u);
        for (const auto& n : whole) {
            CHECK(n.splitting);
        }

        const QCopy y(Surjection::identity(2), {ClopenInterval::of_node(Node(2, W("0")))});
        const auto t = perfect_tree(y, 3);
        std::set<Word> words;
        for (const auto& n : t) {
            words.insert(n.word);
            CHECK((n.word.empty() || n.word[0] == 0));
        }
        CHECK(t.size() == 1u + 1u + 2u + 4u);
        CHECK_FALSE(t.front().splitting);
        // prefix closed
        for (const auto& w : words) {
            if (!w.empty()) {
                CHECK(words.count(Word(w.begin(), w.end() - 1)) == 1u);
            }
        }
    }

    TEST_CASE("perfect tree of random Q-copies")
    {
        Rng rng(19);
        for (int i = 0; i < 20; ++i) {
            const Surjection h = random_surjection(rng, 2, static_cast<unsigned>(rng.below(3)), rng.coin());
            const QCopy y = QCopy::whole(h);
            const auto t = perfect_tree(y, 6);
            std::set<Word> words;
            for (const auto& n : t) {
                words.insert(n.word);
            }
            for (const auto& n : t) {
                if (n.word.size() > 3) {
                    continue;
                }
                // some descendant within three levels splits
                bool found = n.pending;
                for (const auto& m : t) {
                    found = found || (m.splitting && m.word.size() >= n.word.size() &&
                                      m.word.size() <= n.word.size() + 3 &&
                                      std::equal(n.word.begin(), n.word.end(), m.word.begin()));
                }
                CHECK(found);
            }
        }
    }

    TEST_CASE("omega coloring")
    {
        const QCopy id = QCopy::whole(Surjection::identity(2));
        CHECK(omega_coloring(id) == 0u);
        const QCopy low(Surjection::identity(2), {ClopenInterval::of_node(Node(2, W("0")))});
        CHECK(omega_coloring(low) == 0u);
        const auto br = splitting_branches(id, 4, 4);
        CHECK(br.min_splits.size() == 4u);
        CHECK(br.min_splits[3] == W("000"));
        CHECK(br.max_splits[2] == W("11"));
    }

    TEST_CASE("omega witnesses")
    {
        const QCopy id = QCopy::whole(Surjection::identity(2));
        for (unsigned r = 0; r <= 8; ++r) {
            const OmegaWitness w = build_witness(id, r);
            CHECK(omega_coloring(w.z) == r);
            CHECK(subset_of(w.z, id));
            CHECK(w.m >= r);
        }
        Rng rng(29);
        for (int i = 0; i < 10; ++i) {
            const QCopy y = QCopy::whole(random_surjection(rng, 2, 2, rng.coin()));
            for (unsigned r : {0u, 3u, 5u}) {
                const OmegaWitness w = build_witness(y, r);
                CHECK(omega_coloring(w.z) == r);
                CHECK(subset_of(w.z, y));
            }
        }
    }

    TEST_CASE("coloring specs")
    {
        ColoringSpec c;
        c.kind = ColoringSpec::Kind::Constant;
        c.k = 2;
        c.colors = 3;
        c.constant = 2;
        const auto fp = Surjection::identity(2).boundary_tuple(2);
        CHECK(c.color(fp) == 2u);
        CHECK(c.factors_through_types());

        ColoringSpec h;
        h.kind = ColoringSpec::Kind::Hashed;
        h.k = 2;
        h.colors = 50;
        h.seed = 4;
        CHECK(h.color(fp) == h.color(fp));
        CHECK(h.color(fp) < 50u);
        CHECK_FALSE(h.factors_through_types());

        ColoringSpec t;
        t.kind = ColoringSpec::Kind::Table;
        t.k = 2;
        t.colors = 4;
        t.fallback = 1;
        t.table[fingerprint_key(fp)] = 3;
        CHECK(t.color(fp) == 3u);
        CHECK(t.color(pts({"000(1)", "0(1)", "10(1)"})) == 1u);
        CHECK(fingerprint_key(fp) == "00(1),0(1),10(1)");

        ColoringSpec bad = c;
        bad.constant = 3;
        CHECK_THROWS(bad.check());
        ColoringSpec rel;
        rel.kind = ColoringSpec::Kind::DevlinRelabel;
        rel.k = 2;
        rel.colors = 2;
        CHECK_THROWS(rel.check());
    }

    TEST_CASE("oscillation search")
    {
        ColoringSpec c;
        c.kind = ColoringSpec::Kind::Constant;
        c.k = 2;
        c.colors = 5;
        c.constant = 4;
        auto r = oscillation_search(c, 2, 0.3, 0, 1);
        CHECK(r.regime == "exact");
        CHECK(r.colors == std::vector<unsigned>{4});

        ColoringSpec rel;
        rel.kind = ColoringSpec::Kind::DevlinRelabel;
        rel.k = 2;
        rel.colors = 64;
        for (unsigned i = 0; i < 16; ++i) {
            rel.relabel.push_back((i * 37) % 64);
        }
        r = oscillation_search(rel, 2, 0.3, 0, 1);
        CHECK(r.guaranteed);
        CHECK(r.colors.size() == 16u);
        CHECK(r.witnesses.size() == 16u);
        CHECK_THROWS(oscillation_search(rel, 2, 0.6, 0, 1));

        ColoringSpec hashed;
        hashed.kind = ColoringSpec::Kind::Hashed;
        hashed.k = 2;
        hashed.colors = 50;
        hashed.seed = 9;
        r = oscillation_search(hashed, 2, 0.3, 4, 3);
        CHECK(r.regime == "heuristic");
        CHECK_FALSE(r.guaranteed);
        CHECK(r.colors.size() >= 1u);
        CHECK(r.candidates == 5u);
        const auto again = oscillation_search(hashed, 2, 0.3, 4, 3);
        CHECK(again.colors == r.colors);
        CHECK(again.h_label == r.h_label);
    }
}
