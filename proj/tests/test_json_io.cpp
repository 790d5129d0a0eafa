#include "helpers.hpp"

#include <dualramsey/json_io.hpp>

#include <doctest.h>

using namespace dualramsey;
using namespace dualramsey::test;

namespace {

std::string where_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const SchemaError& e) {
        return e.where();
    }
    return "<none>";
}

} // namespace

TEST_SUITE("json_io")
{
    TEST_CASE("points")
    {
        LoadContext ctx;
        const Point p = P("012(1)", 3);
        CHECK(point_from_json(to_json(p), ctx) == p);
        const Json raw = Json::parse(R"({"b": 2, "stem": [0, 1, 1], "tail": 1})");
        CHECK(point_from_json(raw, ctx) == P("0(1)"));
        REQUIRE(ctx.warnings.size() == 1u);
        CHECK(ctx.warnings[0].find("canonicalized") != std::string::npos);
        CHECK(where_of([&] { point_from_json(Json::parse(R"({"b": 2, "stem": [0, 5], "tail": 1})"), ctx, "/x"); }) ==
              "/x/stem/1");
        CHECK(where_of([&] { point_from_json(Json::parse(R"({"b": 2, "stem": []})"), ctx, "/x"); }) == "/x");
        CHECK(where_of([&] { point_from_json(Json::parse(R"({"stem": [], "tail": 0})"), ctx, "/x", 3); }) ==
              "<none>");
    }

    TEST_CASE("surjections roundtrip")
    {
        Rng rng(3);
        LoadContext ctx;
        for (int i = 0; i < 50; ++i) {
            const unsigned b = 2 + static_cast<unsigned>(rng.below(2));
            Surjection f = random_surjection(rng, b, static_cast<unsigned>(rng.below(4)), rng.coin());
            if (i % 5 == 0) {
                f = compose(f, random_surjection(rng, b, 2));
            }
            const Json j = to_json(f);
            const Surjection g = surjection_from_json(j, ctx);
            CHECK(to_json(g) == j);
            CHECK(g.boundary_tuple(4) == f.boundary_tuple(4));
        }
    }

    TEST_CASE("schema errors carry locations")
    {
        LoadContext ctx;
        CHECK(where_of([&] { surjection_from_json(Json::parse(R"({"b": 1, "boundaries": []})"), ctx); }) == "/b");
        CHECK(where_of([&] { surjection_from_json(Json::parse(R"({"b": 2, "kind": "x"})"), ctx); }) == "/kind");
        CHECK(where_of([&] {
                  surjection_from_json(Json::parse(R"({"b": 2, "depth": 2, "boundaries": [[{"stem": [0], "tail": 1}]]})"),
                                       ctx);
              }) == "/depth");
        CHECK(where_of([&] {
                  surjection_from_json(
                      Json::parse(R"({"b": 2, "boundaries": [[{"stem": [0], "tail": 1}], [{"stem": [0], "tail": 1},
                                     {"stem": [0], "tail": 1}, {"stem": [1, 0], "tail": 1}]]})"),
                      ctx);
              }) == "/boundaries");
        CHECK(where_of([&] {
                  surjection_from_json(Json::parse(R"({"b": 2, "kind": "chain", "outer": {"b": 2, "boundaries": []},
                                                      "inner": {"b": 3, "boundaries": []}})"),
                                       ctx);
              }) == "");
    }

    TEST_CASE("tuples, Q-copies and colorings")
    {
        LoadContext ctx;
        unsigned b = 0;
        const auto t = pts({"0(1)", "10(1)"});
        CHECK(tuple_from_json(tuple_to_json(2, t), ctx, b) == t);
        CHECK(b == 2u);

        const QCopy y(Surjection::identity(2), {ClopenInterval::of_node(Node(2, W("01")))});
        const QCopy y2 = qcopy_from_json(to_json(y), ctx, 64);
        CHECK(y2.restriction() == y.restriction());
        CHECK(where_of([&] {
                  qcopy_from_json(Json::parse(R"({"b": 3, "h": {"b": 3, "boundaries": []}})"), ctx, 64);
              }) == "");

        ColoringSpec c;
        c.kind = ColoringSpec::Kind::Table;
        c.k = 1;
        c.colors = 3;
        c.fallback = 2;
        c.table["0(1)"] = 1;
        const ColoringSpec c2 = coloring_from_json(to_json(c), ctx);
        CHECK(c2.table == c.table);
        CHECK(c2.fallback == 2u);
        const Json by_tuple = Json::parse(
            R"({"kind": "table", "k": 1, "colors": 2, "entries": [{"tuple": {"b": 2, "points": [{"stem": [0], "tail": 1}]}, "color": 1}]})");
        CHECK(coloring_from_json(by_tuple, ctx).color(pts({"0(1)"})) == 1u);
        CHECK(where_of([&] { coloring_from_json(Json::parse(R"({"kind": "x", "k": 1, "colors": 2})"), ctx); }) ==
              "/kind");
        CHECK(where_of([&] { coloring_from_json(Json::parse(R"({"kind": "hashed", "k": 1, "colors": 2, "seed": "a"})"), ctx); }) ==
              "/seed");
    }

    TEST_CASE("reports have no timing fields")
    {
        const Json r = to_json(realize_all_colors(Surjection::identity(2), 1, 10));
        CHECK_FALSE(r.contains("seconds"));
        CHECK(r["realized"] == 1);
        const Json d = to_json(distance(Surjection::identity(2), Surjection::identity(2), 5));
        CHECK(d["text"] == "0 (to cap 5)");
        CHECK(d["proven"] == true);
    }
}
