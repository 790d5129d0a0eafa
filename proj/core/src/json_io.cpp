#include "dualramsey/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dualramsey {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) {
        throw SchemaError(where, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(where, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

unsigned uint_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw SchemaError(where + "/" + key, "expected a non-negative integer");
    }
    return v.get<unsigned>();
}

unsigned base_field(const Json& j, const std::string& where)
{
    unsigned b = uint_field(j, "b", where);
    if (b < 2 || b > 36) {
        throw SchemaError(where + "/b", "base must be in [2, 36]");
    }
    return b;
}

const Json& array_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_array()) {
        throw SchemaError(where + "/" + key, "expected an array");
    }
    return v;
}

Json points_json(const std::vector<Point>& ps)
{
    Json a = Json::array();
    for (const auto& p : ps) {
        a.push_back(to_json(p, false));
    }
    return a;
}

std::vector<Point> points_from(const Json& a, LoadContext& ctx, const std::string& where, unsigned base)
{
    if (!a.is_array()) {
        throw SchemaError(where, "expected an array of points");
    }
    std::vector<Point> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(point_from_json(a[i], ctx, where + "/" + std::to_string(i), base));
    }
    return out;
}

template <class F>
auto rethrow_at(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where, e.what());
    } catch (const std::out_of_range& e) {
        throw SchemaError(where, e.what());
    }
}

} // namespace

Json to_json(const Point& p, bool with_base)
{
    Json j;
    if (with_base) {
        j["b"] = p.base();
    }
    Json stem = Json::array();
    for (Digit d : p.stem()) {
        stem.push_back(static_cast<unsigned>(d));
    }
    j["stem"] = std::move(stem);
    j["tail"] = static_cast<unsigned>(p.tail());
    return j;
}

Point point_from_json(const Json& j, LoadContext& ctx, const std::string& where, std::optional<unsigned> base)
{
    if (!j.is_object()) {
        throw SchemaError(where, "expected a point object");
    }
    unsigned b;
    if (j.contains("b")) {
        b = base_field(j, where);
        if (base && *base != b) {
            throw SchemaError(where + "/b", "base " + std::to_string(b) + " differs from enclosing base " +
                                                std::to_string(*base));
        }
    } else if (base) {
        b = *base;
    } else {
        throw SchemaError(where, "missing field \"b\"");
    }
    const Json& stem = array_field(j, "stem", where);
    Word w;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        if (!stem[i].is_number_integer() || stem[i].get<long long>() < 0 || stem[i].get<long long>() >= b) {
            throw SchemaError(where + "/stem/" + std::to_string(i), "digit must be in [0, b)");
        }
        w.push_back(static_cast<Digit>(stem[i].get<unsigned>()));
    }
    const unsigned tail = uint_field(j, "tail", where);
    if (tail >= b) {
        throw SchemaError(where + "/tail", "tail digit must be in [0, b)");
    }
    const std::size_t given = w.size();
    Point p(b, std::move(w), static_cast<Digit>(tail));
    if (p.stem().size() != given) {
        ctx.warnings.push_back(where + ": stem canonicalized to " + p.to_string());
    }
    return p;
}

Json to_json(const ClopenInterval& i) { return Json{{"lo", to_json(i.lo(), false)}, {"hi", to_json(i.hi(), false)}}; }

ClopenInterval interval_from_json(const Json& j, LoadContext& ctx, const std::string& where, unsigned base)
{
    Point lo = point_from_json(field(j, "lo", where), ctx, where + "/lo", base);
    Point hi = point_from_json(field(j, "hi", where), ctx, where + "/hi", base);
    return rethrow_at(where, [&] { return ClopenInterval(lo, hi); });
}

Json to_json(const Surjection& f)
{
    Json j;
    j["b"] = f.base();
    if (f.is_chain()) {
        j["kind"] = "chain";
        j["outer"] = to_json(f.outer());
        j["inner"] = to_json(f.inner());
        return j;
    }
    const Filtering& F = f.filtering();
    j["kind"] = "filtering";
    j["depth"] = F.depth();
    Json levels = Json::array();
    for (unsigned d = 1; d <= F.depth(); ++d) {
        levels.push_back(points_json(F.level(d)));
    }
    j["boundaries"] = std::move(levels);
    if (!F.domain().is_full()) {
        Json dom = Json::array();
        for (const auto& p : F.domain().pieces()) {
            dom.push_back(to_json(p));
        }
        j["domain"] = std::move(dom);
    }
    return j;
}

Surjection surjection_from_json(const Json& j, LoadContext& ctx, const std::string& where)
{
    const unsigned b = base_field(j, where);
    std::string kind = "filtering";
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) {
            throw SchemaError(where + "/kind", "expected a string");
        }
        kind = j["kind"].get<std::string>();
    }
    if (kind == "chain") {
        Surjection outer = surjection_from_json(field(j, "outer", where), ctx, where + "/outer");
        Surjection inner = surjection_from_json(field(j, "inner", where), ctx, where + "/inner");
        return rethrow_at(where, [&] { return Surjection::chain(outer, inner); });
    }
    if (kind != "filtering") {
        throw SchemaError(where + "/kind", "unknown kind \"" + kind + "\" (expected filtering or chain)");
    }
    const Json& bounds = array_field(j, "boundaries", where);
    std::vector<std::vector<Point>> levels;
    for (std::size_t d = 0; d < bounds.size(); ++d) {
        levels.push_back(points_from(bounds[d], ctx, where + "/boundaries/" + std::to_string(d), b));
    }
    if (j.contains("depth") && uint_field(j, "depth", where) != levels.size()) {
        throw SchemaError(where + "/depth", "depth does not match the number of boundary levels");
    }
    Domain domain = Domain::full(b);
    if (j.contains("domain")) {
        const Json& dom = array_field(j, "domain", where);
        std::vector<ClopenInterval> pieces;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            pieces.push_back(interval_from_json(dom[i], ctx, where + "/domain/" + std::to_string(i), b));
        }
        domain = rethrow_at(where + "/domain", [&] { return Domain::of(b, pieces); });
    }
    try {
        return Surjection::from_filtering(Filtering::from_levels(b, std::move(levels), std::move(domain)));
    } catch (const InvalidFiltering& e) {
        throw SchemaError(where + "/boundaries", e.what());
    }
}

Json tuple_to_json(unsigned base, const std::vector<Point>& t) { return Json{{"b", base}, {"points", points_json(t)}}; }

std::vector<Point> tuple_from_json(const Json& j, LoadContext& ctx, unsigned& base, const std::string& where)
{
    base = base_field(j, where);
    return points_from(array_field(j, "points", where), ctx, where + "/points", base);
}

Json to_json(const QCopy& y)
{
    Json r = Json::array();
    for (const auto& p : y.restriction()) {
        r.push_back(to_json(p));
    }
    return Json{{"b", 2}, {"h", to_json(y.h())}, {"restriction", std::move(r)}};
}

QCopy qcopy_from_json(const Json& j, LoadContext& ctx, unsigned cap, const std::string& where)
{
    const unsigned b = base_field(j, where);
    Surjection h = surjection_from_json(field(j, "h", where), ctx, where + "/h");
    if (h.base() != b) {
        throw SchemaError(where + "/h/b", "surjection base differs from the Q-copy base");
    }
    std::vector<ClopenInterval> pieces;
    if (j.contains("restriction")) {
        const Json& r = array_field(j, "restriction", where);
        for (std::size_t i = 0; i < r.size(); ++i) {
            pieces.push_back(interval_from_json(r[i], ctx, where + "/restriction/" + std::to_string(i), b));
        }
    } else {
        pieces.push_back(ClopenInterval::whole(b));
    }
    return rethrow_at(where, [&] { return QCopy(h, pieces, cap); });
}

Json to_json(const ColoringSpec& c)
{
    Json j;
    switch (c.kind) {
    case ColoringSpec::Kind::DevlinRelabel: j["kind"] = "devlin-relabel"; break;
    case ColoringSpec::Kind::Constant: j["kind"] = "constant"; break;
    case ColoringSpec::Kind::Hashed: j["kind"] = "hashed"; break;
    case ColoringSpec::Kind::Table: j["kind"] = "table"; break;
    }
    j["k"] = c.k;
    j["colors"] = c.colors;
    switch (c.kind) {
    case ColoringSpec::Kind::DevlinRelabel: j["relabel"] = c.relabel; break;
    case ColoringSpec::Kind::Constant: j["color"] = c.constant; break;
    case ColoringSpec::Kind::Hashed: j["seed"] = c.seed; break;
    case ColoringSpec::Kind::Table: {
        j["default"] = c.fallback;
        Json entries = Json::array();
        for (const auto& [key, color] : c.table) {
            entries.push_back(Json{{"key", key}, {"color", color}});
        }
        j["entries"] = std::move(entries);
        break;
    }
    }
    return j;
}

ColoringSpec coloring_from_json(const Json& j, LoadContext& ctx, const std::string& where)
{
    ColoringSpec c;
    const Json& kind = field(j, "kind", where);
    if (!kind.is_string()) {
        throw SchemaError(where + "/kind", "expected a string");
    }
    const std::string k = kind.get<std::string>();
    c.k = uint_field(j, "k", where);
    c.colors = uint_field(j, "colors", where);
    if (k == "devlin-relabel") {
        c.kind = ColoringSpec::Kind::DevlinRelabel;
        const Json& r = array_field(j, "relabel", where);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!r[i].is_number_unsigned()) {
                throw SchemaError(where + "/relabel/" + std::to_string(i), "expected a color index");
            }
            c.relabel.push_back(r[i].get<unsigned>());
        }
    } else if (k == "constant") {
        c.kind = ColoringSpec::Kind::Constant;
        c.constant = uint_field(j, "color", where);
    } else if (k == "hashed") {
        c.kind = ColoringSpec::Kind::Hashed;
        const Json& seed = field(j, "seed", where);
        if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
            throw SchemaError(where + "/seed", "expected a non-negative integer");
        }
        c.seed = seed.get<std::uint64_t>();
    } else if (k == "table") {
        c.kind = ColoringSpec::Kind::Table;
        c.fallback = j.contains("default") ? uint_field(j, "default", where) : 0;
        const Json& e = array_field(j, "entries", where);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const std::string w = where + "/entries/" + std::to_string(i);
            std::string key;
            if (e[i].contains("key")) {
                const Json& kj = field(e[i], "key", w);
                if (!kj.is_string()) {
                    throw SchemaError(w + "/key", "expected a string");
                }
                key = kj.get<std::string>();
            } else {
                unsigned b = 0;
                auto pts = tuple_from_json(field(e[i], "tuple", w), ctx, b, w + "/tuple");
                key = fingerprint_key(pts);
            }
            c.table[key] = uint_field(e[i], "color", w);
        }
    } else {
        throw SchemaError(where + "/kind", "unknown coloring kind \"" + k + "\"");
    }
    rethrow_at(where, [&] {
        c.check();
        return 0;
    });
    return c;
}

Json to_json(const DistanceResult& d)
{
    Json j;
    switch (d.kind) {
    case DistanceResult::Kind::Exact: j["kind"] = "exact"; break;
    case DistanceResult::Kind::ZeroToCap: j["kind"] = "zero-to-cap"; break;
    case DistanceResult::Kind::AtMost: j["kind"] = "at-most"; break;
    }
    j["value"] = d.value.to_string();
    if (!d.value.is_zero()) {
        j["exponent"] = d.value.exponent();
    }
    j["depth"] = d.depth;
    j["proven"] = d.kind == DistanceResult::Kind::Exact || d.proven_zero;
    j["text"] = d.to_string();
    return j;
}

Json to_json(const ExperimentReport& r)
{
    Json colors = Json::array();
    for (const auto& w : r.colors) {
        Json c{{"color", w.color.str()}, {"found", w.found}};
        if (w.found) {
            c["depth"] = w.depth;
            c["tuple"] = points_json(w.tuple);
            c["factor_fingerprint"] = points_json(w.factor_tuple);
            c["verified"] = w.verified;
        }
        colors.push_back(std::move(c));
    }
    return Json{{"b", r.b},
                {"k", r.k},
                {"l", r.l},
                {"t", r.t.str()},
                {"cap", r.cap},
                {"realized", r.realized()},
                {"all_verified", r.all_verified()},
                {"colors", std::move(colors)}};
}

Json to_json(const OscillationReport& r)
{
    Json w = Json::array();
    for (const auto& x : r.witnesses) {
        w.push_back(Json{{"color", x.color}, {"tuple", points_json(x.tuple)}, {"factor_fingerprint", points_json(x.factor_tuple)}});
    }
    return Json{{"regime", r.regime},
                {"guaranteed", r.guaranteed},
                {"b", r.b},
                {"eps", r.eps},
                {"k", r.params.k},
                {"l", r.params.l},
                {"t", r.params.t.str()},
                {"h", r.h_label},
                {"B", r.colors},
                {"B_size", r.colors.size()},
                {"within_bound", BigInt(r.colors.size()) <= r.params.t},
                {"candidates", r.candidates},
                {"tuples_examined", r.tuples_examined},
                {"witnesses", std::move(w)}};
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw SchemaError(path, "cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
}

} // namespace dualramsey
