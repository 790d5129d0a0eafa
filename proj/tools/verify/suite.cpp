#include "suite.hpp"

#include "oracles.hpp"

#include <dualramsey/random.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace dualramsey::verify {

namespace {

using Failure = std::optional<std::string>;

// Frozen after checking against both tangent oracles.
const char* const kTangent[] = {"1", "2", "16", "272", "7936", "353792", "22368256"};

struct Case {
    Json json;
    std::function<Failure()> check;
};

std::vector<Point> standard(const Surjection& f, unsigned d) { return f.boundary_tuple(d); }

std::string tuple_text(const std::vector<Point>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + t[i].to_string();
    }
    return s + ")";
}

Failure same_fingerprints(const Surjection& a, const Surjection& b, unsigned depth, const char* what)
{
    for (unsigned d = 1; d <= depth; ++d) {
        if (standard(a, d) != standard(b, d)) {
            return std::string(what) + ": fingerprints differ at depth " + std::to_string(d);
        }
    }
    return std::nullopt;
}

// 1 ------------------------------------------------------------------

Failure check_tangent(unsigned k, const std::string& expected)
{
    const BigInt t = tangent_number(k);
    if (t.str() != expected) {
        return "t_" + std::to_string(k) + " = " + t.str() + ", expected " + expected;
    }
    const auto zig = oracle::zigzag_numbers(2 * k - 1);
    if (zig.back() != t) {
        return "Seidel triangle gives " + zig.back().str();
    }
    const BigInt taylor = oracle::tan_derivative_at_zero(2 * k - 1);
    if (taylor != t) {
        return "Taylor recurrence gives " + taylor.str();
    }
    if (k <= 5) {
        const auto alt = oracle::alternating_permutations(2 * k - 1);
        if (BigInt(alt) != t) {
            return "alternating permutations give " + std::to_string(alt);
        }
    }
    return std::nullopt;
}

std::vector<Case> cases_tangent(std::uint64_t)
{
    std::vector<Case> out;
    for (unsigned k = 1; k <= 5; ++k) {
        std::string e = kTangent[k - 1];
        out.push_back({Json{{"k", k}, {"expected", e}}, [k, e] { return check_tangent(k, e); }});
    }
    return out;
}

// 2 ------------------------------------------------------------------

Failure check_types(unsigned l, const std::string& expected)
{
    const auto types = enumerate_types(l);
    if (std::to_string(types.size()) != expected) {
        return "enumerate_types(" + std::to_string(l) + ") has " + std::to_string(types.size()) + " types, expected " +
               expected;
    }
    if (BigInt(types.size()) != tangent_number(l)) {
        return "count differs from t_" + std::to_string(l);
    }
    std::set<std::string> enc;
    for (std::size_t i = 0; i < types.size(); ++i) {
        enc.insert(types[i].encoding());
        if (types[i].rank() != BigInt(i) || !(TreeType::unrank(l, BigInt(i)) == types[i])) {
            return "rank/unrank mismatch at " + std::to_string(i);
        }
    }
    if (enc.size() != types.size()) {
        return "duplicate encodings";
    }
    if (l <= 3) {
        if (oracle::realized_types(l, 7) != enc) {
            return "types of explicit antichains differ from the enumeration";
        }
    }
    return std::nullopt;
}

std::vector<Case> cases_types(std::uint64_t)
{
    std::vector<Case> out;
    for (unsigned l = 1; l <= 4; ++l) {
        std::string e = kTangent[l - 1];
        out.push_back({Json{{"l", l}, {"expected", e}}, [l, e] { return check_types(l, e); }});
    }
    return out;
}

// 3 ------------------------------------------------------------------

Failure check_roundtrip(const Filtering& F)
{
    const Surjection s = Surjection::from_filtering(F);
    for (unsigned d = 0; d <= 6; ++d) {
        const Filtering G = to_filtering(s, d);
        if (G.depth() != d) {
            return "to_filtering(., " + std::to_string(d) + ") has depth " + std::to_string(G.depth());
        }
        if (auto v = validate_filtering(G); !v.ok) {
            return "to_filtering(., " + std::to_string(d) + ") invalid: " + v.message;
        }
        const unsigned upto = d >= F.depth() ? 6u : d;
        for (unsigned j = 1; j <= upto; ++j) {
            if (G.tuple(j) != F.tuple(j)) {
                return "d=" + std::to_string(d) + ": boundary tuple differs at depth " + std::to_string(j);
            }
        }
        if (d >= F.depth()) {
            const Surjection back = Surjection::from_filtering(G);
            if (auto f = same_fingerprints(back, s, 6, "from_filtering(to_filtering)")) {
                return f;
            }
        }
    }
    return std::nullopt;
}

std::vector<Case> cases_roundtrip(std::uint64_t seed)
{
    Rng rng(seed ^ 0x3001);
    std::vector<Case> out;
    for (int i = 0; i < 1000; ++i) {
        const unsigned b = i % 2 ? 3 : 2;
        const auto depth = static_cast<unsigned>(rng.below(5));
        const bool restrict = rng.below(4) == 0;
        Surjection s = random_surjection(rng, b, depth, restrict, b == 2 ? 3 : 2);
        out.push_back({Json{{"f", to_json(s)}}, [s] { return check_roundtrip(s.filtering()); }});
    }
    return out;
}

// 4 ------------------------------------------------------------------

Failure check_monoid(const Surjection& f, const Surjection& g, const Surjection& h)
{
    const Surjection id = Surjection::identity(f.base());
    if (auto e = same_fingerprints(compose(f, id), f, 8, "f o id")) {
        return e;
    }
    if (auto e = same_fingerprints(compose(id, f), f, 8, "id o f")) {
        return e;
    }
    return same_fingerprints(compose(compose(f, g), h), compose(f, compose(g, h)), 8, "associativity");
}

std::vector<Case> cases_monoid(std::uint64_t seed)
{
    Rng rng(seed ^ 0x4001);
    std::vector<Case> out;
    for (int i = 0; i < 200; ++i) {
        const unsigned b = i % 4 == 3 ? 3 : 2;
        auto pick = [&] {
            const auto depth = static_cast<unsigned>(rng.below(4));
            const bool restrict = rng.below(4) == 0;
            return random_surjection(rng, b, depth, restrict, 2);
        };
        Surjection f = pick(), g = pick(), h = pick();
        out.push_back({Json{{"f", to_json(f)}, {"g", to_json(g)}, {"h", to_json(h)}},
                       [f, g, h] { return check_monoid(f, g, h); }});
    }
    return out;
}

// 5 ------------------------------------------------------------------

constexpr unsigned kStemLen = 10;
constexpr unsigned kPrecision = 12;

Failure check_distance(const Surjection& f, const Surjection& g)
{
    const DistanceResult d = distance(f, g);
    const auto sup = oracle::sup_distance_exponent(f, g, kStemLen, kPrecision);
    if (!sup) {
        if (d.kind == DistanceResult::Kind::Exact && !d.value.is_zero() && d.value.exponent() < kPrecision) {
            return "distance " + d.to_string() + " but the sampling oracle sees no difference";
        }
        if (d.kind == DistanceResult::Kind::AtMost) {
            return "distance " + d.to_string() + " is not decided";
        }
        return std::nullopt;
    }
    const std::string want = Dyadic::pow2_neg(*sup).to_string();
    if (d.kind != DistanceResult::Kind::Exact || d.value.is_zero() || d.value.exponent() != *sup) {
        return "distance " + d.to_string() + ", oracle " + want;
    }
    return std::nullopt;
}

std::vector<Case> cases_distance(std::uint64_t seed)
{
    Rng rng(seed ^ 0x5001);
    std::vector<Case> out;
    LoadContext ctx;
    for (int i = 0; i < 500; ++i) {
        const auto depth = static_cast<unsigned>(1 + rng.below(4));
        const Domain dom = rng.below(4) == 0 ? random_domain(rng, 2) : Domain::full(2);
        const Filtering F = random_filtering(rng, 2, depth, dom, {}, 2);
        Surjection f = Surjection::from_filtering(F);
        Surjection g = f;
        std::string kind;
        switch (i % 5) {
        case 0:
            kind = "identical";
            g = surjection_from_json(to_json(f), ctx);
            break;
        case 1:
        case 2: {
            kind = "near";
            const auto keep = static_cast<unsigned>(rng.below(depth + 1));
            std::vector<std::vector<Point>> prefix;
            for (unsigned d = 1; d <= keep; ++d) {
                prefix.push_back(F.level(d));
            }
            const auto gdepth = std::max(keep, static_cast<unsigned>(1 + rng.below(4)));
            g = Surjection::from_filtering(random_filtering(rng, 2, gdepth, dom, prefix, 2));
            break;
        }
        case 3:
            kind = "independent";
            g = random_surjection(rng, 2, static_cast<unsigned>(rng.below(4)), rng.below(4) == 0, 2);
            break;
        default: {
            kind = "chains";
            Surjection h = random_surjection(rng, 2, static_cast<unsigned>(rng.below(3)), false, 2);
            const auto keep = static_cast<unsigned>(rng.below(depth + 1));
            std::vector<std::vector<Point>> prefix;
            for (unsigned d = 1; d <= keep; ++d) {
                prefix.push_back(F.level(d));
            }
            g = compose(Surjection::from_filtering(random_filtering(rng, 2, depth, dom, prefix, 2)), h);
            f = compose(f, h);
            break;
        }
        }
        out.push_back({Json{{"kind", kind}, {"f", to_json(f)}, {"g", to_json(g)}},
                       [f, g] { return check_distance(f, g); }});
    }
    return out;
}

// 6 ------------------------------------------------------------------

Failure check_factor(const Surjection& f, const Surjection& h, unsigned k)
{
    const Surjection g = compose(f, h);
    const Surjection f2 = factor_through(g, h, 6);
    if (auto e = same_fingerprints(f2, f, 6, "factor_through(f o h, h)")) {
        return e;
    }
    const auto t = g.boundary_tuple(k);
    const Surjection f3 = tuple_to_factor(h, t);
    if (compose(f3, h).boundary_tuple(k) != t) {
        return "tuple_to_factor: f' o h does not reproduce the tuple at depth " + std::to_string(k);
    }
    if (f3.boundary_tuple(k) != f.boundary_tuple(k)) {
        return "tuple_to_factor: factor differs from f at depth " + std::to_string(k);
    }
    return std::nullopt;
}

std::vector<Case> cases_factor(std::uint64_t seed)
{
    Rng rng(seed ^ 0x6001);
    std::vector<Case> out;
    for (int i = 0; i < 200; ++i) {
        const unsigned b = i % 4 == 3 ? 3 : 2;
        Surjection f = random_surjection(rng, b, static_cast<unsigned>(rng.below(4)), rng.below(4) == 0, 2);
        Surjection h = random_surjection(rng, b, static_cast<unsigned>(rng.below(4)), rng.below(4) == 0, 2);
        const auto k = static_cast<unsigned>(1 + rng.below(3));
        out.push_back({Json{{"f", to_json(f)}, {"h", to_json(h)}, {"k", k}},
                       [f, h, k] { return check_factor(f, h, k); }});
    }
    return out;
}

// 7 ------------------------------------------------------------------

Failure check_realize(const Surjection& h)
{
    const ExperimentReport r = realize_all_colors(h, 2, 20);
    if (r.t != 16 || r.realized() != 16 || !r.all_verified()) {
        return "realized " + std::to_string(r.realized()) + " of " + r.t.str() + " colors" +
               (r.all_verified() ? "" : ", some unverified");
    }
    for (const auto& w : r.colors) {
        if (canonical_coloring(w.tuple) != w.color) {
            return "witness tuple for color " + w.color.str() + " has another type";
        }
        const Surjection f = tuple_to_surjection(2, 2, w.factor_tuple);
        if (lower_bound_coloring(compose(f, h), 2) != w.color) {
            return "f o h for color " + w.color.str() + " recolors differently";
        }
    }
    return std::nullopt;
}

std::vector<Case> cases_realize(std::uint64_t seed)
{
    Rng rng(seed ^ 0x7001);
    std::vector<Case> out;
    const Surjection id = Surjection::identity(2);
    out.push_back({Json{{"h", to_json(id)}}, [id] { return check_realize(id); }});
    for (int i = 0; i < 20; ++i) {
        Surjection h = random_surjection(rng, 2, static_cast<unsigned>(1 + rng.below(3)), false, 3);
        out.push_back({Json{{"h", to_json(h)}}, [h] { return check_realize(h); }});
    }
    return out;
}

// 8 ------------------------------------------------------------------

bool piece_inside(const ClopenInterval& z, const std::vector<ClopenInterval>& ys)
{
    return std::any_of(ys.begin(), ys.end(), [&](const ClopenInterval& y) { return y.contains(z); });
}

Failure check_witness(const QCopy& y, unsigned r)
{
    const OmegaWitness w = build_witness(y, r);
    if (const unsigned c = omega_coloring(w.z); c != r) {
        return "omega_coloring(Z) = " + std::to_string(c) + ", target " + std::to_string(r);
    }
    if (!w.z.h().shares_rep(y.h())) {
        return "Z is not drawn from the same surjection";
    }
    for (const auto& p : w.z.restriction()) {
        if (!piece_inside(p, y.restriction())) {
            return "Z piece " + p.to_string() + " leaves Y";
        }
    }
    return std::nullopt;
}

QCopy random_qcopy(Rng& rng)
{
    Surjection h = random_surjection(rng, 2, static_cast<unsigned>(rng.below(4)), rng.coin(), 3);
    auto node = [&] {
        Word w(rng.below(4));
        for (auto& d : w) {
            d = static_cast<Digit>(rng.below(2));
        }
        return w;
    };
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<ClopenInterval> pieces;
        const auto n = 1 + rng.below(2);
        for (std::uint64_t i = 0; i < n; ++i) {
            Word u = node(), v = node();
            Point lo = node_min(Node(2, u)), hi = node_max(Node(2, v));
            if (hi < lo) {
                lo = node_min(Node(2, v));
                hi = node_max(Node(2, u));
            }
            pieces.emplace_back(lo, hi);
        }
        try {
            return QCopy(h, pieces);
        } catch (const std::invalid_argument&) {
        }
    }
    return QCopy::whole(h);
}

std::vector<Case> cases_witness(std::uint64_t seed)
{
    Rng rng(seed ^ 0x8001);
    std::vector<QCopy> ys{QCopy::whole(Surjection::identity(2))};
    for (int i = 0; i < 50; ++i) {
        ys.push_back(random_qcopy(rng));
    }
    std::vector<Case> out;
    for (const auto& y : ys) {
        for (unsigned r = 0; r <= 8; ++r) {
            out.push_back({Json{{"y", to_json(y)}, {"r", r}}, [y, r] { return check_witness(y, r); }});
        }
    }
    return out;
}

// 9 ------------------------------------------------------------------

Failure check_oscillation(const ColoringSpec& c)
{
    const OscillationReport r = oscillation_search(c, 2, 0.3, 0, 0);
    if (r.regime != "exact" || !r.guaranteed) {
        return "regime " + r.regime;
    }
    if (r.colors.size() > 16) {
        return "|B| = " + std::to_string(r.colors.size());
    }
    std::set<unsigned> image;
    if (c.kind == ColoringSpec::Kind::Constant) {
        image.insert(c.constant);
    } else {
        image.insert(c.relabel.begin(), c.relabel.end());
    }
    if (std::set<unsigned>(r.colors.begin(), r.colors.end()) != image) {
        return "B differs from the image of the relabeling";
    }
    if (r.witnesses.size() != r.colors.size()) {
        return "missing witnesses";
    }
    const Surjection id = Surjection::identity(2);
    for (const auto& w : r.witnesses) {
        if (c.color(w.factor_tuple) != w.color) {
            return "witness factor for color " + std::to_string(w.color) + " has another color";
        }
        const Surjection f = tuple_to_factor(id, w.tuple);
        if (f.boundary_tuple(2) != w.factor_tuple || compose(f, id).boundary_tuple(2) != w.tuple) {
            return "witness for color " + std::to_string(w.color) + " does not factor: " + tuple_text(w.tuple);
        }
        const DistanceResult d = distance(compose(f, id), tuple_to_surjection(2, 2, w.tuple), 2);
        if (!(d.value.is_zero() || d.value.exponent() >= 2)) {
            return "witness for color " + std::to_string(w.color) + " lies outside its fingerprint ball";
        }
    }
    return std::nullopt;
}

std::vector<ColoringSpec> oscillation_colorings(std::uint64_t seed)
{
    Rng rng(seed ^ 0x9001);
    std::vector<ColoringSpec> out;
    for (unsigned K : {1u, 2u, 3u, 5u, 8u, 16u, 17u, 32u, 64u}) {
        for (int rep = 0; rep < 2; ++rep) {
            ColoringSpec c;
            c.kind = ColoringSpec::Kind::DevlinRelabel;
            c.k = 2;
            c.colors = K;
            for (int i = 0; i < 16; ++i) {
                c.relabel.push_back(static_cast<unsigned>(rng.below(K)));
            }
            out.push_back(c);
        }
    }
    ColoringSpec ident;
    ident.kind = ColoringSpec::Kind::DevlinRelabel;
    ident.k = 2;
    ident.colors = 16;
    for (unsigned i = 0; i < 16; ++i) {
        ident.relabel.push_back(i);
    }
    out.push_back(ident);
    for (unsigned K : {1u, 64u}) {
        ColoringSpec c;
        c.kind = ColoringSpec::Kind::Constant;
        c.k = 2;
        c.colors = K;
        c.constant = static_cast<unsigned>(rng.below(K));
        out.push_back(c);
    }
    return out;
}

std::vector<Case> cases_oscillation(std::uint64_t seed)
{
    std::vector<Case> out;
    for (const auto& c : oscillation_colorings(seed)) {
        out.push_back({Json{{"coloring", to_json(c)}}, [c] { return check_oscillation(c); }});
    }
    return out;
}

// 10 -----------------------------------------------------------------

std::vector<Case> cases_determinism(std::uint64_t seed);

using Generator = std::vector<Case> (*)(std::uint64_t);

Generator generator(int id)
{
    switch (id) {
    case 1: return cases_tangent;
    case 2: return cases_types;
    case 3: return cases_roundtrip;
    case 4: return cases_monoid;
    case 5: return cases_distance;
    case 6: return cases_factor;
    case 7: return cases_realize;
    case 8: return cases_witness;
    case 9: return cases_oscillation;
    case 10: return cases_determinism;
    default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
}

std::string draw_digest(std::uint64_t seed)
{
    std::string all;
    for (int id = 1; id <= 9; ++id) {
        for (const auto& c : generator(id)(seed)) {
            all += c.json.dump();
            all += '\n';
        }
    }
    ColoringSpec hashed;
    hashed.kind = ColoringSpec::Kind::Hashed;
    hashed.k = 2;
    hashed.colors = 7;
    hashed.seed = seed;
    all += to_json(oscillation_search(hashed, 2, 0.3, 4, seed)).dump();
    return all;
}

std::vector<Case> cases_determinism(std::uint64_t seed)
{
    return {{Json{{"seed", seed}}, [seed]() -> Failure {
                 if (draw_digest(seed) != draw_digest(seed)) {
                     return std::string("two draws from the same seed differ");
                 }
                 return std::nullopt;
             }}};
}

Failure guarded(const std::function<Failure()>& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

std::string detail_for(int id, std::size_t cases)
{
    std::ostringstream os;
    switch (id) {
    case 1: os << "t_1..t_5 against Seidel triangle, Taylor recurrence and permutation count"; break;
    case 2: os << "l = 1..4, ranks bijective, l <= 3 against explicit antichains"; break;
    case 3: os << cases << " filterings, d = 0..6"; break;
    case 4: os << cases << " triples to depth 8"; break;
    case 5: os << cases << " pairs, stems <= " << kStemLen; break;
    case 6: os << cases << " pairs to depth 6"; break;
    case 7: os << cases << " surjections, k = 2, cap 20"; break;
    case 8: os << cases << " (Y, r) pairs, r <= 8"; break;
    case 9: os << cases << " relabelings, b = 2, eps = 0.3"; break;
    case 10: os << "case draws and a seeded heuristic search repeated"; break;
    }
    return os.str();
}

} // namespace

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list{
        {1, "tangent numbers"},        {2, "type counts"},         {3, "D-bijection roundtrip"},
        {4, "monoid laws"},            {5, "metric criterion"},    {6, "factorization roundtrip"},
        {7, "lower-bound realization"}, {8, "omega-coloring witnesses"}, {9, "oscillation exact regime"},
        {10, "determinism"},
    };
    return list;
}

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = criteria().at(static_cast<std::size_t>(id - 1)).name;
    std::vector<Case> cases;
    try {
        cases = generator(id)(seed);
    } catch (const std::exception& e) {
        r.failures = 1;
        r.detail = std::string("case generation failed: ") + e.what();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    r.cases = cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (Failure f = guarded(cases[i].check)) {
            if (r.failures++ == 0) {
                r.counterexample =
                    Json{{"criterion", id}, {"seed", seed}, {"index", i}, {"case", cases[i].json}, {"message", *f}};
            }
        }
    }
    r.detail = detail_for(id, r.cases);
    if (r.counterexample) {
        r.detail += "; first failure: " + (*r.counterexample)["message"].get<std::string>();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::vector<int>& only)
{
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) {
            out.push_back(run_criterion(c.id, seed));
        }
    }
    return out;
}

Json report_json(std::uint64_t seed, const std::vector<CriterionResult>& results)
{
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed();
        Json j{{"id", r.id},           {"name", r.name},     {"status", r.passed() ? "pass" : "fail"},
               {"cases", r.cases},     {"failures", r.failures}, {"detail", r.detail}};
        if (r.counterexample) {
            j["counterexample"] = *r.counterexample;
        }
        list.push_back(std::move(j));
    }
    return Json{{"seed", seed}, {"passed", all}, {"criteria", std::move(list)}};
}

std::string report_table(const std::vector<CriterionResult>& results)
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed() ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << "  " << r.name;
        os << std::string(r.name.size() < 26 ? 26 - r.name.size() : 1, ' ');
        os << r.cases - r.failures << "/" << r.cases << "  " << r.detail << "\n";
    }
    return os.str();
}

std::optional<std::string> replay(const Json& dump)
{
    if (!dump.is_object() || !dump.contains("criterion") || !dump["criterion"].is_number_integer()) {
        throw SchemaError("/criterion", "expected an integer criterion id");
    }
    if (!dump.contains("case") || !dump["case"].is_object()) {
        throw SchemaError("/case", "expected an object");
    }
    const int id = dump["criterion"].get<int>();
    const Json& c = dump["case"];
    LoadContext ctx;
    auto uint_at = [&](const char* key) {
        if (!c.contains(key) || !c[key].is_number_unsigned()) {
            throw SchemaError(std::string("/case/") + key, "expected a non-negative integer");
        }
        return c[key].get<unsigned>();
    };
    auto string_at = [&](const char* key) {
        if (!c.contains(key) || !c[key].is_string()) {
            throw SchemaError(std::string("/case/") + key, "expected a string");
        }
        return c[key].get<std::string>();
    };
    auto surj = [&](const char* key) {
        if (!c.contains(key)) {
            throw SchemaError(std::string("/case/") + key, "missing");
        }
        return surjection_from_json(c[key], ctx, std::string("/case/") + key);
    };
    switch (id) {
    case 1: {
        const unsigned k = uint_at("k");
        if (k < 1 || k > 7) {
            throw SchemaError("/case/k", "k must be in [1, 7]");
        }
        return guarded([&] { return check_tangent(k, string_at("expected")); });
    }
    case 2: {
        const unsigned l = uint_at("l");
        if (l < 1 || l > 6) {
            throw SchemaError("/case/l", "l must be in [1, 6]");
        }
        return guarded([&] { return check_types(l, string_at("expected")); });
    }
    case 3: {
        Surjection f = surj("f");
        if (f.is_chain()) {
            throw SchemaError("/case/f", "expected a filtering");
        }
        return guarded([&] { return check_roundtrip(f.filtering()); });
    }
    case 4: {
        Surjection f = surj("f"), g = surj("g"), h = surj("h");
        return guarded([&] { return check_monoid(f, g, h); });
    }
    case 5: {
        Surjection f = surj("f"), g = surj("g");
        return guarded([&] { return check_distance(f, g); });
    }
    case 6: {
        Surjection f = surj("f"), h = surj("h");
        const unsigned k = uint_at("k");
        return guarded([&] { return check_factor(f, h, k); });
    }
    case 7: {
        Surjection h = surj("h");
        return guarded([&] { return check_realize(h); });
    }
    case 8: {
        if (!c.contains("y")) {
            throw SchemaError("/case/y", "missing");
        }
        QCopy y = qcopy_from_json(c["y"], ctx, 64, "/case/y");
        const unsigned r = uint_at("r");
        return guarded([&] { return check_witness(y, r); });
    }
    case 9: {
        if (!c.contains("coloring")) {
            throw SchemaError("/case/coloring", "missing");
        }
        ColoringSpec spec = coloring_from_json(c["coloring"], ctx, "/case/coloring");
        return guarded([&] { return check_oscillation(spec); });
    }
    case 10: {
        const std::uint64_t seed = c.contains("seed") && c["seed"].is_number_unsigned() ? c["seed"].get<std::uint64_t>()
                                                                                         : 42;
        return guarded([&]() -> Failure {
            if (draw_digest(seed) != draw_digest(seed)) {
                return std::string("two draws from the same seed differ");
            }
            return std::nullopt;
        });
    }
    default: throw SchemaError("/criterion", "unknown criterion " + std::to_string(id));
    }
}

} // namespace dualramsey::verify
