#include "dualramsey/ramsey_lab.hpp"

#include "dualramsey/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace dualramsey {

namespace {

bool less(const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; }

} // namespace

EpsilonParameters epsilon_parameters(unsigned b, double eps)
{
    if (b < 2 || b > 36) {
        throw std::invalid_argument("base must be in [2, 36]");
    }
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    // m = floor(log2(1/eps)) is the largest m with 2^-m >= eps; ldexp is exact.
    unsigned m = 0;
    while (m < 60 && std::ldexp(1.0, -static_cast<int>(m + 1)) >= eps) {
        ++m;
    }
    EpsilonParameters p;
    p.k = m + 1;
    std::uint64_t cells = 1;
    for (unsigned i = 0; i < p.k; ++i) {
        cells *= b;
        if (cells > 257) {
            throw std::out_of_range("l = b^k - 1 exceeds 256");
        }
    }
    p.l = static_cast<unsigned>(cells - 1);
    p.t = tangent_number(p.l);
    return p;
}

BigInt lower_bound_coloring(const Surjection& f, unsigned k) { return canonical_coloring(f.boundary_tuple(k)); }

std::size_t ExperimentReport::realized() const
{
    return static_cast<std::size_t>(
        std::count_if(colors.begin(), colors.end(), [](const ColorWitness& w) { return w.found; }));
}

bool ExperimentReport::all_verified() const
{
    return !colors.empty() &&
           std::all_of(colors.begin(), colors.end(), [](const ColorWitness& w) { return w.found && w.verified; });
}

ExperimentReport realize_all_colors(const Surjection& h, unsigned k, unsigned cap)
{
    ExperimentReport rep;
    rep.b = h.base();
    rep.k = k;
    rep.cap = cap;
    std::uint64_t cells = 1;
    for (unsigned i = 0; i < k; ++i) {
        cells *= rep.b;
    }
    if (k == 0 || cells - 1 > 6) {
        throw std::out_of_range("realize_all_colors needs 1 <= b^k - 1 <= 6");
    }
    rep.l = static_cast<unsigned>(cells - 1);
    rep.t = tangent_number(rep.l);
    auto hits = search_types(h, rep.l, cap);
    for (BigInt r = 0; r < rep.t; ++r) {
        ColorWitness w;
        w.color = r;
        auto it = hits.find(r);
        if (it != hits.end()) {
            w.found = true;
            w.depth = it->second.depth;
            w.tuple = it->second.tuple;
            Surjection f = tuple_to_factor(h, w.tuple, cap);
            w.factor_tuple = f.boundary_tuple(k);
            Surjection fh = compose(f, h);
            Surjection near = truncate(fh, k);
            DistanceResult d = distance(fh, near, k);
            const bool close = d.value.is_zero() || d.value.exponent() >= k;
            w.verified = fh.boundary_tuple(k) == w.tuple && lower_bound_coloring(fh, k) == r &&
                         lower_bound_coloring(near, k) == r && close;
        }
        rep.colors.push_back(std::move(w));
    }
    return rep;
}

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Pending: return "pending";
    }
    return "?";
}

Tri contains_full_cell(const Surjection& h, const ClopenInterval& q, unsigned cap)
{
    const unsigned b = h.base();
    if (q.lo().is_min() && q.hi().is_max()) {
        return Tri::Yes;
    }
    struct Path {
        Word node;
        Point lo;
        Point hi;
    };
    Path a{{}, Point::min(b), Point::max(b)};
    Path c = a;
    auto step = [&](Path& p, const Point& x) {
        const std::vector<Point> sp = h.splits(p.node);
        unsigned d = 0;
        while (d + 1 < b && less(sp[d], x)) {
            ++d;
        }
        if (d > 0) {
            p.lo = interval_successor(sp[d - 1]);
        }
        if (d + 1 < b) {
            p.hi = sp[d];
        }
        p.node.push_back(static_cast<Digit>(d));
    };
    for (unsigned n = 1; n <= cap; ++n) {
        step(a, q.lo());
        step(c, q.hi());
        if (a.lo == q.lo() && !less(q.hi(), a.hi)) {
            return Tri::Yes;
        }
        if (c.hi == q.hi() && !less(c.lo, q.lo())) {
            return Tri::Yes;
        }
        if (a.node != c.node && interval_successor(a.hi) != c.lo) {
            return Tri::Yes;
        }
    }
    return Tri::Pending;
}

Tri nonscattered_in(const Surjection& h, const ClopenInterval& q, unsigned cap)
{
    if (h.is_chain()) {
        return contains_full_cell(h, q, cap);
    }
    // Y_h is the finite set of stored maxima plus the domain points, and the
    // domain meets every clopen interval it touches in a copy of Q.
    for (const auto& piece : h.filtering().domain().pieces()) {
        if (piece.intersect(q)) {
            return Tri::Yes;
        }
    }
    return Tri::No;
}

QCopy::QCopy(Surjection h, std::vector<ClopenInterval> restriction, unsigned cap)
    : h_(std::move(h)), pieces_(std::move(restriction))
{
    if (h_.base() != 2) {
        throw std::invalid_argument("a Q-copy needs a base-2 surjection (encode first)");
    }
    if (pieces_.empty()) {
        throw std::invalid_argument("a Q-copy needs at least one restriction interval");
    }
    pieces_ = Domain::of(2, pieces_).pieces();
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Tri t = nonscattered_in(h_, pieces_[i], cap);
        if (t != Tri::Yes) {
            throw std::invalid_argument("restriction interval " + pieces_[i].to_string() +
                                        (t == Tri::No ? " meets Y_h in a scattered set"
                                                      : " contains no whole cell of h within the depth cap"));
        }
    }
}

QCopy QCopy::whole(Surjection h)
{
    const unsigned b = h.base();
    return QCopy(std::move(h), {ClopenInterval::whole(b)});
}

Tri QCopy::in_tree(const Word& t, unsigned cap) const
{
    const ClopenInterval w = ClopenInterval::of_node(Node(2, t));
    Tri best = Tri::No;
    for (const auto& p : pieces_) {
        auto q = w.intersect(p);
        if (!q) {
            continue;
        }
        Tri r = nonscattered_in(h_, *q, cap);
        if (r == Tri::Yes) {
            return r;
        }
        if (r == Tri::Pending) {
            best = r;
        }
    }
    return best;
}

std::vector<TreeNodeInfo> perfect_tree(const QCopy& y, unsigned d, unsigned cap)
{
    std::vector<TreeNodeInfo> out;
    std::vector<std::pair<Word, Tri>> frontier{{Word{}, y.in_tree({}, cap)}};
    while (!frontier.empty()) {
        std::vector<std::pair<Word, Tri>> next;
        for (auto& [w, status] : frontier) {
            TreeNodeInfo info;
            info.word = w;
            info.pending = status == Tri::Pending;
            Word w0 = w;
            w0.push_back(0);
            Word w1 = w;
            w1.push_back(1);
            const Tri m0 = y.in_tree(w0, cap);
            const Tri m1 = y.in_tree(w1, cap);
            info.splitting = m0 == Tri::Yes && m1 == Tri::Yes;
            if (w.size() < d) {
                if (m0 != Tri::No) {
                    next.emplace_back(std::move(w0), m0);
                }
                if (m1 != Tri::No) {
                    next.emplace_back(std::move(w1), m1);
                }
            }
            out.push_back(std::move(info));
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

// Splitting nodes along the leftmost (prefer 0) or rightmost branch of T_Y,
// over nodes of length < max_len, stopping once `stop` says so.
template <class Stop>
std::vector<Word> branch_splits(const QCopy& y, Digit prefer, unsigned max_len, unsigned cap, Stop stop)
{
    std::vector<Word> found;
    Word node;
    while (node.size() < max_len) {
        Word w0 = node;
        w0.push_back(0);
        Word w1 = node;
        w1.push_back(1);
        const Tri m0 = y.in_tree(w0, cap);
        const Tri m1 = y.in_tree(w1, cap);
        if (m0 == Tri::Pending || m1 == Tri::Pending) {
            throw std::runtime_error("membership in T_Y undecided at node '" + word_to_string(node) + "'");
        }
        if (m0 == Tri::No && m1 == Tri::No) {
            throw std::logic_error("T_Y is not perfect at node '" + word_to_string(node) + "'");
        }
        if (m0 == Tri::Yes && m1 == Tri::Yes) {
            found.push_back(node);
            if (stop(found)) {
                return found;
            }
        }
        const bool go_left = prefer == 0 ? m0 == Tri::Yes : m1 != Tri::Yes;
        node = go_left ? std::move(w0) : std::move(w1);
    }
    return found;
}

} // namespace

Branches splitting_branches(const QCopy& y, unsigned min_depth, unsigned max_depth, unsigned cap)
{
    auto never = [](const std::vector<Word>&) { return false; };
    return {branch_splits(y, 0, min_depth, cap, never), branch_splits(y, 1, max_depth, cap, never)};
}

unsigned omega_coloring(const QCopy& y, unsigned cap)
{
    auto t = branch_splits(y, 0, cap, cap, [](const std::vector<Word>& f) { return f.size() >= 2; });
    if (t.size() < 2) {
        throw std::runtime_error("second splitting node on the minimum branch not reached within depth " +
                                 std::to_string(cap));
    }
    const std::size_t len = t[1].size();
    auto s = branch_splits(y, 1, static_cast<unsigned>(len), cap, [](const std::vector<Word>&) { return false; });
    // s_0 = t_0 has length < |t_1|, so s is never empty.
    return static_cast<unsigned>(s.size() - 1);
}

OmegaWitness build_witness(const QCopy& y, unsigned r, unsigned cap)
{
    auto s = branch_splits(y, 1, cap, cap, [&](const std::vector<Word>& f) { return f.size() >= r + 1; });
    if (s.size() < r + 1) {
        throw std::runtime_error("maximum branch has fewer than " + std::to_string(r + 1) +
                                 " splitting nodes within depth " + std::to_string(cap));
    }
    const std::size_t sr = s[r].size();
    // Least n >= 1 with |t_n| > |s_r|, i.e. max{i : |s_i| < |t_n|} >= r.
    auto t = branch_splits(y, 0, cap, cap,
                           [&](const std::vector<Word>& f) { return f.size() >= 2 && f.back().size() > sr; });
    if (t.size() < 2 || t.back().size() <= sr) {
        throw std::runtime_error("minimum branch too short within depth " + std::to_string(cap));
    }
    const unsigned n = static_cast<unsigned>(t.size() - 1);
    const Word t0 = t.back();
    auto s2 = branch_splits(y, 1, cap, cap,
                            [&](const std::vector<Word>& f) { return f.back().size() >= t0.size(); });
    const auto shorter = static_cast<unsigned>(
        std::count_if(s2.begin(), s2.end(), [&](const Word& w) { return w.size() < t0.size(); }));
    const unsigned m = shorter - 1;
    if (m - r + 1 >= s2.size()) {
        throw std::runtime_error("maximum branch too short within depth " + std::to_string(cap));
    }
    const Word s0 = s2[m - r + 1];

    // Z = Y minus the open gap between W_{t0} and W_{s0}; pieces left with a
    // scattered trace are dropped.
    const ClopenInterval left(Point::min(2), node_max(Node(2, t0)));
    const ClopenInterval right(node_min(Node(2, s0)), Point::max(2));
    std::vector<ClopenInterval> pieces;
    for (const auto& p : y.restriction()) {
        for (const auto& side : {left, right}) {
            if (auto q = p.intersect(side); q && nonscattered_in(y.h(), *q, cap) == Tri::Yes) {
                pieces.push_back(*q);
            }
        }
    }
    OmegaWitness w{QCopy(y.h(), std::move(pieces), cap), t0, s0, n, m};
    const unsigned got = omega_coloring(w.z, cap);
    if (got != r) {
        throw std::logic_error("witness has omega color " + std::to_string(got) + ", wanted " + std::to_string(r));
    }
    return w;
}

std::string fingerprint_key(const std::vector<Point>& fingerprint)
{
    std::string key;
    for (std::size_t i = 0; i < fingerprint.size(); ++i) {
        if (i > 0) {
            key += ',';
        }
        key += fingerprint[i].to_string();
    }
    return key;
}

void ColoringSpec::check() const
{
    if (colors == 0) {
        throw std::invalid_argument("coloring needs at least one color");
    }
    if (k == 0) {
        throw std::invalid_argument("coloring depth must be positive");
    }
    auto in_range = [&](unsigned c) {
        if (c >= colors) {
            throw std::invalid_argument("color " + std::to_string(c) + " out of range " + std::to_string(colors));
        }
    };
    switch (kind) {
    case Kind::DevlinRelabel:
        if (relabel.empty()) {
            throw std::invalid_argument("relabel table is empty");
        }
        for (unsigned c : relabel) {
            in_range(c);
        }
        break;
    case Kind::Constant: in_range(constant); break;
    case Kind::Hashed: break;
    case Kind::Table:
        in_range(fallback);
        for (const auto& [key, c] : table) {
            in_range(c);
        }
        break;
    }
}

unsigned ColoringSpec::color(const std::vector<Point>& fingerprint) const
{
    switch (kind) {
    case Kind::DevlinRelabel: {
        const BigInt r = canonical_coloring(fingerprint);
        if (r >= relabel.size()) {
            throw std::out_of_range("relabel table has no entry for type " + r.str());
        }
        return relabel[static_cast<std::size_t>(r)];
    }
    case Kind::Constant: return constant;
    case Kind::Hashed: {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](unsigned char byte) {
            h ^= byte;
            h *= 1099511628211ull;
        };
        for (int i = 0; i < 8; ++i) {
            mix(static_cast<unsigned char>(seed >> (8 * i)));
        }
        for (char ch : fingerprint_key(fingerprint)) {
            mix(static_cast<unsigned char>(ch));
        }
        return static_cast<unsigned>(h % colors);
    }
    case Kind::Table: {
        auto it = table.find(fingerprint_key(fingerprint));
        return it == table.end() ? fallback : it->second;
    }
    }
    return 0;
}

namespace {

// A base-2 tuple of the given type: node v gets the word of length 2 * label(v),
// children extend by their direction digit and then zeros.
std::vector<Point> identity_tuple_of_type(const TreeType& type)
{
    std::vector<Point> out;
    const auto& vs = type.vertices();
    std::function<void(int, Word)> walk = [&](int v, Word w) {
        if (vs[v].left < 0) {
            out.emplace_back(2, std::move(w), 1);
            return;
        }
        for (int side = 0; side < 2; ++side) {
            const int child = side == 0 ? vs[v].left : vs[v].right;
            Word cw = w;
            cw.push_back(static_cast<Digit>(side));
            cw.resize(2 * static_cast<std::size_t>(vs[child].label), 0);
            walk(child, std::move(cw));
        }
    };
    walk(0, Word(2 * static_cast<std::size_t>(vs[0].label), 0));
    return out;
}

} // namespace

OscillationReport oscillation_search(const ColoringSpec& c, unsigned b, double eps, unsigned budget,
                                     std::uint64_t seed, unsigned cap)
{
    c.check();
    OscillationReport rep;
    rep.b = b;
    rep.eps = eps;
    rep.params = epsilon_parameters(b, eps);
    if (c.k != rep.params.k) {
        throw std::invalid_argument("coloring depth " + std::to_string(c.k) + " does not match k = " +
                                    std::to_string(rep.params.k) + " for this epsilon");
    }
    const unsigned k = rep.params.k;
    const unsigned l = rep.params.l;

    if (c.factors_through_types()) {
        rep.regime = "exact";
        rep.guaranteed = true;
        rep.h_label = "identity";
        rep.candidates = 1;
        Surjection h = Surjection::identity(b);
        if (c.kind == ColoringSpec::Kind::DevlinRelabel && c.relabel.size() != rep.params.t) {
            throw std::invalid_argument("relabel table needs exactly t = " + rep.params.t.str() + " entries");
        }
        // Least type rank for each color in the image.
        std::map<unsigned, unsigned> first_rank;
        if (c.kind == ColoringSpec::Kind::Constant) {
            first_rank[c.constant] = 0;
        } else {
            for (unsigned r = 0; r < c.relabel.size(); ++r) {
                first_rank.emplace(c.relabel[r], r);
            }
        }
        std::map<BigInt, TypeHit> hits;
        if (b != 2) {
            std::vector<BigInt> wanted;
            for (const auto& [color, r] : first_rank) {
                wanted.emplace_back(r);
            }
            hits = search_types(h, l, cap, wanted);
        }
        for (const auto& [color, r] : first_rank) {
            std::vector<Point> tuple;
            if (b == 2) {
                tuple = identity_tuple_of_type(TreeType::unrank(l, r));
            } else {
                auto it = hits.find(r);
                if (it == hits.end()) {
                    throw std::runtime_error("type " + std::to_string(r) + " not found in Y_identity within cap");
                }
                tuple = it->second.tuple;
            }
            Surjection f = tuple_to_factor(h, tuple, cap);
            std::vector<Point> fp = compose(f, h).boundary_tuple(k);
            if (fp != tuple || c.color(fp) != color) {
                throw std::logic_error("witness for color " + std::to_string(color) + " does not verify");
            }
            ++rep.tuples_examined;
            rep.colors.push_back(color);
            rep.witnesses.push_back({color, tuple, f.boundary_tuple(k)});
        }
        return rep;
    }

    rep.regime = "heuristic";
    rep.guaranteed = false;
    Rng rng(seed);
    const std::size_t sample_limit = 20000;
    std::optional<std::map<unsigned, std::vector<Point>>> best;
    std::optional<Surjection> best_h;
    for (unsigned cand = 0; cand <= budget; ++cand) {
        Surjection h = cand == 0 ? Surjection::identity(b)
                                 : random_surjection(rng, b, 1 + static_cast<unsigned>(rng.below(3)));
        ++rep.candidates;
        unsigned d = k;
        std::vector<Point> Y = max_set(h, d);
        while (Y.size() < l + 4 && d < 8) {
            Y = max_set(h, ++d);
        }
        if (Y.size() < l) {
            continue;
        }
        std::map<unsigned, std::vector<Point>> seen;
        auto visit = [&](const std::vector<std::size_t>& pick) {
            std::vector<Point> t;
            for (std::size_t i : pick) {
                t.push_back(Y[i]);
            }
            seen.emplace(c.color(t), std::move(t));
            ++rep.tuples_examined;
        };
        for (std::size_t s = 0; s < sample_limit; ++s) {
            std::set<std::size_t> pick;
            while (pick.size() < l) {
                pick.insert(static_cast<std::size_t>(rng.below(Y.size())));
            }
            visit(std::vector<std::size_t>(pick.begin(), pick.end()));
        }
        if (!best || seen.size() < best->size()) {
            best = std::move(seen);
            best_h = h;
            rep.h_label = cand == 0 ? "identity" : "random #" + std::to_string(cand);
        }
    }
    if (!best) {
        throw std::runtime_error("no candidate surjection had enough cell maxima");
    }
    for (const auto& [color, tuple] : *best) {
        rep.colors.push_back(color);
        rep.witnesses.push_back({color, tuple, tuple_to_factor(*best_h, tuple, cap).boundary_tuple(k)});
    }
    return rep;
}

} // namespace dualramsey
