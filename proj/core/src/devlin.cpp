#include "dualramsey/devlin.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dualramsey {

std::vector<BigInt> tangent_table(unsigned n)
{
    // tan' = 1 + tan^2 gives T_{m+1} = [m = 0] + sum_i C(m, i) T_i T_{m-i}.
    const unsigned top = n == 0 ? 1 : 2 * n - 1;
    std::vector<BigInt> T(top + 1);
    std::vector<BigInt> row{1};
    T[0] = 0;
    if (top >= 1) {
        T[1] = 1;
    }
    for (unsigned m = 1; m < top; ++m) {
        std::vector<BigInt> next(m + 1);
        next[0] = next[m] = 1;
        for (unsigned i = 1; i < m; ++i) {
            next[i] = row[i - 1] + row[i];
        }
        row = std::move(next);
        BigInt sum = 0;
        for (unsigned i = 0; i <= m; ++i) {
            sum += row[i] * T[i] * T[m - i];
        }
        T[m + 1] = sum;
    }
    std::vector<BigInt> out;
    out.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        out.push_back(T[2 * k - 1]);
    }
    return out;
}

BigInt tangent_number(unsigned k)
{
    if (k < 1) {
        throw std::invalid_argument("tangent_number needs k >= 1");
    }
    return tangent_table(k).back();
}

namespace {

std::size_t lcp(const Word& a, const Word& b)
{
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) {
        ++i;
    }
    return i;
}

bool is_prefix(const Word& p, const Word& w) { return p.size() <= w.size() && lcp(p, w) == p.size(); }

Word binary_stem(const Point& p)
{
    if (!p.in_a()) {
        throw std::invalid_argument("tuple entry " + p.to_string() + " is not in A_b");
    }
    return encode_binary(p).stem();
}

BigInt binom(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

MeetClosure meet_closure(const std::vector<Point>& tuple)
{
    MeetClosure out;
    for (const Point& p : tuple) {
        out.stems.push_back(binary_stem(p));
    }
    std::set<std::pair<std::size_t, Word>> words;
    for (std::size_t i = 0; i < out.stems.size(); ++i) {
        words.emplace(out.stems[i].size(), out.stems[i]);
        for (std::size_t j = i + 1; j < out.stems.size(); ++j) {
            if (out.stems[i] == out.stems[j]) {
                throw std::invalid_argument("duplicate tuple entries");
            }
            if (is_prefix(out.stems[i], out.stems[j]) || is_prefix(out.stems[j], out.stems[i])) {
                out.antichain = false;
            }
            Word m(out.stems[i].begin(), out.stems[i].begin() + static_cast<std::ptrdiff_t>(lcp(out.stems[i], out.stems[j])));
            words.emplace(m.size(), std::move(m));
        }
    }
    for (const auto& [len, w] : words) {
        ClosureNode node;
        node.word = w;
        for (std::size_t j = out.nodes.size(); j-- > 0;) {
            if (out.nodes[j].word.size() < w.size() && is_prefix(out.nodes[j].word, w)) {
                node.parent = static_cast<int>(j);
                break;
            }
        }
        for (std::size_t i = 0; i < out.stems.size(); ++i) {
            if (out.stems[i] == w) {
                node.leaf = static_cast<int>(i);
            }
        }
        out.nodes.push_back(std::move(node));
    }
    return out;
}

bool is_strongly_diagonal(const std::vector<Point>& tuple)
{
    if (tuple.empty()) {
        return false;
    }
    MeetClosure c = meet_closure(tuple);
    if (!c.antichain || c.nodes.size() != 2 * tuple.size() - 1) {
        return false;
    }
    std::set<std::size_t> lengths;
    for (const auto& n : c.nodes) {
        lengths.insert(n.word.size());
    }
    return lengths.size() == c.nodes.size();
}

TreeType::TreeType(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    const int n = static_cast<int>(vertices_.size());
    if (n == 0 || n % 2 == 0) {
        throw std::invalid_argument("a type has 2l-1 vertices");
    }
    std::vector<int> seen_label(n, 0);
    std::vector<int> seen_vertex(n, 0);
    std::function<std::string(int, int)> walk = [&](int v, int parent_label) -> std::string {
        if (v < 0 || v >= n || seen_vertex[v]++) {
            throw std::invalid_argument("type vertices do not form a tree");
        }
        const Vertex& x = vertices_[v];
        if (x.label < 0 || x.label >= n || seen_label[x.label]++) {
            throw std::invalid_argument("type labels must be a permutation of 0..2l-2");
        }
        if (x.label <= parent_label) {
            throw std::invalid_argument("type labels must increase away from the root");
        }
        if ((x.left < 0) != (x.right < 0)) {
            throw std::invalid_argument("type tree must be full binary");
        }
        std::string s = std::to_string(x.label);
        if (x.left >= 0) {
            s += "[" + walk(x.left, x.label) + "," + walk(x.right, x.label) + "]";
        }
        return s;
    };
    encoding_ = walk(0, -1);
    if (std::count(seen_vertex.begin(), seen_vertex.end(), 1) != n) {
        throw std::invalid_argument("type has unreachable vertices");
    }
}

TreeType TreeType::leaf() { return TreeType({Vertex{0, -1, -1}}); }

TreeType TreeType::parse(const std::string& text)
{
    std::vector<Vertex> vs;
    std::size_t pos = 0;
    std::function<int()> node = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        if (start == pos) {
            throw std::invalid_argument("type text: expected a label at offset " + std::to_string(pos));
        }
        const int idx = static_cast<int>(vs.size());
        vs.push_back(Vertex{std::stoi(text.substr(start, pos - start)), -1, -1});
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            int l = node();
            if (pos >= text.size() || text[pos] != ',') {
                throw std::invalid_argument("type text: expected ',' at offset " + std::to_string(pos));
            }
            ++pos;
            int r = node();
            if (pos >= text.size() || text[pos] != ']') {
                throw std::invalid_argument("type text: expected ']' at offset " + std::to_string(pos));
            }
            ++pos;
            vs[idx].left = l;
            vs[idx].right = r;
        }
        return idx;
    };
    node();
    if (pos != text.size()) {
        throw std::invalid_argument("type text: trailing characters");
    }
    return TreeType(std::move(vs));
}

namespace {

// Types with l leaves split by the number a of leaves on the left: the root
// takes the least label and the left subtree takes 2a-1 of the other 2l-2.
struct Counts {
    std::vector<BigInt> t;  // t[k] = t_k, t[0] unused

    explicit Counts(unsigned l)
    {
        auto tab = tangent_table(l);
        t.push_back(0);
        t.insert(t.end(), tab.begin(), tab.end());
    }

    BigInt block(unsigned l, unsigned a) const { return binom(2 * l - 2, 2 * a - 1) * t[a] * t[l - a]; }
};

BigInt subset_rank(const std::vector<unsigned>& c, unsigned n)
{
    const unsigned m = static_cast<unsigned>(c.size());
    BigInt r = 0;
    unsigned prev = 0;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned v = prev + 1; v < c[i - 1]; ++v) {
            r += binom(n - v, m - i);
        }
        prev = c[i - 1];
    }
    return r;
}

std::vector<unsigned> subset_unrank(BigInt r, unsigned n, unsigned m)
{
    std::vector<unsigned> c;
    unsigned prev = 0;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned v = prev + 1;; ++v) {
            BigInt count = binom(n - v, m - i);
            if (r < count) {
                c.push_back(v);
                prev = v;
                break;
            }
            r -= count;
        }
    }
    return c;
}

struct Ranked {
    BigInt rank;
    unsigned leaves;
    std::vector<int> labels;  // sorted
};

Ranked rank_rec(const std::vector<TreeType::Vertex>& vs, int v, const Counts& counts)
{
    const auto& x = vs[v];
    if (x.left < 0) {
        return {0, 1, {x.label}};
    }
    Ranked L = rank_rec(vs, x.left, counts);
    Ranked R = rank_rec(vs, x.right, counts);
    const unsigned l = L.leaves + R.leaves;
    const unsigned a = L.leaves;
    std::vector<int> all;
    std::merge(L.labels.begin(), L.labels.end(), R.labels.begin(), R.labels.end(), std::back_inserter(all));
    std::vector<unsigned> positions;
    for (int lab : L.labels) {
        positions.push_back(static_cast<unsigned>(std::lower_bound(all.begin(), all.end(), lab) - all.begin()) + 1);
    }
    BigInt r = 0;
    for (unsigned a2 = 1; a2 < a; ++a2) {
        r += counts.block(l, a2);
    }
    r += subset_rank(positions, 2 * l - 2) * counts.t[a] * counts.t[l - a];
    r += L.rank * counts.t[l - a] + R.rank;
    all.insert(all.begin(), x.label);
    return {r, l, std::move(all)};
}

int unrank_rec(unsigned l, BigInt r, const std::vector<int>& labels, const Counts& counts,
               std::vector<TreeType::Vertex>& out)
{
    const int idx = static_cast<int>(out.size());
    out.push_back(TreeType::Vertex{labels[0], -1, -1});
    if (l == 1) {
        return idx;
    }
    unsigned a = 1;
    for (;; ++a) {
        BigInt blk = counts.block(l, a);
        if (r < blk) {
            break;
        }
        r -= blk;
    }
    const BigInt per = counts.t[a] * counts.t[l - a];
    const BigInt sr = r / per;
    const BigInt rem = r % per;
    std::vector<unsigned> pos = subset_unrank(sr, 2 * l - 2, 2 * a - 1);
    std::vector<int> left, right;
    std::size_t p = 0;
    for (unsigned i = 1; i < labels.size(); ++i) {
        if (p < pos.size() && pos[p] == i) {
            left.push_back(labels[i]);
            ++p;
        } else {
            right.push_back(labels[i]);
        }
    }
    const int li = unrank_rec(a, rem / counts.t[l - a], left, counts, out);
    const int ri = unrank_rec(l - a, rem % counts.t[l - a], right, counts, out);
    out[idx].left = li;
    out[idx].right = ri;
    return idx;
}

} // namespace

BigInt TreeType::rank() const
{
    Counts counts(leaves());
    return rank_rec(vertices_, 0, counts).rank;
}

TreeType TreeType::unrank(unsigned leaves, const BigInt& rank)
{
    if (leaves < 1) {
        throw std::invalid_argument("a type has at least one leaf");
    }
    Counts counts(leaves);
    if (rank < 0 || rank >= counts.t[leaves]) {
        throw std::out_of_range("type rank out of range for l = " + std::to_string(leaves));
    }
    std::vector<int> labels(2 * leaves - 1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = static_cast<int>(i);
    }
    std::vector<Vertex> out;
    unrank_rec(leaves, rank, labels, counts, out);
    return TreeType(std::move(out));
}

namespace {

// Assumes a strongly diagonal family of binary stems in increasing order.
TreeType type_of_stems(const std::vector<Word>& stems)
{
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < stems.size(); ++i) {
        lengths.push_back(stems[i].size());
        if (i > 0) {
            lengths.push_back(lcp(stems[i - 1], stems[i]));
        }
    }
    std::sort(lengths.begin(), lengths.end());
    auto label = [&](std::size_t len) {
        return static_cast<int>(std::lower_bound(lengths.begin(), lengths.end(), len) - lengths.begin());
    };
    std::vector<TreeType::Vertex> vs;
    std::function<int(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) -> int {
        const int idx = static_cast<int>(vs.size());
        if (hi - lo == 1) {
            vs.push_back({label(stems[lo].size()), -1, -1});
            return idx;
        }
        std::size_t m = lcp(stems[lo], stems[hi - 1]);
        vs.push_back({label(m), -1, -1});
        std::size_t split = lo;
        while (stems[split][m] == 0) {
            ++split;
        }
        const int l = build(lo, split);
        const int r = build(split, hi);
        vs[idx].left = l;
        vs[idx].right = r;
        return idx;
    };
    build(0, stems.size());
    return TreeType(std::move(vs));
}

} // namespace

TreeType similarity_type(const std::vector<Point>& tuple)
{
    if (!is_strongly_diagonal(tuple)) {
        throw std::invalid_argument("tuple is not strongly diagonal");
    }
    std::vector<Point> sorted = tuple;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; });
    std::vector<Word> stems;
    for (const Point& p : sorted) {
        stems.push_back(binary_stem(p));
    }
    return type_of_stems(stems);
}

std::vector<TreeType> enumerate_types(unsigned l)
{
    if (l < 1 || l > 6) {
        throw std::out_of_range("enumerate_types supports 1 <= l <= 6");
    }
    using Shape = std::vector<TreeType::Vertex>;
    std::vector<std::vector<Shape>> shapes(l + 1);
    shapes[1].push_back(Shape{{0, -1, -1}});
    for (unsigned n = 2; n <= l; ++n) {
        for (unsigned a = 1; a < n; ++a) {
            for (const Shape& L : shapes[a]) {
                for (const Shape& R : shapes[n - a]) {
                    Shape s{{0, 1, static_cast<int>(1 + L.size())}};
                    auto append = [&](const Shape& sub, int offset) {
                        for (auto v : sub) {
                            if (v.left >= 0) {
                                v.left += offset;
                                v.right += offset;
                            }
                            s.push_back(v);
                        }
                    };
                    append(L, 1);
                    append(R, static_cast<int>(1 + L.size()));
                    shapes[n].push_back(std::move(s));
                }
            }
        }
    }
    std::vector<std::pair<BigInt, TreeType>> found;
    for (Shape s : shapes[l]) {
        std::vector<int> ready{0};
        std::function<void(int)> extend = [&](int next_label) {
            if (ready.empty()) {
                TreeType t(s);
                found.emplace_back(t.rank(), std::move(t));
                return;
            }
            for (std::size_t i = 0; i < ready.size(); ++i) {
                const int v = ready[i];
                s[v].label = next_label;
                std::vector<int> saved = ready;
                ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
                if (s[v].left >= 0) {
                    ready.push_back(s[v].left);
                    ready.push_back(s[v].right);
                }
                extend(next_label + 1);
                ready = std::move(saved);
            }
        };
        extend(0);
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<TreeType> out;
    out.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i].first != i) {
            throw std::logic_error("type ranking is not a bijection at l = " + std::to_string(l));
        }
        out.push_back(std::move(found[i].second));
    }
    return out;
}

BigInt canonical_coloring(const std::vector<Point>& tuple)
{
    if (!is_strongly_diagonal(tuple)) {
        return 0;
    }
    return similarity_type(tuple).rank();
}

std::map<BigInt, TypeHit> search_types(const Surjection& h, unsigned l, unsigned cap, const std::vector<BigInt>& wanted)
{
    if (l < 1) {
        throw std::invalid_argument("l must be positive");
    }
    std::set<BigInt> remaining(wanted.begin(), wanted.end());
    if (remaining.empty()) {
        const BigInt t = tangent_number(l);
        if (t > 1000000) {
            throw std::out_of_range("too many types to search for all of them");
        }
        for (BigInt r = 0; r < t; ++r) {
            remaining.insert(r);
        }
    }
    std::map<BigInt, TypeHit> hits;
    std::unordered_map<std::string, BigInt> rank_cache;
    std::vector<Point> previous;
    auto less = [](const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; };
    for (unsigned d = 1; d <= cap && !remaining.empty(); ++d) {
        std::vector<Point> Y = max_set(h, d);
        std::vector<Word> stems;
        std::vector<char> fresh;
        std::size_t max_len = 0;
        for (const Point& y : Y) {
            stems.push_back(binary_stem(y));
            max_len = std::max(max_len, stems.back().size());
            fresh.push_back(!std::binary_search(previous.begin(), previous.end(), y, less));
        }
        std::vector<std::size_t> chosen;
        std::vector<char> used(max_len + 2, 0);
        std::function<bool(std::size_t, bool)> dfs = [&](std::size_t from, bool has_fresh) -> bool {
            if (chosen.size() == l) {
                if (!has_fresh) {
                    return false;
                }
                std::vector<Word> tuple_stems;
                for (std::size_t i : chosen) {
                    tuple_stems.push_back(stems[i]);
                }
                TreeType type = type_of_stems(tuple_stems);
                auto it = rank_cache.find(type.encoding());
                if (it == rank_cache.end()) {
                    it = rank_cache.emplace(type.encoding(), type.rank()).first;
                }
                if (remaining.erase(it->second)) {
                    TypeHit hit;
                    for (std::size_t i : chosen) {
                        hit.tuple.push_back(Y[i]);
                    }
                    hit.depth = d;
                    hits.emplace(it->second, std::move(hit));
                }
                return remaining.empty();
            }
            for (std::size_t i = from; i < Y.size(); ++i) {
                const Word& s = stems[i];
                if (used[s.size()]) {
                    continue;
                }
                std::size_t meet = 0;
                if (!chosen.empty()) {
                    const Word& last = stems[chosen.back()];
                    meet = lcp(last, s);
                    if (meet == last.size() || meet == s.size() || used[meet]) {
                        continue;
                    }
                    bool prefix_clash = false;
                    for (std::size_t j : chosen) {
                        if (is_prefix(stems[j], s) || is_prefix(s, stems[j])) {
                            prefix_clash = true;
                            break;
                        }
                    }
                    if (prefix_clash) {
                        continue;
                    }
                }
                const bool has_meet = !chosen.empty();
                used[s.size()] = 1;
                if (has_meet) {
                    used[meet] = 1;
                }
                chosen.push_back(i);
                const bool done = dfs(i + 1, has_fresh || fresh[i]);
                chosen.pop_back();
                used[s.size()] = 0;
                if (has_meet) {
                    used[meet] = 0;
                }
                if (done) {
                    return true;
                }
            }
            return false;
        };
        dfs(0, false);
        previous = std::move(Y);
    }
    return hits;
}

std::optional<TypeHit> search_tuple_of_type(const Surjection& h, const TreeType& type, unsigned cap)
{
    auto hits = search_types(h, type.leaves(), cap, {type.rank()});
    if (hits.empty()) {
        return std::nullopt;
    }
    return hits.begin()->second;
}

} // namespace dualramsey
