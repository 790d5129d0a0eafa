#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dualramsey::oracle {

std::uint64_t alternating_permutations(unsigned n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (unsigned i = 0; i + 1 < n && ok; ++i) {
            ok = (i % 2 == 0) ? p[i] < p[i + 1] : p[i] > p[i + 1];
        }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::vector<BigInt> zigzag_numbers(unsigned n)
{
    // Boustrophedon rows; E_k is the far end of row k.
    std::vector<BigInt> out{1};
    std::vector<BigInt> row{1};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<BigInt> next(k + 1);
        next[0] = 0;
        for (unsigned i = 1; i <= k; ++i) {
            next[i] = next[i - 1] + row[k - i];
        }
        row = std::move(next);
        out.push_back(row.back());
    }
    return out;
}

BigInt tan_derivative_at_zero(unsigned n)
{
    std::vector<BigInt> poly{0, 1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigInt> next(poly.size() + 1);
        for (std::size_t m = 1; m < poly.size(); ++m) {
            next[m - 1] += poly[m] * m;
            next[m + 1] += poly[m] * m;
        }
        poly = std::move(next);
    }
    return poly[0];
}

std::vector<Word> words_up_to(unsigned b, unsigned max_len)
{
    std::vector<Word> out{Word{}};
    for (unsigned len = 1; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            out.push_back(w);
        } while (increment_word(w, b));
    }
    return out;
}

std::optional<Point> first_between(const Point& a, const Point& c, unsigned max_len)
{
    const unsigned b = a.base();
    for (const Word& w : words_up_to(b, max_len)) {
        Point y(b, w, static_cast<Digit>(b - 1));
        if (y.is_max() || y.stem().size() != w.size()) {
            continue;
        }
        if (a < y && y < c) {
            return y;
        }
    }
    return std::nullopt;
}

std::vector<Point> standard_tuple(unsigned b, unsigned k)
{
    std::vector<Point> out;
    Word w(k, 0);
    do {
        out.push_back(node_max(Node(b, w)));
    } while (increment_word(w, b));
    out.pop_back();
    return out;
}

Word image_prefix(const std::vector<Point>& tuple, unsigned b, unsigned n, const Point& x)
{
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(tuple.begin(), tuple.end(), x, [](const Point& m, const Point& p) { return m < p; }) -
        tuple.begin());
    Word w(n);
    for (unsigned i = n; i-- > 0;) {
        w[i] = static_cast<Digit>(idx % b);
        idx /= b;
    }
    return w;
}

std::optional<unsigned> sup_distance_exponent(const Surjection& f, const Surjection& g, unsigned stem_len,
                                              unsigned precision)
{
    const unsigned b = f.base();
    const std::vector<Point> tf = f.boundary_tuple(precision);
    const std::vector<Point> tg = g.boundary_tuple(precision);
    std::optional<unsigned> best;
    for (const Word& w : words_up_to(b, stem_len)) {
        for (unsigned tail = 0; tail < b; ++tail) {
            const Point x(b, w, static_cast<Digit>(tail));
            const Word a = image_prefix(tf, b, precision, x);
            const Word c = image_prefix(tg, b, precision, x);
            auto mm = std::mismatch(a.begin(), a.end(), c.begin());
            if (mm.first != a.end()) {
                const auto m = static_cast<unsigned>(mm.first - a.begin());
                if (!best || m < *best) {
                    best = m;
                }
            }
        }
    }
    return best;
}

std::set<std::string> realized_types(unsigned l, unsigned max_len)
{
    std::vector<Point> pts;
    for (const Word& w : words_up_to(2, max_len)) {
        if (!w.empty() && w.back() == 0) {
            pts.emplace_back(2, w, 1);
        }
    }
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) { return x < y; });
    std::set<std::string> out;
    std::vector<Point> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == l) {
            if (is_strongly_diagonal(pick)) {
                out.insert(similarity_type(pick).encoding());
            }
            return;
        }
        for (std::size_t i = from; i < pts.size(); ++i) {
            pick.push_back(pts[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace dualramsey::oracle
