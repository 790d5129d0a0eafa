#include "dualramsey/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualramsey {

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("Rng::below(0)");
    }
    // Rejection keeps the draw unbiased and independent of the library's distributions.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

std::optional<Point> random_point_between(Rng& rng, const Point& a, const Point& c, const Domain& domain,
                                          unsigned extra)
{
    const unsigned b = a.base();
    if (lex_compare(a, c) != std::strong_ordering::less) {
        return std::nullopt;
    }
    const std::size_t n = first_difference(a, c);
    const Word common = a.prefix(n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Word w = common;
        const std::size_t len = 1 + rng.below(std::max(1u, extra));
        for (std::size_t i = 0; i < len; ++i) {
            w.push_back(static_cast<Digit>(rng.below(b)));
        }
        Point y(b, std::move(w), static_cast<Digit>(b - 1));
        if (lex_compare(a, y) == std::strong_ordering::less && lex_compare(y, c) == std::strong_ordering::less &&
            domain.contains(y)) {
            return y;
        }
    }
    return domain.first_between(a, c);
}

Domain random_domain(Rng& rng, unsigned base)
{
    const unsigned pieces = 1 + static_cast<unsigned>(rng.below(3));
    std::vector<ClopenInterval> out;
    for (unsigned i = 0; i < pieces; ++i) {
        auto node = [&] {
            Word w(1 + rng.below(3));
            for (Digit& d : w) {
                d = static_cast<Digit>(rng.below(base));
            }
            return Node(base, std::move(w));
        };
        Node u = node();
        Node v = node();
        Point lo = node_min(u);
        Point hi = node_max(v);
        if (lex_compare(hi, lo) == std::strong_ordering::less) {
            lo = node_min(v);
            hi = node_max(u);
        }
        out.emplace_back(std::move(lo), std::move(hi));
    }
    return Domain::of(base, std::move(out));
}

Filtering random_filtering(Rng& rng, unsigned base, unsigned depth, const Domain& domain,
                           std::vector<std::vector<Point>> prefix, unsigned extra)
{
    std::vector<std::vector<Point>> levels = std::move(prefix);
    if (levels.size() > depth) {
        levels.resize(depth);
    }
    while (levels.size() < depth) {
        const unsigned d = static_cast<unsigned>(levels.size());
        Filtering parent = Filtering::from_levels(base, levels, domain);
        std::vector<Point> next;
        std::size_t cells = 1;
        for (unsigned j = 0; j < d; ++j) {
            cells *= base;
        }
        for (std::size_t i = 0; i < cells; ++i) {
            Word w(d);
            std::size_t idx = i;
            for (unsigned j = d; j-- > 0;) {
                w[j] = static_cast<Digit>(idx % base);
                idx /= base;
            }
            const ClopenInterval cell = parent.cell(w);
            std::vector<Point> picks;
            for (int attempt = 0; picks.size() + 1 < base && attempt < 16 * static_cast<int>(base); ++attempt) {
                auto y = random_point_between(rng, cell.lo(), cell.hi(), domain, extra);
                if (!y) {
                    break;
                }
                if (std::find(picks.begin(), picks.end(), *y) == picks.end()) {
                    picks.push_back(*y);
                }
            }
            if (picks.size() + 1 < base) {
                // Too thin for random picks; fall back to the greedy splits.
                picks = greedy_splits(cell, domain);
            }
            std::sort(picks.begin(), picks.end(),
                      [](const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; });
            for (auto& p : picks) {
                next.push_back(std::move(p));
            }
            if (i + 1 < cells) {
                next.push_back(cell.hi());
            }
        }
        levels.push_back(std::move(next));
    }
    return Filtering::from_levels(base, std::move(levels), domain);
}

Surjection random_surjection(Rng& rng, unsigned base, unsigned depth, bool restrict_domain, unsigned extra)
{
    Domain domain = restrict_domain ? random_domain(rng, base) : Domain::full(base);
    return Surjection::from_filtering(random_filtering(rng, base, depth, domain, {}, extra));
}

} // namespace dualramsey
