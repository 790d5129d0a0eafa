#include "dualramsey/intervals.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace dualramsey {

namespace {

bool less(const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; }
bool less_eq(const Point& x, const Point& y) { return lex_compare(x, y) != std::strong_ordering::greater; }
const Point& max_of(const Point& x, const Point& y) { return less(x, y) ? y : x; }
const Point& min_of(const Point& x, const Point& y) { return less(x, y) ? x : y; }

std::size_t ipow(std::size_t b, unsigned k)
{
    std::size_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= b;
    }
    return r;
}

std::size_t word_index(const Word& w, unsigned base)
{
    std::size_t idx = 0;
    for (Digit d : w) {
        idx = idx * base + d;
    }
    return idx;
}

Word index_word(std::size_t idx, unsigned base, unsigned len)
{
    Word w(len);
    for (unsigned i = len; i-- > 0;) {
        w[i] = static_cast<Digit>(idx % base);
        idx /= base;
    }
    return w;
}

bool key_less(const Point& x, const Point& y)
{
    if (x.stem().size() != y.stem().size()) {
        return x.stem().size() < y.stem().size();
    }
    return less(x, y);
}

} // namespace

ClopenInterval::ClopenInterval(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_.base() != hi_.base()) {
        throw std::invalid_argument("interval endpoints have different bases");
    }
    if (!lo_.eventually_zero()) {
        throw std::invalid_argument("interval minimum must be eventually 0, got " + lo_.to_string());
    }
    if (!hi_.eventually_top()) {
        throw std::invalid_argument("interval maximum must be eventually b-1, got " + hi_.to_string());
    }
    if (less(hi_, lo_)) {
        throw std::invalid_argument("empty interval " + lo_.to_string() + " > " + hi_.to_string());
    }
}

ClopenInterval ClopenInterval::whole(unsigned base) { return ClopenInterval(Point::min(base), Point::max(base)); }

ClopenInterval ClopenInterval::of_node(const Node& s) { return ClopenInterval(node_min(s), node_max(s)); }

bool ClopenInterval::contains(const Point& x) const { return less_eq(lo_, x) && less_eq(x, hi_); }

bool ClopenInterval::contains(const ClopenInterval& other) const
{
    return less_eq(lo_, other.lo_) && less_eq(other.hi_, hi_);
}

std::optional<ClopenInterval> ClopenInterval::intersect(const ClopenInterval& other) const
{
    const Point& lo = max_of(lo_, other.lo_);
    const Point& hi = min_of(hi_, other.hi_);
    if (less(hi, lo)) {
        return std::nullopt;
    }
    return ClopenInterval(lo, hi);
}

std::string ClopenInterval::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

BoundaryTuple::BoundaryTuple(unsigned base, std::vector<Point> entries) : base_(base), entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Point& p = entries_[i];
        if (p.base() != base) {
            throw std::invalid_argument("tuple entry has wrong base");
        }
        if (!p.in_a()) {
            throw std::invalid_argument("tuple entry " + std::to_string(i) + " = " + p.to_string() + " is not in A_b");
        }
        if (i > 0 && !less(entries_[i - 1], p)) {
            throw std::invalid_argument("tuple is not strictly increasing at entry " + std::to_string(i));
        }
    }
}

std::optional<unsigned> BoundaryTuple::depth() const
{
    std::size_t cells = entries_.size() + 1;
    unsigned k = 0;
    while (cells % base_ == 0) {
        cells /= base_;
        ++k;
    }
    if (cells != 1) {
        return std::nullopt;
    }
    return k;
}

BoundaryTuple DepthPartition::boundaries() const
{
    std::vector<Point> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        out.push_back(cells[i].hi());
    }
    return BoundaryTuple(base, std::move(out));
}

DepthPartition partition_from_tuple(unsigned base, unsigned depth, const std::vector<Point>& tuple)
{
    if (tuple.size() + 1 != ipow(base, depth)) {
        throw std::invalid_argument("depth-" + std::to_string(depth) + " tuple needs " +
                                    std::to_string(ipow(base, depth) - 1) + " entries, got " +
                                    std::to_string(tuple.size()));
    }
    BoundaryTuple checked(base, tuple);
    DepthPartition p{base, depth, {}};
    p.cells.reserve(tuple.size() + 1);
    Point lo = Point::min(base);
    for (const Point& hi : tuple) {
        p.cells.emplace_back(lo, hi);
        lo = interval_successor(hi);
    }
    p.cells.emplace_back(lo, Point::max(base));
    return p;
}

std::size_t cell_containing(const DepthPartition& partition, const Point& x)
{
    auto it = std::lower_bound(partition.cells.begin(), partition.cells.end(), x,
                               [](const ClopenInterval& c, const Point& p) { return less(c.hi(), p); });
    return static_cast<std::size_t>(it - partition.cells.begin());
}

Domain Domain::full(unsigned base) { return Domain(base, {ClopenInterval::whole(base)}); }

Domain Domain::of(unsigned base, std::vector<ClopenInterval> pieces)
{
    if (pieces.empty()) {
        throw std::invalid_argument("domain needs at least one interval");
    }
    for (const auto& p : pieces) {
        if (p.base() != base) {
            throw std::invalid_argument("domain interval has wrong base");
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const ClopenInterval& a, const ClopenInterval& b) { return less(a.lo(), b.lo()); });
    std::vector<ClopenInterval> merged;
    for (auto& p : pieces) {
        if (!merged.empty()) {
            const Point& top = merged.back().hi();
            bool touches = !less(top, p.lo()) || (!top.is_max() && interval_successor(top) == p.lo());
            if (touches) {
                merged.back() = ClopenInterval(merged.back().lo(), max_of(top, p.hi()));
                continue;
            }
        }
        merged.push_back(std::move(p));
    }
    return Domain(base, std::move(merged));
}

bool Domain::is_full() const { return pieces_.size() == 1 && pieces_[0] == ClopenInterval::whole(base_); }

bool Domain::contains(const Point& y) const
{
    if (!y.in_a()) {
        return false;
    }
    const Point& top = pieces_.back().hi();
    if (y == top && !top.is_max()) {
        return false;
    }
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const ClopenInterval& p) { return p.contains(y); });
}

std::optional<Point> Domain::first_between(const Point& a, const Point& c) const
{
    std::optional<Point> best;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const ClopenInterval& piece = pieces_[i];
        // For A_b points y: y >= lo iff y > lo, and y <= hi iff y < succ(hi).
        Point upper = piece.hi().is_max() ? piece.hi()
                      : (i + 1 == pieces_.size()) ? piece.hi()
                                                  : interval_successor(piece.hi());
        const Point& lo = max_of(a, piece.lo());
        const Point& hi = min_of(c, upper);
        if (!less(lo, hi)) {
            continue;
        }
        auto y = first_enumerated_between(lo, hi);
        if (y && (!best || key_less(*y, *best))) {
            best = std::move(y);
        }
    }
    return best;
}

std::vector<Point> greedy_splits(const ClopenInterval& cell, const Domain& domain)
{
    const unsigned b = cell.base();
    std::vector<Point> out;
    out.reserve(b - 1);
    Point prev = cell.lo();
    for (unsigned p = 0; p + 1 < b; ++p) {
        auto y = domain.first_between(prev, cell.hi());
        if (!y) {
            throw std::domain_error("domain has no point left to split cell " + cell.to_string());
        }
        out.push_back(*y);
        prev = std::move(*y);
    }
    return out;
}

namespace detail {
struct ExtensionCache {
    std::mutex mutex;
    std::unordered_map<Word, std::vector<Point>, WordHash> splits;
};
} // namespace detail

Filtering::Filtering(unsigned base, std::vector<std::vector<Point>> levels, Domain domain)
    : base_(base), levels_(std::move(levels)), domain_(std::move(domain)),
      cache_(std::make_shared<detail::ExtensionCache>())
{
    if (domain_.base() != base_) {
        throw std::invalid_argument("filtering domain has wrong base");
    }
}

Filtering Filtering::standard(unsigned base, unsigned depth)
{
    std::vector<std::vector<Point>> levels;
    for (unsigned d = 1; d <= depth; ++d) {
        std::vector<Point> t;
        const std::size_t n = ipow(base, d);
        t.reserve(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            t.push_back(node_max(Node(base, index_word(i, base, d))));
        }
        levels.push_back(std::move(t));
    }
    return Filtering(base, std::move(levels), Domain::full(base));
}

Filtering Filtering::from_levels(unsigned base, std::vector<std::vector<Point>> levels, Domain domain)
{
    return Filtering(base, std::move(levels), std::move(domain));
}

Filtering Filtering::from_levels(unsigned base, std::vector<std::vector<Point>> levels)
{
    return Filtering(base, std::move(levels), Domain::full(base));
}

Filtering Filtering::from_tuple(unsigned base, unsigned depth, std::vector<Point> tuple, Domain domain)
{
    partition_from_tuple(base, depth, tuple); // validates
    std::vector<std::vector<Point>> levels(depth);
    for (unsigned d = 1; d <= depth; ++d) {
        const std::size_t stride = ipow(base, depth - d);
        const std::size_t n = ipow(base, d) - 1;
        auto& lvl = levels[d - 1];
        lvl.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            lvl.push_back(tuple[(i + 1) * stride - 1]);
        }
    }
    return Filtering(base, std::move(levels), std::move(domain));
}

const std::vector<Point>& Filtering::level(unsigned d) const
{
    if (d == 0 || d > depth()) {
        throw std::out_of_range("no stored level " + std::to_string(d));
    }
    return levels_[d - 1];
}

ClopenInterval Filtering::cell(const Word& s) const
{
    const unsigned stored = std::min<unsigned>(depth(), static_cast<unsigned>(s.size()));
    Word prefix(s.begin(), s.begin() + stored);
    const std::size_t idx = word_index(prefix, base_);
    const std::size_t last = ipow(base_, stored) - 1;
    Point lo = idx == 0 ? Point::min(base_) : interval_successor(levels_[stored - 1][idx - 1]);
    Point hi = idx == last ? Point::max(base_) : levels_[stored - 1][idx];
    ClopenInterval current(std::move(lo), std::move(hi));
    for (std::size_t j = stored; j < s.size(); ++j) {
        std::vector<Point> sp = splits(prefix);
        const Digit c = s[j];
        Point clo = c == 0 ? current.lo() : interval_successor(sp[c - 1]);
        Point chi = c + 1u == base_ ? current.hi() : sp[c];
        current = ClopenInterval(std::move(clo), std::move(chi));
        prefix.push_back(c);
    }
    return current;
}

Point Filtering::cell_max(const Word& s) const
{
    if (s.size() <= depth()) {
        if (s.empty()) {
            return Point::max(base_);
        }
        const std::size_t idx = word_index(s, base_);
        if (idx + 1 == ipow(base_, static_cast<unsigned>(s.size()))) {
            return Point::max(base_);
        }
        return levels_[s.size() - 1][idx];
    }
    return cell(s).hi();
}

std::vector<Point> Filtering::splits(const Word& s) const
{
    if (s.size() < depth()) {
        const auto& next = levels_[s.size()];
        const std::size_t base_idx = word_index(s, base_) * base_;
        return std::vector<Point>(next.begin() + static_cast<std::ptrdiff_t>(base_idx),
                                  next.begin() + static_cast<std::ptrdiff_t>(base_idx + base_ - 1));
    }
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->splits.find(s);
        if (it != cache_->splits.end()) {
            return it->second;
        }
    }
    return split_cell(s, cell(s));
}

std::vector<Point> Filtering::split_cell(const Word& s, const ClopenInterval& c) const
{
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->splits.find(s);
        if (it != cache_->splits.end()) {
            return it->second;
        }
    }
    std::vector<Point> sp = greedy_splits(c, domain_);
    std::lock_guard lock(cache_->mutex);
    // Idempotent: a concurrent writer computed the same value.
    cache_->splits.emplace(s, sp);
    return sp;
}

std::vector<Point> Filtering::tuple(unsigned d) const
{
    if (d <= depth()) {
        return d == 0 ? std::vector<Point>{} : levels_[d - 1];
    }
    // Level by level, so each cell is split once.
    std::vector<Point> cur = depth() == 0 ? std::vector<Point>{} : levels_.back();
    for (unsigned j = depth(); j < d; ++j) {
        const std::size_t n = ipow(base_, j);
        std::vector<Point> next;
        next.reserve(n * base_ - 1);
        Word w(j, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Point lo = i == 0 ? Point::min(base_) : interval_successor(cur[i - 1]);
            Point hi = i + 1 == n ? Point::max(base_) : cur[i];
            std::vector<Point> sp = split_cell(w, ClopenInterval(std::move(lo), hi));
            next.insert(next.end(), sp.begin(), sp.end());
            if (i + 1 < n) {
                next.push_back(std::move(hi));
            }
            increment_word(w, base_);
        }
        cur = std::move(next);
    }
    return cur;
}

bool Filtering::same_levels(const Filtering& other) const
{
    return base_ == other.base_ && levels_ == other.levels_ && domain_ == other.domain_;
}

ValidationReport validate_filtering(const Filtering& f)
{
    const unsigned b = f.base();
    auto fail = [](std::string clause, unsigned depth, Word cell, std::string msg) {
        return ValidationReport{false, std::move(clause), depth, std::move(cell), std::move(msg)};
    };
    for (unsigned d = 1; d <= f.depth(); ++d) {
        const auto& lvl = f.level(d);
        if (lvl.size() + 1 != ipow(b, d)) {
            return fail("ii", d, {}, "depth " + std::to_string(d) + " has " + std::to_string(lvl.size()) +
                                         " boundaries, expected " + std::to_string(ipow(b, d) - 1));
        }
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const Word parent = index_word(i / b, b, d - 1);
            if (lvl[i].base() != b) {
                return fail("ii", d, parent, "boundary with wrong base");
            }
            if (!lvl[i].in_a()) {
                return fail("ii", d, parent,
                            "boundary " + lvl[i].to_string() + " is not the maximum of a nonempty clopen cell");
            }
            if (i > 0) {
                auto ord = lex_compare(lvl[i - 1], lvl[i]);
                if (ord == std::strong_ordering::equal) {
                    return fail("ii/iii", d, parent, "equal maxima " + lvl[i].to_string() + ": cells not disjoint");
                }
                if (ord == std::strong_ordering::greater) {
                    return fail("iii", d, parent, "maxima not increasing at index " + std::to_string(i));
                }
            }
        }
        if (d > 1) {
            const auto& up = f.level(d - 1);
            for (std::size_t i = 0; i < up.size(); ++i) {
                if (lvl[i * b + (b - 1)] != up[i]) {
                    return fail("ii", d, index_word(i, b, d - 1),
                                "children do not partition their parent cell");
                }
            }
        }
    }
    // Every deepest cell must be splittable by the domain forever: its maximum is
    // approached from below by domain points.
    const std::size_t cells = ipow(b, f.depth());
    for (std::size_t i = 0; i < cells; ++i) {
        Word w = index_word(i, b, f.depth());
        ClopenInterval c = f.cell(w);
        bool limit = c.hi().is_max() ||
                     std::any_of(f.domain().pieces().begin(), f.domain().pieces().end(),
                                 [&](const ClopenInterval& p) { return p.contains(c.hi()); });
        if (!limit) {
            return fail("domain", f.depth(), w, "cell maximum " + c.hi().to_string() + " lies outside the domain");
        }
        try {
            greedy_splits(c, f.domain());
        } catch (const std::domain_error& e) {
            return fail("domain", f.depth(), w, e.what());
        }
    }
    return {};
}

Filtering refine_canonical(const Filtering& f, unsigned d)
{
    if (d <= f.depth()) {
        return f;
    }
    std::vector<std::vector<Point>> levels;
    for (unsigned j = 1; j <= d; ++j) {
        levels.push_back(f.tuple(j));
    }
    return Filtering::from_levels(f.base(), std::move(levels), f.domain());
}

MaxLocation locate_max(const Filtering& f, const Point& x, unsigned cap)
{
    const unsigned b = f.base();
    if (x.base() != b) {
        throw std::invalid_argument("base mismatch");
    }
    if (x.is_max()) {
        return {MaxLocation::Kind::Found, {}};
    }
    if (!x.in_a()) {
        return {MaxLocation::Kind::Absent, {}};
    }
    const unsigned stored = std::min(f.depth(), cap);
    for (unsigned d = 1; d <= stored; ++d) {
        const auto& lvl = f.level(d);
        auto it = std::lower_bound(lvl.begin(), lvl.end(), x, less);
        if (it != lvl.end() && *it == x) {
            return {MaxLocation::Kind::Found, index_word(static_cast<std::size_t>(it - lvl.begin()), b, d)};
        }
    }
    if (f.depth() >= cap) {
        return {MaxLocation::Kind::Undecided, {}};
    }
    if (!f.domain().contains(x)) {
        return {MaxLocation::Kind::Absent, {}};
    }
    Word node;
    if (f.depth() > 0) {
        auto part = partition_from_tuple(b, f.depth(), f.level(f.depth()));
        node = index_word(cell_containing(part, x), b, f.depth());
    }
    while (node.size() < cap) {
        std::vector<Point> sp = f.splits(node);
        Digit c = 0;
        while (c + 1u < b && less(sp[c], x)) {
            ++c;
        }
        node.push_back(c);
        if (c + 1u < b && sp[c] == x) {
            return {MaxLocation::Kind::Found, node};
        }
    }
    return {MaxLocation::Kind::Undecided, {}};
}

std::string to_string(RefinementResult::Verdict v)
{
    switch (v) {
    case RefinementResult::Verdict::Refines: return "refines";
    case RefinementResult::Verdict::NotRefines: return "not a refinement";
    case RefinementResult::Verdict::Undecided: return "undecided at cap";
    }
    return "?";
}

RefinementResult is_refinement(const Filtering& v, const Filtering& u, unsigned d, unsigned cap)
{
    if (v.base() != u.base()) {
        throw std::invalid_argument("base mismatch");
    }
    RefinementResult result;
    std::optional<Point> undecided;
    for (const Point& x : v.tuple(d)) {
        MaxLocation loc = locate_max(u, x, cap);
        switch (loc.kind) {
        case MaxLocation::Kind::Found:
            result.certificate_depth = std::max(result.certificate_depth, static_cast<unsigned>(loc.node.size()));
            break;
        case MaxLocation::Kind::Absent:
            return {RefinementResult::Verdict::NotRefines, x, result.certificate_depth};
        case MaxLocation::Kind::Undecided:
            if (!undecided) {
                undecided = x;
            }
            break;
        }
    }
    if (undecided) {
        return {RefinementResult::Verdict::Undecided, undecided, cap};
    }
    return result;
}

unsigned default_depth_cap()
{
    if (const char* env = std::getenv("RAMSEY_DEPTH_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 4096) {
            return static_cast<unsigned>(v);
        }
    }
    return 64;
}

} // namespace dualramsey
