#include "dualramsey/surjections.hpp"

#include <algorithm>

namespace dualramsey {

namespace {

std::string describe(const ValidationReport& r)
{
    return "filtering violates clause " + r.clause + " at depth " + std::to_string(r.depth) + ", cell '" +
           word_to_string(r.cell) + "': " + r.message;
}

bool less(const Point& x, const Point& y) { return lex_compare(x, y) == std::strong_ordering::less; }

} // namespace

InvalidFiltering::InvalidFiltering(ValidationReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report))
{
}

struct Surjection::Impl {
    unsigned base;
    std::optional<Filtering> filtering;
    std::optional<Surjection> outer;
    std::optional<Surjection> inner;
};

Surjection Surjection::identity(unsigned base) { return from_filtering(Filtering::standard(base, 0)); }

Surjection Surjection::from_filtering(Filtering f)
{
    ValidationReport r = validate_filtering(f);
    if (!r.ok) {
        throw InvalidFiltering(std::move(r));
    }
    const unsigned b = f.base();
    return Surjection(std::make_shared<const Impl>(Impl{b, std::move(f), std::nullopt, std::nullopt}));
}

Surjection Surjection::chain(Surjection outer, Surjection inner)
{
    if (outer.base() != inner.base()) {
        throw std::invalid_argument("cannot compose surjections of bases " + std::to_string(outer.base()) +
                                    " and " + std::to_string(inner.base()));
    }
    const unsigned b = outer.base();
    return Surjection(std::make_shared<const Impl>(Impl{b, std::nullopt, std::move(outer), std::move(inner)}));
}

unsigned Surjection::base() const { return impl_->base; }

bool Surjection::is_chain() const { return !impl_->filtering.has_value(); }

const Filtering& Surjection::filtering() const
{
    if (!impl_->filtering) {
        throw std::logic_error("composition chain has no stored filtering");
    }
    return *impl_->filtering;
}

const Surjection& Surjection::outer() const
{
    if (!impl_->outer) {
        throw std::logic_error("not a composition chain");
    }
    return *impl_->outer;
}

const Surjection& Surjection::inner() const
{
    if (!impl_->inner) {
        throw std::logic_error("not a composition chain");
    }
    return *impl_->inner;
}

Point Surjection::cell_max(const Word& s) const
{
    if (impl_->filtering) {
        return impl_->filtering->cell_max(s);
    }
    return preimage_max(*impl_->inner, impl_->outer->cell_max(s));
}

ClopenInterval Surjection::cell(const Word& s) const
{
    if (impl_->filtering) {
        return impl_->filtering->cell(s);
    }
    Word prev = s;
    std::size_t i = prev.size();
    while (i > 0 && prev[i - 1] == 0) {
        prev[--i] = static_cast<Digit>(base() - 1);
    }
    if (i == 0) {
        return ClopenInterval(Point::min(base()), cell_max(s));
    }
    --prev[i - 1];
    return ClopenInterval(interval_successor(cell_max(prev)), cell_max(s));
}

std::vector<Point> Surjection::splits(const Word& s) const
{
    if (impl_->filtering) {
        return impl_->filtering->splits(s);
    }
    std::vector<Point> sp = impl_->outer->splits(s);
    for (Point& y : sp) {
        y = preimage_max(*impl_->inner, y);
    }
    return sp;
}

std::vector<Point> Surjection::boundary_tuple(unsigned k) const
{
    if (impl_->filtering) {
        return impl_->filtering->tuple(k);
    }
    std::vector<Point> t = impl_->outer->boundary_tuple(k);
    for (Point& y : t) {
        y = preimage_max(*impl_->inner, y);
    }
    return t;
}

Filtering to_filtering(const Surjection& f, unsigned d)
{
    if (!f.is_chain() && d >= f.filtering().depth()) {
        return refine_canonical(f.filtering(), d);
    }
    std::vector<std::vector<Point>> levels;
    for (unsigned j = 1; j <= d; ++j) {
        levels.push_back(f.boundary_tuple(j));
    }
    return Filtering::from_levels(f.base(), std::move(levels), Domain::full(f.base()));
}

Surjection truncate(const Surjection& f, unsigned d)
{
    std::vector<std::vector<Point>> levels;
    for (unsigned j = 1; j <= d; ++j) {
        levels.push_back(f.boundary_tuple(j));
    }
    return Surjection::from_filtering(Filtering::from_levels(f.base(), std::move(levels), Domain::full(f.base())));
}

Surjection compose(const Surjection& f, const Surjection& h) { return Surjection::chain(f, h); }

EvalResult evaluate(const Surjection& f, const Point& x, unsigned n)
{
    const unsigned b = f.base();
    if (x.base() != b) {
        throw std::invalid_argument("base mismatch");
    }
    EvalResult r;
    if (x.is_max() || x.is_min()) {
        r.exact = x;
    } else {
        Word node;
        while (node.size() < n) {
            const std::vector<Point> sp = f.splits(node);
            Digit c = 0;
            while (c + 1u < b && less(sp[c], x)) {
                ++c;
            }
            if (c + 1u < b && sp[c] == x) {
                node.push_back(c);
                r.exact = Point(b, std::move(node), static_cast<Digit>(b - 1));
                break;
            }
            if (c > 0 && x.eventually_zero() && interval_successor(sp[c - 1]) == x) {
                node.push_back(c);
                r.exact = Point(b, std::move(node), 0);
                break;
            }
            node.push_back(c);
        }
        if (!r.exact) {
            r.digits = std::move(node);
            return r;
        }
    }
    r.digits = r.exact->prefix(n);
    return r;
}

Point preimage_max(const Surjection& h, const Point& y)
{
    if (y.base() != h.base()) {
        throw std::invalid_argument("base mismatch");
    }
    if (!y.eventually_top()) {
        throw std::invalid_argument("preimage_max needs an eventually b-1 point, got " + y.to_string());
    }
    if (y.is_max()) {
        return y;
    }
    return h.cell_max(y.stem());
}

MaxLocation locate_max(const Surjection& f, const Point& x, unsigned cap)
{
    if (!f.is_chain()) {
        return locate_max(f.filtering(), x, cap);
    }
    MaxLocation in = locate_max(f.inner(), x, cap);
    if (in.kind != MaxLocation::Kind::Found) {
        return in;
    }
    return locate_max(f.outer(), Point(f.base(), std::move(in.node), static_cast<Digit>(f.base() - 1)), cap);
}

RefinementResult refines(const Surjection& g, const Surjection& h, unsigned d, unsigned cap)
{
    if (g.base() != h.base()) {
        throw std::invalid_argument("base mismatch");
    }
    RefinementResult result;
    std::optional<Point> undecided;
    for (const Point& x : g.boundary_tuple(d)) {
        MaxLocation loc = locate_max(h, x, cap);
        if (loc.kind == MaxLocation::Kind::Absent) {
            return {RefinementResult::Verdict::NotRefines, x, result.certificate_depth};
        }
        if (loc.kind == MaxLocation::Kind::Undecided) {
            if (!undecided) {
                undecided = x;
            }
            continue;
        }
        result.certificate_depth = std::max(result.certificate_depth, static_cast<unsigned>(loc.node.size()));
    }
    if (undecided) {
        return {RefinementResult::Verdict::Undecided, undecided, cap};
    }
    return result;
}

std::string DistanceResult::to_string() const
{
    switch (kind) {
    case Kind::Exact: return value.to_string();
    case Kind::ZeroToCap: return "0 (to cap " + std::to_string(depth) + ")";
    case Kind::AtMost:
        return "<= " + value.to_string() + " (certified to depth " + std::to_string(depth) + ")";
    }
    return "?";
}

namespace {

bool identical_below(const Surjection& f, const Surjection& g, const Word& s)
{
    if (f.shares_rep(g)) {
        return true;
    }
    if (f.is_chain() || g.is_chain()) {
        return false;
    }
    const Filtering& F = f.filtering();
    const Filtering& G = g.filtering();
    // Same cell, both past their stored levels, same domain: the greedy rule
    // produces the same subtree.
    return s.size() >= F.depth() && s.size() >= G.depth() && F.domain() == G.domain();
}

} // namespace

DistanceResult distance(const Surjection& f, const Surjection& g, unsigned cap, std::size_t node_budget)
{
    if (f.base() != g.base()) {
        throw std::invalid_argument("base mismatch");
    }
    // h is onto, so rho(f1 o h, g1 o h) = rho(f1, g1).
    if (f.is_chain() && g.is_chain() && f.inner().shares_rep(g.inner())) {
        return distance(f.outer(), g.outer(), cap, node_budget);
    }
    const unsigned b = f.base();
    std::vector<Word> frontier{Word{}};
    std::size_t visited = 0;
    for (unsigned depth = 0; depth < cap; ++depth) {
        std::vector<Word> next;
        for (const Word& s : frontier) {
            if (identical_below(f, g, s)) {
                continue;
            }
            ++visited;
            if (f.splits(s) != g.splits(s)) {
                return {DistanceResult::Kind::Exact, Dyadic::pow2_neg(depth), depth, false};
            }
            for (unsigned c = 0; c < b; ++c) {
                Word t = s;
                t.push_back(static_cast<Digit>(c));
                next.push_back(std::move(t));
            }
        }
        if (next.empty()) {
            return {DistanceResult::Kind::ZeroToCap, Dyadic::zero(), cap, true};
        }
        if (visited + next.size() > node_budget) {
            return {DistanceResult::Kind::AtMost, Dyadic::pow2_neg(depth + 1), depth + 1, false};
        }
        frontier = std::move(next);
    }
    return {DistanceResult::Kind::ZeroToCap, Dyadic::zero(), cap, false};
}

Surjection tuple_to_factor(const Surjection& h, const std::vector<Point>& tuple, unsigned cap)
{
    const unsigned b = h.base();
    BoundaryTuple checked(b, tuple);
    auto k = checked.depth();
    if (!k) {
        throw std::invalid_argument("tuple length " + std::to_string(tuple.size()) + " is not b^k - 1");
    }
    std::vector<Point> images;
    images.reserve(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        MaxLocation loc = locate_max(h, tuple[i], cap);
        if (loc.kind == MaxLocation::Kind::Absent) {
            throw FactorError("entry " + std::to_string(i) + " = " + tuple[i].to_string() +
                                  " is not a cell maximum of h",
                              tuple[i], false);
        }
        if (loc.kind == MaxLocation::Kind::Undecided) {
            throw FactorError("entry " + std::to_string(i) + " = " + tuple[i].to_string() +
                                  " not found among cell maxima of h to depth " + std::to_string(cap),
                              tuple[i], true);
        }
        images.emplace_back(b, std::move(loc.node), static_cast<Digit>(b - 1));
    }
    Surjection f = tuple_to_surjection(b, *k, images);
    if (compose(f, h).boundary_tuple(*k) != tuple) {
        throw std::logic_error("factor does not reproduce the tuple");
    }
    return f;
}

Surjection factor_through(const Surjection& g, const Surjection& h, unsigned d, unsigned cap)
{
    try {
        return tuple_to_factor(h, g.boundary_tuple(d), cap);
    } catch (const FactorError& e) {
        throw FactorError(std::string(e.undecided() ? "undecided: " : "g does not refine h: ") + e.what(),
                          e.witness(), e.undecided());
    }
}

Surjection tuple_to_surjection(unsigned base, unsigned k, const std::vector<Point>& tuple)
{
    return Surjection::from_filtering(Filtering::from_tuple(base, k, tuple, Domain::full(base)));
}

std::vector<Point> max_set(const Surjection& f, unsigned d) { return f.boundary_tuple(d); }

} // namespace dualramsey
