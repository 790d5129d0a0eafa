#pragma once

// Clopen lex-intervals, depth-k interval partitions and filterings.
//
// A filtering is stored through its boundary tuples: the depth-j tuple lists
// the maxima of all depth-j cells except the last, in lex order of the cell
// words. Below the stored depth every cell is split by the greedy rule over
// the (stem length, lex) enumeration of the filtering's domain.

#include "dualramsey/cantor.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dualramsey {

class ClopenInterval {
public:
    /// lo must be eventually 0, hi eventually b-1, lo <= hi.
    ClopenInterval(Point lo, Point hi);

    static ClopenInterval whole(unsigned base);
    static ClopenInterval of_node(const Node& s);

    unsigned base() const { return lo_.base(); }
    const Point& lo() const { return lo_; }
    const Point& hi() const { return hi_; }
    bool contains(const Point& x) const;
    bool contains(const ClopenInterval& other) const;
    /// Intersection, if nonempty.
    std::optional<ClopenInterval> intersect(const ClopenInterval& other) const;

    std::string to_string() const;
    bool operator==(const ClopenInterval&) const = default;

private:
    Point lo_;
    Point hi_;
};

/// An increasing tuple in [A_b]^l; as a fingerprint l = b^k - 1.
class BoundaryTuple {
public:
    BoundaryTuple(unsigned base, std::vector<Point> entries);

    unsigned base() const { return base_; }
    const std::vector<Point>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Point& operator[](std::size_t i) const { return entries_[i]; }
    /// k with b^k - 1 == size(), if any.
    std::optional<unsigned> depth() const;

    bool operator==(const BoundaryTuple&) const = default;

private:
    unsigned base_;
    std::vector<Point> entries_;
};

/// b^k consecutive cells in increasing lex order.
struct DepthPartition {
    unsigned base;
    unsigned depth;
    std::vector<ClopenInterval> cells;

    BoundaryTuple boundaries() const;
};

DepthPartition partition_from_tuple(unsigned base, unsigned depth, const std::vector<Point>& tuple);

/// Index of the unique cell containing x (cells are right-closed at their maxima).
std::size_t cell_containing(const DepthPartition& partition, const Point& x);

/// The set of A_b points enumerated by the refinement rule: A_b intersected
/// with a finite union of clopen intervals, minus the top endpoint of that
/// union when it is not max b^omega.
class Domain {
public:
    static Domain full(unsigned base);
    /// Pieces are sorted and merged; must be nonempty.
    static Domain of(unsigned base, std::vector<ClopenInterval> pieces);

    unsigned base() const { return base_; }
    const std::vector<ClopenInterval>& pieces() const { return pieces_; }
    bool is_full() const;

    bool contains(const Point& y) const;
    /// Least (stem length, lex) domain point strictly between a and c.
    std::optional<Point> first_between(const Point& a, const Point& c) const;

    bool operator==(const Domain&) const = default;

private:
    Domain(unsigned base, std::vector<ClopenInterval> pieces) : base_(base), pieces_(std::move(pieces)) {}
    unsigned base_;
    std::vector<ClopenInterval> pieces_;
};

/// The b-1 split maxima of a cell under the greedy rule over `domain`.
/// Throws std::domain_error when the domain is too thin inside the cell.
std::vector<Point> greedy_splits(const ClopenInterval& cell, const Domain& domain);

namespace detail {
struct ExtensionCache;
}

class Filtering {
public:
    /// The standard filtering (W_s), materialized to `depth`.
    static Filtering standard(unsigned base, unsigned depth = 0);
    /// Unchecked; run validate_filtering before trusting the result.
    static Filtering from_levels(unsigned base, std::vector<std::vector<Point>> levels, Domain domain);
    static Filtering from_levels(unsigned base, std::vector<std::vector<Point>> levels);
    /// The filtering with the given deepest tuple; shallower levels are read off it.
    static Filtering from_tuple(unsigned base, unsigned depth, std::vector<Point> tuple, Domain domain);

    unsigned base() const { return base_; }
    /// Number of stored levels below the root.
    unsigned depth() const { return static_cast<unsigned>(levels_.size()); }
    const Domain& domain() const { return domain_; }
    /// Stored boundary tuple at depth d (1 <= d <= depth()); depth 0 is empty.
    const std::vector<Point>& level(unsigned d) const;

    /// Maximum of U_s for any word s; deeper than depth() uses the greedy rule.
    Point cell_max(const Word& s) const;
    ClopenInterval cell(const Word& s) const;
    /// Split maxima of U_s (b-1 points).
    std::vector<Point> splits(const Word& s) const;
    /// Boundary tuple at any depth.
    std::vector<Point> tuple(unsigned d) const;

    bool same_levels(const Filtering& other) const;

private:
    Filtering(unsigned base, std::vector<std::vector<Point>> levels, Domain domain);
    std::vector<Point> split_cell(const Word& s, const ClopenInterval& c) const;
    unsigned base_;
    std::vector<std::vector<Point>> levels_;
    Domain domain_;
    std::shared_ptr<detail::ExtensionCache> cache_;
};

struct ValidationReport {
    bool ok = true;
    std::string clause;   // "i", "ii", "iii" or "domain"
    unsigned depth = 0;
    Word cell;            // word of the offending parent cell
    std::string message;
};

ValidationReport validate_filtering(const Filtering& f);

/// Materializes stored levels down to depth d with the greedy rule.
Filtering refine_canonical(const Filtering& f, unsigned d);

/// Shallowest node whose cell maximum is x, searched down to `cap`.
struct MaxLocation {
    enum class Kind { Found, Absent, Undecided };
    Kind kind = Kind::Undecided;
    Word node;
};

MaxLocation locate_max(const Filtering& f, const Point& x, unsigned cap);

struct RefinementResult {
    enum class Verdict { Refines, NotRefines, Undecided };
    Verdict verdict = Verdict::Refines;
    std::optional<Point> witness;
    /// Deepest level of U needed to exhibit all boundaries of V.
    unsigned certificate_depth = 0;
};

std::string to_string(RefinementResult::Verdict v);

/// V refines U to depth d: every depth-d boundary of V is a cell maximum of U.
RefinementResult is_refinement(const Filtering& v, const Filtering& u, unsigned d, unsigned cap = 64);

unsigned default_depth_cap();

} // namespace dualramsey
