#pragma once

// Colorings and finite experiments: epsilon parameters, the type coloring of
// fingerprints, the omega-coloring of Q-copies with its witnesses, and the
// oscillation search.

#include "dualramsey/devlin.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dualramsey {

struct EpsilonParameters {
    unsigned k = 0;
    unsigned l = 0;
    BigInt t;
};

/// k = floor(log2(1/eps)) + 1, l = b^k - 1, t = t_l; exact for eps in (0, 1].
EpsilonParameters epsilon_parameters(unsigned b, double eps);

/// canonical_coloring of the depth-k fingerprint of f.
BigInt lower_bound_coloring(const Surjection& f, unsigned k);

struct ColorWitness {
    BigInt color;
    bool found = false;
    unsigned depth = 0;               // search depth where the tuple appeared
    std::vector<Point> tuple;         // in Y_h, equal to the fingerprint of f o h
    std::vector<Point> factor_tuple;  // depth-k fingerprint of f
    bool verified = false;
};

struct ExperimentReport {
    unsigned b = 2;
    unsigned k = 0;
    unsigned l = 0;
    BigInt t;
    unsigned cap = 0;
    std::vector<ColorWitness> colors;

    std::size_t realized() const;
    bool all_verified() const;
};

/// For each color r < t_l, a tuple of type r in Y_h, its factor f and checks
/// that f o h and its depth-k truncation both get color r.
ExperimentReport realize_all_colors(const Surjection& h, unsigned k, unsigned cap);

enum class Tri { No, Yes, Pending };

std::string to_string(Tri t);

/// Whether Y_h meets the clopen interval q in a non-scattered set. Decided
/// exactly for filterings; for chains by finding a whole cell of h inside q
/// within depth cap.
Tri nonscattered_in(const Surjection& h, const ClopenInterval& q, unsigned cap);

/// Whole-cell search alone (any representation).
Tri contains_full_cell(const Surjection& h, const ClopenInterval& q, unsigned cap);

/// Y = Y_h intersected with a finite union of clopen intervals, base 2.
class QCopy {
public:
    /// Throws std::invalid_argument when some piece meets Y_h in a scattered set.
    QCopy(Surjection h, std::vector<ClopenInterval> restriction, unsigned cap = 64);
    static QCopy whole(Surjection h);

    const Surjection& h() const { return h_; }
    const std::vector<ClopenInterval>& restriction() const { return pieces_; }

    /// Membership of t in T_Y = {t : W_t intersect Y non-scattered}.
    Tri in_tree(const Word& t, unsigned cap = 64) const;

private:
    Surjection h_;
    std::vector<ClopenInterval> pieces_;
};

struct TreeNodeInfo {
    Word word;
    bool splitting = false;
    bool pending = false;
};

/// T_Y restricted to words of length <= d, in breadth-first order.
std::vector<TreeNodeInfo> perfect_tree(const QCopy& y, unsigned d, unsigned cap = 64);

struct Branches {
    std::vector<Word> min_splits;  // t_0, t_1, ...
    std::vector<Word> max_splits;  // s_0, s_1, ...
};

/// Splitting nodes along the minimum and maximum branches of T_Y, walked to
/// the given depths. Throws std::runtime_error on a pending node.
Branches splitting_branches(const QCopy& y, unsigned min_depth, unsigned max_depth, unsigned cap = 64);

/// max{i : |s_i| < |t_1|}.
unsigned omega_coloring(const QCopy& y, unsigned cap = 64);

struct OmegaWitness {
    QCopy z;
    Word t0;
    Word s0;
    unsigned n = 0;
    unsigned m = 0;
};

/// Z in [Y]^eta with omega_coloring(Z) = r, checked before returning.
OmegaWitness build_witness(const QCopy& y, unsigned r, unsigned cap = 64);

struct ColoringSpec {
    enum class Kind { DevlinRelabel, Constant, Hashed, Table };
    Kind kind = Kind::Constant;
    unsigned k = 1;
    unsigned colors = 1;
    std::vector<unsigned> relabel;             // DevlinRelabel: color of each type rank
    unsigned constant = 0;                     // Constant
    std::uint64_t seed = 0;                    // Hashed
    std::map<std::string, unsigned> table;     // Table: key = entries joined by ','
    unsigned fallback = 0;                     // Table

    unsigned color(const std::vector<Point>& fingerprint) const;
    bool factors_through_types() const { return kind == Kind::DevlinRelabel || kind == Kind::Constant; }
    void check() const;
};

std::string fingerprint_key(const std::vector<Point>& fingerprint);

struct OscillationWitness {
    unsigned color = 0;
    std::vector<Point> tuple;         // fingerprint of f o h
    std::vector<Point> factor_tuple;  // fingerprint of f
};

struct OscillationReport {
    std::string regime;  // "exact" or "heuristic"
    bool guaranteed = false;
    unsigned b = 2;
    double eps = 0;
    EpsilonParameters params;
    std::string h_label;
    std::vector<unsigned> colors;  // B, sorted
    std::vector<OscillationWitness> witnesses;
    unsigned candidates = 0;
    std::size_t tuples_examined = 0;
};

/// Exact regime for type-factoring colorings (h = identity, B = image of the
/// type set, each color witnessed). Otherwise a seeded heuristic over
/// `budget` random h, reporting the least number of colors observed.
OscillationReport oscillation_search(const ColoringSpec& c, unsigned b, double eps, unsigned budget,
                                     std::uint64_t seed, unsigned cap = 20);

} // namespace dualramsey
