#pragma once

// Continuous nondecreasing surjections of b^omega, represented through their
// filterings (U^f_s) with U^f_s = f^{-1}(W_s), or lazily as a composition f o h.

#include "dualramsey/intervals.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualramsey {

class InvalidFiltering : public std::invalid_argument {
public:
    explicit InvalidFiltering(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

class Surjection {
public:
    static Surjection identity(unsigned base);
    /// Throws InvalidFiltering when F violates the filtering clauses.
    static Surjection from_filtering(Filtering f);
    /// outer o inner, kept as a chain.
    static Surjection chain(Surjection outer, Surjection inner);

    unsigned base() const;
    bool is_chain() const;
    /// Throws std::logic_error for chains.
    const Filtering& filtering() const;
    const Surjection& outer() const;
    const Surjection& inner() const;

    /// max U^f_s.
    Point cell_max(const Word& s) const;
    /// U^f_s.
    ClopenInterval cell(const Word& s) const;
    /// Maxima of the first b-1 children of U^f_s.
    std::vector<Point> splits(const Word& s) const;
    /// (max U^f_s) over s in b^k except the last, in lex order of s.
    std::vector<Point> boundary_tuple(unsigned k) const;

    /// Same underlying representation object.
    bool shares_rep(const Surjection& other) const { return impl_ == other.impl_; }

    struct Impl;

private:
    explicit Surjection(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// The depth-d materialization D(f) restricted to depths <= d; deeper levels
/// follow the greedy rule over f's domain (the full domain for chains).
Filtering to_filtering(const Surjection& f, unsigned d);

/// Surjection agreeing with f on depths <= d; rho_infinity(f, truncate(f, d)) <= 2^-d.
Surjection truncate(const Surjection& f, unsigned d);

Surjection compose(const Surjection& f, const Surjection& h);

struct EvalResult {
    Word digits;
    /// f(x) exactly, when x is a cell endpoint within the requested precision.
    std::optional<Point> exact;
};

EvalResult evaluate(const Surjection& f, const Point& x, unsigned n);

/// max h^{-1}({z : z <= y}) for y eventually b-1.
Point preimage_max(const Surjection& h, const Point& y);

/// Shallowest s with max U^f_s = x, searched to depth cap.
MaxLocation locate_max(const Surjection& f, const Point& x, unsigned cap);

RefinementResult refines(const Surjection& g, const Surjection& h, unsigned d, unsigned cap = 64);

struct DistanceResult {
    enum class Kind {
        Exact,      // value is rho_infinity
        ZeroToCap,  // fingerprints agree through depth `depth` (= cap)
        AtMost,     // agreement certified through `depth` only (node budget)
    };
    Kind kind = Kind::Exact;
    Dyadic value = Dyadic::zero();
    unsigned depth = 0;
    /// true when the subtrees left were provably identical (exact zero).
    bool proven_zero = false;

    std::string to_string() const;
};

/// rho_infinity(f, g) = 2^-k where k is the largest depth with equal fingerprints.
DistanceResult distance(const Surjection& f, const Surjection& g, unsigned cap = 64,
                        std::size_t node_budget = std::size_t{1} << 16);

class FactorError : public std::runtime_error {
public:
    FactorError(const std::string& what, Point witness, bool undecided)
        : std::runtime_error(what), witness_(std::move(witness)), undecided_(undecided) {}
    const Point& witness() const { return witness_; }
    bool undecided() const { return undecided_; }

private:
    Point witness_;
    bool undecided_;
};

/// f with boundary_tuple(compose(f, h), k) == tuple; k from |tuple| = b^k - 1.
/// Throws FactorError when an entry is not a cell maximum of h.
Surjection tuple_to_factor(const Surjection& h, const std::vector<Point>& tuple, unsigned cap = 64);

/// f with g = f o h on fingerprints to depth d.
Surjection factor_through(const Surjection& g, const Surjection& h, unsigned d, unsigned cap = 64);

Surjection tuple_to_surjection(unsigned base, unsigned k, const std::vector<Point>& tuple);

/// Y_f restricted to cells of depth <= d, sorted.
std::vector<Point> max_set(const Surjection& f, unsigned d);

} // namespace dualramsey
