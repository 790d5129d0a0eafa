#pragma once

// Seeded generators for points, domains and filterings. Draws go through
// Rng::below so a seed yields the same objects on every platform.

#include "dualramsey/surjections.hpp"

#include <cstdint>
#include <random>

namespace dualramsey {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// A point of the domain strictly between a and c, with a stem at most
/// `extra` digits longer than the common prefix of a and c when possible.
std::optional<Point> random_point_between(Rng& rng, const Point& a, const Point& c, const Domain& domain,
                                          unsigned extra = 3);

/// One to three clopen pieces spanned by short nodes.
Domain random_domain(Rng& rng, unsigned base);

/// A valid filtering whose stored levels start with `prefix` and continue
/// with random splits drawn from the domain down to `depth`.
Filtering random_filtering(Rng& rng, unsigned base, unsigned depth, const Domain& domain,
                           std::vector<std::vector<Point>> prefix = {}, unsigned extra = 3);

Surjection random_surjection(Rng& rng, unsigned base, unsigned depth, bool restrict_domain = false,
                             unsigned extra = 3);

} // namespace dualramsey
