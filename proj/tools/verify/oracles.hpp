#pragma once

// Brute-force reference computations. Each one avoids the code path it is
// used to check.

#include <dualramsey/devlin.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dualramsey::oracle {

/// Up-down permutations of {1..n} counted by scanning all n! orders.
std::uint64_t alternating_permutations(unsigned n);

/// Euler zigzag numbers E_0..E_n from the Seidel-Entringer triangle.
std::vector<BigInt> zigzag_numbers(unsigned n);

/// tan^(n)(0), differentiating tan as a polynomial in tan: (T^m)' = m T^(m-1) (1 + T^2).
BigInt tan_derivative_at_zero(unsigned n);

/// All words of length <= max_len over {0..b-1}, shortest first, then lex.
std::vector<Word> words_up_to(unsigned b, unsigned max_len);

/// First A_b point strictly between a and c, scanning words_up_to(max_len).
std::optional<Point> first_between(const Point& a, const Point& c, unsigned max_len);

/// The W_s maxima for s in b^k, all but the last.
std::vector<Point> standard_tuple(unsigned b, unsigned k);

/// f(x)|n is the base-b numeral of the index of the depth-n cell containing x;
/// found by binary search in the depth-n tuple.
Word image_prefix(const std::vector<Point>& depth_n_tuple, unsigned b, unsigned n, const Point& x);

/// sup over all points with stems of length <= stem_len and every tail of
/// rho_b(f(x), g(x)), evaluated to `precision` digits. nullopt: no difference seen.
std::optional<unsigned> sup_distance_exponent(const Surjection& f, const Surjection& g, unsigned stem_len,
                                              unsigned precision);

/// Encodings of the types of all strongly diagonal l-subsets of base-2
/// points whose stems have length <= max_len.
std::set<std::string> realized_types(unsigned l, unsigned max_len);

} // namespace dualramsey::oracle
