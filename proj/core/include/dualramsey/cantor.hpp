#pragma once

// Eventually-constant points of the Cantor space b^omega, the lexicographic
// order, the ultrametric rho_b and the basic clopen sets W_s.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualramsey {

using Digit = std::uint8_t;
using Word = std::vector<Digit>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

std::string word_to_string(const Word& w);
Word word_from_string(std::string_view s);

/// An eventually-constant element of b^omega: a finite stem followed by one
/// digit repeated forever. The stem never ends with the tail digit, so two
/// points are equal iff their fields are equal.
class Point {
public:
    Point() = default;
    Point(unsigned base, Word stem, Digit tail);

    static Point min(unsigned base);
    static Point max(unsigned base);

    unsigned base() const { return base_; }
    const Word& stem() const { return stem_; }
    Digit tail() const { return tail_; }
    Digit digit_at(std::size_t n) const { return n < stem_.size() ? stem_[n] : tail_; }

    /// First n digits.
    Word prefix(std::size_t n) const;

    bool is_min() const { return stem_.empty() && tail_ == 0; }
    bool is_max() const { return stem_.empty() && tail_ == base_ - 1; }
    bool eventually_top() const { return tail_ == base_ - 1; }
    bool eventually_zero() const { return tail_ == 0; }
    /// Membership in A_b: eventually b-1 and not the maximum.
    bool in_a() const { return eventually_top() && !is_max(); }

    /// Compact text form "stem(tail)", e.g. "01(1)".
    std::string to_string() const;
    static Point parse(unsigned base, std::string_view text);

    bool operator==(const Point&) const = default;

private:
    unsigned base_ = 2;
    Word stem_;
    Digit tail_ = 0;
};

/// Lexicographic comparison. Throws std::invalid_argument on base mismatch.
std::strong_ordering lex_compare(const Point& x, const Point& y);

inline std::strong_ordering operator<=>(const Point& x, const Point& y) { return lex_compare(x, y); }

/// Exact value of the form 0 or 2^-e.
class Dyadic {
public:
    static Dyadic zero() { return Dyadic{}; }
    static Dyadic pow2_neg(unsigned e) { return Dyadic{e}; }

    bool is_zero() const { return zero_; }
    /// Exponent e of 2^-e; meaningless for zero.
    unsigned exponent() const { return exponent_; }

    std::string to_string() const;

    bool operator==(const Dyadic&) const = default;
    std::strong_ordering operator<=>(const Dyadic& o) const;

private:
    Dyadic() = default;
    explicit Dyadic(unsigned e) : zero_(false), exponent_(e) {}
    bool zero_ = true;
    unsigned exponent_ = 0;
};

/// Index of the first differing digit, or npos when x == y.
std::size_t first_difference(const Point& x, const Point& y);

Dyadic rho_b(const Point& x, const Point& y);

/// A finite word s in b^{<omega}, standing for W_s.
class Node {
public:
    Node(unsigned base, Word word);
    unsigned base() const { return base_; }
    const Word& word() const { return word_; }

private:
    unsigned base_;
    Word word_;
};

Point node_max(const Node& s);
Point node_min(const Node& s);
bool node_contains(const Node& s, const Point& x);

/// The least point strictly above x; x must be eventually b-1 and not max.
Point interval_successor(const Point& x);
/// The greatest point strictly below x; x must be eventually 0 and not min.
Point interval_predecessor(const Point& x);

/// Order embedding of b^omega into 2^omega: d -> 1^d 0 for d < b-1 and
/// b-1 -> 1^(b-1).
Point encode_binary(const Point& x);

/// Increment w as a base-b numeral of fixed length; false on overflow.
bool increment_word(Word& w, unsigned base);

/// The point of A_b with the least (stem length, lex) key strictly
/// between a and c, if any.
std::optional<Point> first_enumerated_between(const Point& a, const Point& c);

} // namespace dualramsey
