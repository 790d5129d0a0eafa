#include "dualramsey/cantor.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualramsey {

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    // FNV-1a; stable across platforms.
    std::uint64_t h = 1469598103934665603ull;
    for (Digit d : w) {
        h ^= d;
        h *= 1099511628211ull;
    }
    h ^= w.size();
    return static_cast<std::size_t>(h);
}

std::string word_to_string(const Word& w)
{
    std::string out;
    out.reserve(w.size());
    for (Digit d : w) {
        out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
    }
    return out;
}

Word word_from_string(std::string_view s)
{
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            w.push_back(static_cast<Digit>(c - '0'));
        } else if (c >= 'a' && c <= 'z') {
            w.push_back(static_cast<Digit>(c - 'a' + 10));
        } else {
            throw std::invalid_argument("bad digit '" + std::string(1, c) + "' in word");
        }
    }
    return w;
}

Point::Point(unsigned base, Word stem, Digit tail) : base_(base), stem_(std::move(stem)), tail_(tail)
{
    if (base < 2 || base > 36) {
        throw std::invalid_argument("base must be in [2, 36]");
    }
    if (tail >= base) {
        throw std::invalid_argument("tail digit out of range");
    }
    for (Digit d : stem_) {
        if (d >= base) {
            throw std::invalid_argument("stem digit out of range");
        }
    }
    while (!stem_.empty() && stem_.back() == tail_) {
        stem_.pop_back();
    }
}

Point Point::min(unsigned base) { return Point(base, {}, 0); }

Point Point::max(unsigned base) { return Point(base, {}, static_cast<Digit>(base - 1)); }

Word Point::prefix(std::size_t n) const
{
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = digit_at(i);
    }
    return w;
}

std::string Point::to_string() const
{
    return word_to_string(stem_) + "(" + word_to_string(Word{tail_}) + ")";
}

Point Point::parse(unsigned base, std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')') {
        throw std::invalid_argument("point text must look like 'stem(tail)'");
    }
    Word stem = word_from_string(text.substr(0, open));
    Word tail = word_from_string(text.substr(open + 1, text.size() - open - 2));
    if (tail.size() != 1) {
        throw std::invalid_argument("tail must be a single digit");
    }
    return Point(base, std::move(stem), tail[0]);
}

static void require_same_base(const Point& x, const Point& y)
{
    if (x.base() != y.base()) {
        throw std::invalid_argument("base mismatch: " + std::to_string(x.base()) + " vs " + std::to_string(y.base()));
    }
}

std::size_t first_difference(const Point& x, const Point& y)
{
    require_same_base(x, y);
    const std::size_t n = std::max(x.stem().size(), y.stem().size());
    for (std::size_t i = 0; i <= n; ++i) {
        if (x.digit_at(i) != y.digit_at(i)) {
            return i;
        }
    }
    // Beyond n both sequences are constant; equal at n means equal tails.
    return std::string::npos;
}

std::strong_ordering lex_compare(const Point& x, const Point& y)
{
    const std::size_t n = first_difference(x, y);
    if (n == std::string::npos) {
        return std::strong_ordering::equal;
    }
    return x.digit_at(n) <=> y.digit_at(n);
}

std::string Dyadic::to_string() const
{
    if (zero_) {
        return "0";
    }
    if (exponent_ == 0) {
        return "1";
    }
    return "2^-" + std::to_string(exponent_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const
{
    if (zero_ || o.zero_) {
        return o.zero_ <=> zero_;
    }
    return o.exponent_ <=> exponent_;
}

Dyadic rho_b(const Point& x, const Point& y)
{
    const std::size_t n = first_difference(x, y);
    if (n == std::string::npos) {
        return Dyadic::zero();
    }
    return Dyadic::pow2_neg(static_cast<unsigned>(n));
}

Node::Node(unsigned base, Word word) : base_(base), word_(std::move(word))
{
    if (base < 2) {
        throw std::invalid_argument("base must be at least 2");
    }
    for (Digit d : word_) {
        if (d >= base) {
            throw std::invalid_argument("node digit out of range");
        }
    }
}

Point node_max(const Node& s) { return Point(s.base(), s.word(), static_cast<Digit>(s.base() - 1)); }

Point node_min(const Node& s) { return Point(s.base(), s.word(), 0); }

bool node_contains(const Node& s, const Point& x)
{
    if (x.base() != s.base()) {
        throw std::invalid_argument("base mismatch");
    }
    for (std::size_t i = 0; i < s.word().size(); ++i) {
        if (x.digit_at(i) != s.word()[i]) {
            return false;
        }
    }
    return true;
}

Point interval_successor(const Point& x)
{
    if (!x.eventually_top()) {
        throw std::invalid_argument("interval_successor needs an eventually b-1 point, got " + x.to_string());
    }
    if (x.is_max()) {
        throw std::invalid_argument("the maximum has no successor");
    }
    // Canonical stem ends with a digit d < b-1: w d (b-1)^omega -> w (d+1) 0^omega.
    Word w = x.stem();
    w.back() = static_cast<Digit>(w.back() + 1);
    return Point(x.base(), std::move(w), 0);
}

Point interval_predecessor(const Point& x)
{
    if (!x.eventually_zero()) {
        throw std::invalid_argument("interval_predecessor needs an eventually 0 point, got " + x.to_string());
    }
    if (x.is_min()) {
        throw std::invalid_argument("the minimum has no predecessor");
    }
    Word w = x.stem();
    w.back() = static_cast<Digit>(w.back() - 1);
    return Point(x.base(), std::move(w), static_cast<Digit>(x.base() - 1));
}

static void append_binary_digit(Word& out, Digit d, unsigned base)
{
    for (Digit i = 0; i < d; ++i) {
        out.push_back(1);
    }
    if (d + 1u < base) {
        out.push_back(0);
    }
}

Point encode_binary(const Point& x)
{
    const unsigned b = x.base();
    if (b == 2) {
        return x;
    }
    if (!x.eventually_zero() && !x.eventually_top()) {
        throw std::invalid_argument("encode_binary: tail must be 0 or b-1 to stay eventually constant");
    }
    Word out;
    for (Digit d : x.stem()) {
        append_binary_digit(out, d, b);
    }
    return Point(2, std::move(out), x.eventually_zero() ? 0 : 1);
}

bool increment_word(Word& w, unsigned base)
{
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1u < base) {
            ++w[i];
            return true;
        }
        w[i] = 0;
    }
    return false;
}

std::optional<Point> first_enumerated_between(const Point& a, const Point& c)
{
    require_same_base(a, c);
    if (lex_compare(a, c) != std::strong_ordering::less) {
        return std::nullopt;
    }
    const unsigned b = a.base();
    const Digit top = static_cast<Digit>(b - 1);
    const std::size_t limit = std::max(a.stem().size(), c.stem().size()) + 3;
    for (std::size_t len = 1; len <= limit; ++len) {
        // Least word w of this length with w (b-1)^omega > a.
        Word w = a.prefix(len);
        if (Point(b, w, top) == a || lex_compare(Point(b, w, top), a) == std::strong_ordering::less) {
            if (!increment_word(w, b)) {
                continue;
            }
        }
        if (w.back() == top) {
            // Same point as a shorter stem, which was already rejected.
            if (!increment_word(w, b)) {
                continue;
            }
        }
        Point y(b, w, top);
        if (lex_compare(y, c) == std::strong_ordering::less) {
            return y;
        }
    }
    return std::nullopt;
}

} // namespace dualramsey
