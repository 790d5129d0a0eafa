#pragma once

#include <dualramsey/random.hpp>

#include <string_view>
#include <vector>

namespace dualramsey::test {

inline Point P(std::string_view text, unsigned b = 2) { return Point::parse(b, text); }

inline Word W(std::string_view text) { return word_from_string(text); }

inline std::vector<Point> pts(std::initializer_list<std::string_view> texts, unsigned b = 2)
{
    std::vector<Point> out;
    for (auto t : texts) {
        out.push_back(P(t, b));
    }
    return out;
}

// Every point with a stem of length <= n and any tail.
inline std::vector<Point> all_points(unsigned b, unsigned n)
{
    std::vector<Point> out;
    std::vector<Word> words{Word{}};
    for (unsigned len = 1; len <= n; ++len) {
        Word w(len, 0);
        do {
            words.push_back(w);
        } while (increment_word(w, b));
    }
    for (const auto& w : words) {
        for (unsigned t = 0; t < b; ++t) {
            Point p(b, w, static_cast<Digit>(t));
            if (p.stem().size() == w.size()) {
                out.push_back(p);
            }
        }
    }
    return out;
}

} // namespace dualramsey::test
