#include "folavg/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace folavg {

bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == inverse(w[i - 1])) return false;
    return true;
}

Word reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter g : w) {
        if (g == 0) throw std::invalid_argument("reduce: zero letter");
        if (!out.empty() && out.back() == inverse(g))
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& g : out) g = inverse(g);
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (Letter g : w) {
        s += (g > 0) ? 'a' : 'A';
        s += std::to_string(g > 0 ? g : -g);
    }
    return s;
}

Word parse_word(const std::string& s) {
    Word w;
    if (s == "1" || s.empty()) return w;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c != 'a' && c != 'A') throw std::invalid_argument("parse_word: expected a/A at '" + s + "'");
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("parse_word: missing generator index in '" + s + "'");
        int idx = std::stoi(s.substr(i, j - i));
        if (idx < 1 || idx > 127) throw std::invalid_argument("parse_word: generator index out of range");
        w.push_back(static_cast<Letter>(c == 'a' ? idx : -idx));
        i = j;
    }
    return w;
}

std::uint64_t free_ball_size(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("free_ball_size: k >= 1, n >= 0 required");
    if (n == 0) return 0;
    if (k == 1) return 2ull * static_cast<std::uint64_t>(n);
    // 2k((2k-1)^n - 1)/(2k-2) = sum_{m=1..n} 2k(2k-1)^(m-1)
    std::uint64_t total = 0, sphere = 2ull * static_cast<std::uint64_t>(k);
    const std::uint64_t growth = 2ull * k - 1;
    for (int m = 1; m <= n; ++m) {
        if (total > std::numeric_limits<std::uint64_t>::max() - sphere)
            throw std::overflow_error("free_ball_size: overflow");
        total += sphere;
        if (m < n) {
            if (sphere > std::numeric_limits<std::uint64_t>::max() / growth)
                throw std::overflow_error("free_ball_size: overflow");
            sphere *= growth;
        }
    }
    return total;
}

BallEnumeration enumerate_ball(int k, int n, std::size_t cap) {
    if (k < 1 || n < 1) throw std::invalid_argument("enumerate_ball: k >= 1 and n >= 1 required");
    const std::uint64_t count = free_ball_size(k, n);
    if (count > cap)
        throw ResourceCapError("enumerate_ball: |G_n| = " + std::to_string(count) +
                               " exceeds cap " + std::to_string(cap));

    BallEnumeration ball;
    ball.k = k;
    ball.n = n;
    ball.words.reserve(count);
    ball.sphere_offsets.assign(static_cast<std::size_t>(n) + 1, 0);

    // Letters in canonical rank order.
    std::vector<Letter> alphabet;
    for (int i = 1; i <= k; ++i) {
        alphabet.push_back(static_cast<Letter>(i));
        alphabet.push_back(static_cast<Letter>(-i));
    }

    // Breadth-first by length: children of a reduced word append any letter
    // except the inverse of its last one, preserving lexicographic order.
    std::size_t level_begin = 0;
    for (int m = 1; m <= n; ++m) {
        std::size_t level_end = ball.words.size();
        if (m == 1) {
            for (Letter g : alphabet) ball.words.push_back(Word{g});
        } else {
            for (std::size_t i = level_begin; i < level_end; ++i) {
                const Letter last = ball.words[i].back();
                for (Letter g : alphabet) {
                    if (g == inverse(last)) continue;
                    Word child = ball.words[i];
                    child.push_back(g);
                    ball.words.push_back(std::move(child));
                }
            }
        }
        level_begin = level_end;
        ball.sphere_offsets[static_cast<std::size_t>(m)] = ball.words.size();
    }
    return ball;
}

}  // namespace folavg
