#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folavg/common.hpp"

namespace folavg {

/// A generator symbol: +i is the i-th generator, -i its inverse (i in [1,k]).
using Letter = std::int8_t;

/// A word over the generator alphabet. Empty word = identity.
using Word = std::vector<Letter>;

inline Letter inverse(Letter g) { return static_cast<Letter>(-g); }

/// Canonical letter rank for lexicographic comparisons:
/// a1 < A1 < a2 < A2 < ... (capital = inverse).
inline int letter_rank(Letter g) {
    int i = g > 0 ? g : -g;
    return 2 * (i - 1) + (g < 0 ? 1 : 0);
}

/// True if w has no adjacent cancelling pair.
bool is_reduced(const Word& w);

/// Free reduction. Idempotent; the result represents the same group element.
Word reduce(const Word& w);

/// Inverse word (reversed with letters inverted).
Word inverse(const Word& w);

bool shortlex_less(const Word& a, const Word& b);

/// Serialization over {a1, A1, a2, A2, ...}; capitals are inverses.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

/// All reduced non-empty words of length <= n over k generator pairs,
/// grouped by length and lexicographic within each length class.
struct BallEnumeration {
    int k = 0;
    int n = 0;
    std::vector<Word> words;
    /// sphere_offsets[m] = index of the first word of length m+1; the class of
    /// length m occupies [sphere_offsets[m-1], sphere_offsets[m]).
    /// sphere_offsets.size() == n+1, sphere_offsets[0] == 0,
    /// sphere_offsets[n] == words.size().
    std::vector<std::size_t> sphere_offsets;

    std::size_t size() const { return words.size(); }
    std::size_t sphere_size(int m) const {
        return sphere_offsets[static_cast<std::size_t>(m)] -
               sphere_offsets[static_cast<std::size_t>(m) - 1];
    }
};

/// Exact ball cardinality of the free group F_k: 2k((2k-1)^n - 1)/(2k-2)
/// for k >= 2, and 2n for k = 1. Throws on overflow.
std::uint64_t free_ball_size(int k, int n);

/// Enumerate the ball of radius n (non-empty reduced words). Throws
/// ResourceCapError when the closed-form count exceeds `cap`.
BallEnumeration enumerate_ball(int k, int n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace folavg
