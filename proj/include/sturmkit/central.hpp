#pragma once

// Central words (words with coprime periods p, q and length p + q - 2),
// their two-palindrome decomposition, and palindromic closures.

#include <cstdint>
#include <optional>
#include <variant>

#include "sturmkit/word.hpp"

namespace sturmkit::central {

// Coprime period pair certifying centrality, normalized to p <= q.
struct witness {
    std::int64_t p = 0;
    std::int64_t q = 0;

    bool operator==(const witness&) const = default;
};

// Smallest-p witness if the word is central, otherwise empty. The
// search admits the degenerate periods larger than the word, so a^n
// gets the witness (1, n+1) and the empty word gets (1, 1).
std::optional<witness> is_central(const word& w);

struct letter_power {
    letter base = letter::a;
    std::size_t exponent = 0;
};

// w == p + x + y + q == q + y + x + p, with p, q palindromes, x != y
// and |p| < |q|.
struct two_palindromes {
    word p, q;
    letter x = letter::a, y = letter::b;
};

using decomposition = std::variant<letter_power, two_palindromes>;

// Exhaustive split search, independent of the period arithmetic in
// is_central. Empty when no decomposition exists.
std::optional<decomposition> try_decompose(const word& w);

// Same search; throws std::invalid_argument when the word is not central.
decomposition decompose(const word& w);

word longest_palindromic_suffix(const word& w);
word longest_palindromic_prefix(const word& w);

// Shortest palindrome having w as a prefix (resp. suffix), built from
// the longest palindromic suffix (resp. prefix) split.
word right_palindromic_closure(const word& w);
word left_palindromic_closure(const word& w);

}  // namespace sturmkit::central
