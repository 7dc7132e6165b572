#pragma once

// Minimal forbidden words of the balanced language: the word is not
// balanced but dropping either end letter leaves a balanced word.
// Two routes are provided: the defining filter over all words of a
// length, and the structural construction that swaps the end letters
// of every non-primitive Christoffel word.

#include <cstddef>
#include <set>

#include "sturmkit/word.hpp"

namespace sturmkit::forbidden {

inline constexpr std::size_t default_bruteforce_cap = 20;

struct minimal_forbidden_set {
    std::size_t length = 0;
    std::set<word> words;
};

bool is_minimal_forbidden(const word& w);

// Filters all 2^n words of length n. Throws std::length_error past the
// cap and std::invalid_argument for n == 0.
minimal_forbidden_set bruteforce(std::size_t n, std::size_t cap = default_bruteforce_cap);

// y w x for every non-primitive Christoffel word x w y of length n,
// both orientations, deduplicated. Requires n >= 2.
minimal_forbidden_set construct(std::size_t n);

}  // namespace sturmkit::forbidden
