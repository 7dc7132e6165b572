#pragma once

// Membership in the language of finite balanced binary words and
// classification of a word by how it can be extended inside that
// language.

#include <cstddef>
#include <set>
#include <vector>

#include "sturmkit/word.hpp"

namespace sturmkit::sturmian {

enum class class_tag {
    not_sturmian,
    neither_special,
    left_special_only,
    right_special_only,
    non_strictly_bispecial,
    strictly_bispecial,
};

const char* to_string(class_tag t);

struct sturmian_class {
    class_tag tag = class_tag::not_sturmian;
    // Number of balanced words among the four two-sided one-letter
    // extensions; 0 is reported for unbalanced input.
    int extension_count = 0;

    bool operator==(const sturmian_class&) const = default;
};

inline constexpr std::size_t default_enumeration_cap = 22;

// True iff for every factor length the per-window counts of 'a' differ
// by at most one across the word (sliding-window form of balancedness).
bool is_balanced(const word& w);

// The balanced words among {awa, awb, bwa, bwb}. Throws
// std::invalid_argument when w itself is unbalanced.
std::set<word> extensions(const word& w);

// Whether aw and bw (resp. wa and wb) are both balanced. Unbalanced
// input yields false rather than an error.
bool is_left_special(const word& w);
bool is_right_special(const word& w);

sturmian_class classify(const word& w);

// All balanced words of length n in lexicographic order, generated by
// backtracking with incremental per-length window bounds. Throws
// std::length_error when n exceeds the cap.
std::vector<word> enumerate(std::size_t n, std::size_t cap = default_enumeration_cap);

}  // namespace sturmkit::sturmian
