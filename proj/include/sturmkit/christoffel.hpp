#pragma once

// Lower/upper Christoffel words for a pair of step counts, recognition,
// the repeated-central-word factorization, the sorted-rotation matrix
// and the Burrows-Wheeler transform.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmkit/word.hpp"

namespace sturmkit::christoffel {

// p horizontal ('a') steps and q vertical ('b') steps; both positive.
struct slope_pair {
    std::int64_t p = 0;
    std::int64_t q = 0;

    bool operator==(const slope_pair&) const = default;
};

enum class side { lower, upper };

const char* to_string(side s);

// Word of length p+q generated by the modular rule; exact integer
// arithmetic throughout. Throws std::invalid_argument unless p, q >= 1.
word lower(slope_pair s);
word upper(slope_pair s);

struct recognition {
    slope_pair slope;
    side orientation = side::lower;
};

// The slope is forced by the letter counts, so recognition is a single
// comparison per orientation. Words shorter than 2 letters or missing
// a letter are never Christoffel words; empty result, no error.
std::optional<recognition> recognize(const word& w);

// source == x (u y x)^repetitions u y, with u a central word. A
// Christoffel word is primitive exactly when repetitions == 0.
struct factorization {
    word u;
    letter x = letter::a, y = letter::b;
    std::size_t repetitions = 0;
};

// Routes through the primitive root given by the reduced slope and
// re-verifies by reassembly. Throws std::invalid_argument for
// non-Christoffel input.
factorization factorize(const word& w);

// Columns are the rotations of lower(s), lexicographically ordered
// with a stable tie-break, so non-primitive inputs keep duplicate
// columns. First column = lower(s), last column = upper(s).
struct rotation_matrix {
    std::size_t order = 0;
    std::vector<word> columns;

    std::vector<std::string> rows() const;
};

rotation_matrix rotation_matrix_of(slope_pair s);

// Last letters of the stably sorted rotations; no end marker is used.
word bwt(const word& w);

}  // namespace sturmkit::christoffel
