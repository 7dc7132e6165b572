#pragma once

// Exact counting: Euler's totient and the closed forms for balanced
// words, special words of every flavour and minimal forbidden words,
// plus the combined count table.

#include <cstdint>
#include <vector>

namespace sturmkit::enumeration {

inline constexpr std::int64_t max_table_length = 1'000'000;

// Euler's totient. Trial division for small arguments, sieve lookup
// above; the two routes are cross-checked in the tests.
std::int64_t totient(std::int64_t n);

// phi[i] for 0 <= i <= max_n (phi[0] unused), by sieve.
std::vector<std::int64_t> totient_table(std::int64_t max_n);

std::int64_t count_sturmian(std::int64_t n);
std::int64_t count_left_special(std::int64_t n);
std::int64_t count_right_special(std::int64_t n);
std::int64_t count_strict_bispecial(std::int64_t n);

// The closed form only covers n >= 2; the values 0 for n in {0, 1}
// come from exhaustive ground truth, not from extrapolation.
std::int64_t count_nonstrict_bispecial(std::int64_t n);

std::int64_t count_bispecial(std::int64_t n);

// 0 for n in {0, 1} (exhaustive ground truth), closed form for n >= 2.
std::int64_t count_minimal_forbidden(std::int64_t n);

struct count_row {
    std::int64_t n = 0;
    std::int64_t st = 0, ls = 0, rs = 0, sbs = 0, nbs = 0, bs = 0, mf = 0;

    bool operator==(const count_row&) const = default;
};

struct count_table {
    std::int64_t max_length = 0;
    std::vector<count_row> rows;
};

// One row per length 0..max_n. The arithmetic identities between the
// columns are re-checked while building; a violation throws
// std::logic_error.
count_table build_table(std::int64_t max_n);

}  // namespace sturmkit::enumeration
