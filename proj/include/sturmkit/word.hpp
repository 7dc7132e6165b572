#pragma once

// Finite words over the two-letter alphabet {a, b} and the basic
// combinatorial operations on them: reversal, palindromes, periods,
// primitivity, rotations, factor sets and special factors.

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sturmkit {

// The alphabet, totally ordered a < b.
enum class letter : unsigned char { a = 0, b = 1 };

constexpr letter complement(letter x) noexcept {
    return x == letter::a ? letter::b : letter::a;
}

constexpr char to_char(letter x) noexcept { return x == letter::a ? 'a' : 'b'; }

// Throws std::invalid_argument for anything but 'a' or 'b'.
letter letter_from_char(char c);

// A finite binary word. Letters are packed one per bit, most significant
// bit first inside each 64-bit block, so that block-wise unsigned
// comparison of equal-length words coincides with lexicographic order.
// Bits past the end of the word are kept at zero.
class word {
public:
    word() = default;
    explicit word(std::string_view text);

    // n copies of one letter.
    static word filled(std::size_t n, letter x);

    // The rank-th word of the given length, counting all 2^length words
    // in lexicographic order from rank 0. Requires length <= 63.
    static word from_rank(std::size_t length, std::uint64_t rank);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    letter operator[](std::size_t i) const noexcept {
        assert(i < len_);
        return static_cast<letter>((blocks_[i >> 6] >> (63 - (i & 63))) & 1u);
    }
    letter front() const noexcept { return (*this)[0]; }
    letter back() const noexcept { return (*this)[len_ - 1]; }

    void reserve(std::size_t n) { blocks_.reserve((n + 63) / 64); }
    void clear() noexcept { blocks_.clear(); len_ = 0; }

    void push_back(letter x) {
        if ((len_ & 63) == 0) blocks_.push_back(0);
        if (x == letter::b) blocks_[len_ >> 6] |= 1ull << (63 - (len_ & 63));
        ++len_;
    }
    void pop_back() {
        assert(len_ > 0);
        --len_;
        blocks_[len_ >> 6] &= ~(1ull << (63 - (len_ & 63)));
        if ((len_ & 63) == 0) blocks_.pop_back();
    }

    word& operator+=(const word& rhs);
    word& operator+=(letter x) { push_back(x); return *this; }

    // Letters [pos, pos + n).
    word subword(std::size_t pos, std::size_t n) const;
    word prefix(std::size_t n) const { return subword(0, n); }
    word suffix(std::size_t n) const { return subword(len_ - n, n); }

    bool starts_with(const word& p) const;
    bool ends_with(const word& s) const;

    std::size_t count(letter x) const noexcept;

    std::string str() const;

    friend bool operator==(const word& lhs, const word& rhs) noexcept {
        return lhs.len_ == rhs.len_ && lhs.blocks_ == rhs.blocks_;
    }
    friend std::strong_ordering operator<=>(const word& lhs, const word& rhs) noexcept;

    // Minimal read-only letter iterator, enough for range-for.
    class const_iterator {
    public:
        using value_type = letter;
        using difference_type = std::ptrdiff_t;
        const_iterator(const word* w, std::size_t i) : w_(w), i_(i) {}
        letter operator*() const { return (*w_)[i_]; }
        const_iterator& operator++() { ++i_; return *this; }
        bool operator!=(const const_iterator& o) const { return i_ != o.i_; }
        bool operator==(const const_iterator& o) const { return i_ == o.i_; }
    private:
        const word* w_;
        std::size_t i_;
    };
    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, len_}; }

    std::size_t hash() const noexcept;

private:
    std::vector<std::uint64_t> blocks_;
    std::size_t len_ = 0;
};

std::ostream& operator<<(std::ostream& os, const word& w);

word operator+(word lhs, const word& rhs);
word operator+(word lhs, letter rhs);
word operator+(letter lhs, const word& rhs);

word reversed(const word& w);
bool is_palindrome(const word& w);

// Moves the first letter to the end. Requires a non-empty word.
word rotate_left(const word& w);

// The n rotations of w in the order "shift by 1", ..., "shift by n";
// the last entry is w itself. Duplicates are retained.
std::vector<word> rotations(const word& w);

// Smallest period, via the border (failure-function) construction.
std::size_t shortest_period(const word& w);

// Every period p with 1 <= p <= |w|, checked against the definition
// directly; the quadratic scan doubles as a cross-check for
// shortest_period.
std::vector<std::size_t> all_periods(const word& w);

bool is_primitive(const word& w);

std::set<word> factors(const word& w);
std::set<word> prefixes(const word& w);
std::set<word> suffixes(const word& w);

// Factors of a host word classified by their one- and two-sided
// extensions inside the host's factor set.
struct special_factor_sets {
    std::set<word> left_special;
    std::set<word> right_special;
    std::set<word> bispecial;
    std::set<word> strictly_bispecial;
};

special_factor_sets special_factors(const word& w);

}  // namespace sturmkit

template <>
struct std::hash<sturmkit::word> {
    std::size_t operator()(const sturmkit::word& w) const noexcept { return w.hash(); }
};
