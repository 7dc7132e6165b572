#include "sturmkit/word.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace sturmkit {

letter letter_from_char(char c) {
    if (c == 'a') return letter::a;
    if (c == 'b') return letter::b;
    throw std::invalid_argument(std::string("word: invalid character '") + c +
                                "', expected 'a' or 'b'");
}

word::word(std::string_view text) {
    reserve(text.size());
    for (char c : text) push_back(letter_from_char(c));
}

word word::filled(std::size_t n, letter x) {
    word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back(x);
    return w;
}

word word::from_rank(std::size_t length, std::uint64_t rank) {
    if (length > 63) throw std::invalid_argument("word::from_rank: length must be <= 63");
    word w;
    w.len_ = length;
    if (length > 0) w.blocks_.push_back(rank << (64 - length));
    return w;
}

word& word::operator+=(const word& rhs) {
    const std::size_t n = rhs.size();
    reserve(len_ + n);
    for (std::size_t i = 0; i < n; ++i) push_back(rhs[i]);
    return *this;
}

word word::subword(std::size_t pos, std::size_t n) const {
    if (pos + n > len_) throw std::out_of_range("word::subword: range past end of word");
    word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.push_back((*this)[pos + i]);
    return w;
}

bool word::starts_with(const word& p) const {
    if (p.size() > len_) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if ((*this)[i] != p[i]) return false;
    return true;
}

bool word::ends_with(const word& s) const {
    if (s.size() > len_) return false;
    const std::size_t off = len_ - s.size();
    for (std::size_t i = 0; i < s.size(); ++i)
        if ((*this)[off + i] != s[i]) return false;
    return true;
}

std::size_t word::count(letter x) const noexcept {
    std::size_t b = 0;
    for (std::uint64_t block : blocks_) b += static_cast<std::size_t>(std::popcount(block));
    return x == letter::b ? b : len_ - b;
}

std::string word::str() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) s.push_back(to_char((*this)[i]));
    return s;
}

std::strong_ordering operator<=>(const word& lhs, const word& rhs) noexcept {
    const std::size_t n = lhs.len_ < rhs.len_ ? lhs.len_ : rhs.len_;
    const std::size_t full = n >> 6, rem = n & 63;
    for (std::size_t i = 0; i < full; ++i)
        if (lhs.blocks_[i] != rhs.blocks_[i]) return lhs.blocks_[i] <=> rhs.blocks_[i];
    if (rem != 0) {
        const std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
        const std::uint64_t a = lhs.blocks_[full] & mask;
        const std::uint64_t b = rhs.blocks_[full] & mask;
        if (a != b) return a <=> b;
    }
    return lhs.len_ <=> rhs.len_;
}

std::size_t word::hash() const noexcept {
    // FNV-1a over the blocks, length folded in last.
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint64_t block : blocks_) {
        h ^= block;
        h *= 1099511628211ull;
    }
    h ^= len_;
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const word& w) { return os << w.str(); }

word operator+(word lhs, const word& rhs) {
    lhs += rhs;
    return lhs;
}

word operator+(word lhs, letter rhs) {
    lhs.push_back(rhs);
    return lhs;
}

word operator+(letter lhs, const word& rhs) {
    word w;
    w.reserve(rhs.size() + 1);
    w.push_back(lhs);
    w += rhs;
    return w;
}

word reversed(const word& w) {
    word out;
    out.reserve(w.size());
    for (std::size_t i = w.size(); i > 0; --i) out.push_back(w[i - 1]);
    return out;
}

bool is_palindrome(const word& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (w[i] != w[n - 1 - i]) return false;
    return true;
}

namespace {

void require_nonempty(const word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

}  // namespace

word rotate_left(const word& w) {
    require_nonempty(w, "rotate_left");
    word out;
    out.reserve(w.size());
    for (std::size_t i = 1; i < w.size(); ++i) out.push_back(w[i]);
    out.push_back(w[0]);
    return out;
}

std::vector<word> rotations(const word& w) {
    require_nonempty(w, "rotations");
    const std::size_t n = w.size();
    std::vector<word> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        word r;
        r.reserve(n);
        for (std::size_t j = 0; j < n; ++j) r.push_back(w[(i + j) % n]);
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t shortest_period(const word& w) {
    require_nonempty(w, "shortest_period");
    const std::size_t n = w.size();
    // border[k] = length of the longest proper border of the prefix of length k
    std::vector<std::size_t> border(n + 1, 0);
    std::size_t b = 0;
    for (std::size_t k = 2; k <= n; ++k) {
        const letter c = w[k - 1];
        while (b > 0 && w[b] != c) b = border[b];
        if (w[b] == c) ++b;
        border[k] = b;
    }
    return n - border[n];
}

std::vector<std::size_t> all_periods(const word& w) {
    require_nonempty(w, "all_periods");
    const std::size_t n = w.size();
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) out.push_back(p);
    }
    return out;
}

bool is_primitive(const word& w) {
    require_nonempty(w, "is_primitive");
    const std::size_t p = shortest_period(w);
    return p == w.size() || w.size() % p != 0;
}

std::set<word> factors(const word& w) {
    std::set<word> out;
    const std::size_t n = w.size();
    out.insert(word{});
    for (std::size_t pos = 0; pos < n; ++pos)
        for (std::size_t len = 1; pos + len <= n; ++len) out.insert(w.subword(pos, len));
    return out;
}

std::set<word> prefixes(const word& w) {
    std::set<word> out;
    for (std::size_t len = 0; len <= w.size(); ++len) out.insert(w.prefix(len));
    return out;
}

std::set<word> suffixes(const word& w) {
    std::set<word> out;
    for (std::size_t len = 0; len <= w.size(); ++len) out.insert(w.suffix(len));
    return out;
}

special_factor_sets special_factors(const word& w) {
    const std::set<word> facts = factors(w);
    const auto has = [&facts](const word& u) { return facts.count(u) != 0; };
    special_factor_sets out;
    for (const word& u : facts) {
        const bool left = has(letter::a + u) && has(letter::b + u);
        const bool right = has(u + letter::a) && has(u + letter::b);
        if (left) out.left_special.insert(u);
        if (right) out.right_special.insert(u);
        if (left && right) {
            out.bispecial.insert(u);
            bool strict = true;
            for (letter x : {letter::a, letter::b})
                for (letter y : {letter::a, letter::b})
                    strict = strict && has(x + u + y);
            if (strict) out.strictly_bispecial.insert(u);
        }
    }
    return out;
}

}  // namespace sturmkit
