#include "sturmkit/central.hpp"

#include <numeric>
#include <stdexcept>

namespace sturmkit::central {

namespace {

// Period in the extended sense: any p > |w| qualifies.
bool has_period(const word& w, std::int64_t p) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    if (p > n) return true;
    for (std::int64_t i = 0; i + p < n; ++i)
        if (w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(i + p)]) return false;
    return true;
}

}  // namespace

std::optional<witness> is_central(const word& w) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    for (std::int64_t p = 1; 2 * p <= n + 2; ++p) {
        const std::int64_t q = n + 2 - p;
        if (std::gcd(p, q) != 1) continue;
        if (has_period(w, p) && has_period(w, q)) return witness{p, q};
    }
    return std::nullopt;
}

std::optional<decomposition> try_decompose(const word& w) {
    const std::size_t n = w.size();
    bool power = true;
    for (std::size_t i = 1; i < n; ++i)
        if (w[i] != w[0]) { power = false; break; }
    if (power) return decomposition{letter_power{n == 0 ? letter::a : w[0], n}};

    for (std::size_t plen = 0; plen + 2 <= n; ++plen) {
        const std::size_t qlen = n - plen - 2;
        if (plen >= qlen) break;  // only the |p| < |q| representative
        const letter x = w[plen], y = w[plen + 1];
        if (x == y) continue;
        word p = w.prefix(plen);
        word q = w.suffix(qlen);
        if (!is_palindrome(p) || !is_palindrome(q)) continue;
        if (q + y + x + p == w) return decomposition{two_palindromes{std::move(p), std::move(q), x, y}};
    }
    return std::nullopt;
}

decomposition decompose(const word& w) {
    auto d = try_decompose(w);
    if (!d) throw std::invalid_argument("decompose: not a central word");
    return *std::move(d);
}

word longest_palindromic_suffix(const word& w) {
    for (std::size_t len = w.size(); len > 0; --len) {
        word s = w.suffix(len);
        if (is_palindrome(s)) return s;
    }
    return {};
}

word longest_palindromic_prefix(const word& w) {
    for (std::size_t len = w.size(); len > 0; --len) {
        word p = w.prefix(len);
        if (is_palindrome(p)) return p;
    }
    return {};
}

word right_palindromic_closure(const word& w) {
    const word v = longest_palindromic_suffix(w);
    const word u = w.prefix(w.size() - v.size());
    return w + reversed(u);
}

word left_palindromic_closure(const word& w) {
    const word u = longest_palindromic_prefix(w);
    const word v = w.suffix(w.size() - u.size());
    return reversed(v) + w;
}

}  // namespace sturmkit::central
