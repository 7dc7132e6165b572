#include "sturmkit/forbidden.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "sturmkit/christoffel.hpp"
#include "sturmkit/sturmian.hpp"

namespace sturmkit::forbidden {

bool is_minimal_forbidden(const word& w) {
    if (w.empty()) throw std::invalid_argument("is_minimal_forbidden: empty word");
    if (sturmian::is_balanced(w)) return false;
    return sturmian::is_balanced(w.prefix(w.size() - 1)) &&
           sturmian::is_balanced(w.suffix(w.size() - 1));
}

minimal_forbidden_set bruteforce(std::size_t n, std::size_t cap) {
    if (n == 0) throw std::invalid_argument("bruteforce: length must be positive");
    if (n > cap || n > 63)
        throw std::length_error("bruteforce: length " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap < 63 ? cap : 63));
    minimal_forbidden_set out{n, {}};
    for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << n); ++rank) {
        word w = word::from_rank(n, rank);
        if (is_minimal_forbidden(w)) out.words.insert(std::move(w));
    }
    return out;
}

minimal_forbidden_set construct(std::size_t n) {
    if (n < 2) throw std::invalid_argument("construct: length must be at least 2");
    minimal_forbidden_set out{n, {}};
    for (std::int64_t p = 1; p < static_cast<std::int64_t>(n); ++p) {
        const std::int64_t q = static_cast<std::int64_t>(n) - p;
        if (std::gcd(p, q) == 1) continue;
        for (const word& cw :
             {christoffel::lower({p, q}), christoffel::upper({p, q})}) {
            word fw;
            fw.reserve(n);
            fw.push_back(cw.back());
            fw += cw.subword(1, n - 2);
            fw.push_back(cw.front());
            out.words.insert(std::move(fw));
        }
    }
    return out;
}

}  // namespace sturmkit::forbidden
