#include "sturmkit/christoffel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sturmkit::christoffel {

namespace {

void check_slope(slope_pair s) {
    if (s.p < 1 || s.q < 1)
        throw std::invalid_argument("christoffel: both step counts must be positive");
}

}  // namespace

const char* to_string(side s) { return s == side::lower ? "lower" : "upper"; }

word lower(slope_pair s) {
    check_slope(s);
    const std::int64_t n = s.p + s.q;
    word w;
    w.reserve(static_cast<std::size_t>(n));
    std::int64_t prev = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t cur = (prev + s.q) % n;
        w.push_back(cur > prev ? letter::a : letter::b);
        prev = cur;
    }
    return w;
}

word upper(slope_pair s) {
    check_slope(s);
    const std::int64_t n = s.p + s.q;
    word w;
    w.reserve(static_cast<std::size_t>(n));
    std::int64_t prev = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t cur = (prev + s.p) % n;
        w.push_back(cur < prev ? letter::a : letter::b);
        prev = cur;
    }
    return w;
}

std::optional<recognition> recognize(const word& w) {
    if (w.size() < 2) return std::nullopt;
    const auto p = static_cast<std::int64_t>(w.count(letter::a));
    const auto q = static_cast<std::int64_t>(w.count(letter::b));
    if (p < 1 || q < 1) return std::nullopt;
    const slope_pair s{p, q};
    // A lower word starts with 'a' and an upper word with 'b', so the
    // two cases cannot overlap.
    if (w.front() == letter::a) {
        if (w == lower(s)) return recognition{s, side::lower};
    } else {
        if (w == upper(s)) return recognition{s, side::upper};
    }
    return std::nullopt;
}

factorization factorize(const word& w) {
    const auto rec = recognize(w);
    if (!rec) throw std::invalid_argument("factorize: not a Christoffel word");
    const std::int64_t r = std::gcd(rec->slope.p, rec->slope.q);
    const slope_pair reduced{rec->slope.p / r, rec->slope.q / r};
    const word root = rec->orientation == side::lower ? lower(reduced) : upper(reduced);

    factorization f;
    f.x = root.front();
    f.y = root.back();
    f.u = root.subword(1, root.size() - 2);
    f.repetitions = static_cast<std::size_t>(r - 1);

    word rebuilt;
    rebuilt.reserve(w.size());
    rebuilt.push_back(f.x);
    for (std::size_t i = 0; i < f.repetitions; ++i) {
        rebuilt += f.u;
        rebuilt.push_back(f.y);
        rebuilt.push_back(f.x);
    }
    rebuilt += f.u;
    rebuilt.push_back(f.y);
    if (rebuilt != w) throw std::logic_error("factorize: reassembly mismatch");
    return f;
}

std::vector<std::string> rotation_matrix::rows() const {
    std::vector<std::string> out(order, std::string(order, '?'));
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) out[i][j] = to_char(columns[j][i]);
    return out;
}

rotation_matrix rotation_matrix_of(slope_pair s) {
    const word base = lower(s);
    std::vector<word> cols = rotations(base);
    std::stable_sort(cols.begin(), cols.end());
    return rotation_matrix{cols.size(), std::move(cols)};
}

word bwt(const word& w) {
    if (w.empty()) throw std::invalid_argument("bwt: empty word");
    std::vector<word> rot = rotations(w);
    std::stable_sort(rot.begin(), rot.end());
    word out;
    out.reserve(rot.size());
    for (const word& r : rot) out.push_back(r.back());
    return out;
}

}  // namespace sturmkit::christoffel
