#include "sturmkit/sturmian.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>
#include <string>

// Fault-injection seam used by the harness-sensitivity test build; a
// regular build always compiles with slack 1, i.e. the standard
// balance condition.
#ifndef STURMKIT_BALANCE_SLACK
#define STURMKIT_BALANCE_SLACK 1
#endif

namespace sturmkit::sturmian {

namespace {

constexpr int balance_slack = STURMKIT_BALANCE_SLACK;

}  // namespace

const char* to_string(class_tag t) {
    switch (t) {
        case class_tag::not_sturmian: return "NotSturmian";
        case class_tag::neither_special: return "NeitherSpecial";
        case class_tag::left_special_only: return "LeftSpecialOnly";
        case class_tag::right_special_only: return "RightSpecialOnly";
        case class_tag::non_strictly_bispecial: return "NonStrictlyBispecial";
        case class_tag::strictly_bispecial: return "StrictlyBispecial";
    }
    return "?";
}

bool is_balanced(const word& w) {
    const std::size_t n = w.size();
    if (n < 2) return true;
    std::vector<int> acc(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        acc[i + 1] = acc[i] + (w[i] == letter::a ? 1 : 0);
    for (std::size_t len = 1; len < n; ++len) {
        int lo = INT_MAX, hi = INT_MIN;
        for (std::size_t k = len; k <= n; ++k) {
            const int c = acc[k] - acc[k - len];
            if (c < lo) lo = c;
            if (c > hi) hi = c;
        }
        if (hi - lo > balance_slack) return false;
    }
    return true;
}

std::set<word> extensions(const word& w) {
    if (!is_balanced(w)) throw std::invalid_argument("extensions: word is not Sturmian");
    std::set<word> out;
    for (letter x : {letter::a, letter::b})
        for (letter y : {letter::a, letter::b}) {
            word e = x + w + y;
            if (is_balanced(e)) out.insert(std::move(e));
        }
    return out;
}

bool is_left_special(const word& w) {
    return is_balanced(letter::a + w) && is_balanced(letter::b + w);
}

bool is_right_special(const word& w) {
    return is_balanced(w + letter::a) && is_balanced(w + letter::b);
}

sturmian_class classify(const word& w) {
    if (!is_balanced(w)) return {class_tag::not_sturmian, 0};
    const bool left = is_left_special(w);
    const bool right = is_right_special(w);
    const std::set<word> ext = extensions(w);
    const int count = static_cast<int>(ext.size());

    class_tag tag;
    int expected;
    if (left && right) {
        const bool strict = count == 4;
        tag = strict ? class_tag::strictly_bispecial : class_tag::non_strictly_bispecial;
        expected = strict ? 4 : 3;
    } else if (left) {
        tag = class_tag::left_special_only;
        expected = 2;
    } else if (right) {
        tag = class_tag::right_special_only;
        expected = 2;
    } else {
        tag = class_tag::neither_special;
        expected = 1;
    }
    if constexpr (balance_slack == 1) {
        // The one-sided predicates and the two-sided extension count
        // must tell the same story.
        assert(count == expected);
    }
    (void)expected;
    return {tag, count};
}

namespace {

// Backtracking generator. A prefix is extended letter by letter; for
// each window length the min/max 'a'-count seen so far is maintained,
// and a branch dies as soon as some spread exceeds the bound. Every
// window of the prefix ends at some position, so processing only the
// windows ending at the new letter covers them all exactly once.
struct balanced_enumerator {
    std::size_t target;
    std::vector<int> acc;      // prefix counts of 'a'
    std::vector<int> lo, hi;   // per window length; sentinels until first window
    word cur;
    std::vector<word> out;

    explicit balanced_enumerator(std::size_t n)
        : target(n), acc(n + 1, 0), lo(n + 1, INT_MAX), hi(n + 1, INT_MIN) {
        cur.reserve(n);
    }

    struct change {
        std::size_t len;
        int lo, hi;
    };

    bool push(letter x, std::vector<change>& undo) {
        cur.push_back(x);
        const std::size_t k = cur.size();
        acc[k] = acc[k - 1] + (x == letter::a ? 1 : 0);
        for (std::size_t len = 1; len <= k; ++len) {
            const int c = acc[k] - acc[k - len];
            const int nl = c < lo[len] ? c : lo[len];
            const int nh = c > hi[len] ? c : hi[len];
            if (nh - nl > balance_slack) {
                revert(undo);
                cur.pop_back();
                return false;
            }
            if (nl != lo[len] || nh != hi[len]) {
                undo.push_back({len, lo[len], hi[len]});
                lo[len] = nl;
                hi[len] = nh;
            }
        }
        return true;
    }

    void revert(const std::vector<change>& undo) {
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            lo[it->len] = it->lo;
            hi[it->len] = it->hi;
        }
    }

    void recurse() {
        if (cur.size() == target) {
            out.push_back(cur);
            return;
        }
        for (letter x : {letter::a, letter::b}) {
            std::vector<change> undo;
            if (push(x, undo)) {
                recurse();
                revert(undo);
                cur.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<word> enumerate(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw std::length_error("enumerate: length " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    balanced_enumerator e(n);
    e.recurse();
    return std::move(e.out);
}

}  // namespace sturmkit::sturmian
