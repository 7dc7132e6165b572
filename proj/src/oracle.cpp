#include "sturmkit/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "sturmkit/central.hpp"
#include "sturmkit/christoffel.hpp"
#include "sturmkit/enumeration.hpp"
#include "sturmkit/forbidden.hpp"
#include "sturmkit/sturmian.hpp"
#include "sturmkit/word.hpp"

namespace sturmkit::oracle {

namespace {

using christoffel::slope_pair;

std::string quoted(const word& w) { return "\"" + w.str() + "\""; }

std::string slope_text(std::int64_t p, std::int64_t q) {
    return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")";
}

// Words of length 0..bound in shortlex order; the callback returns a
// counterexample message to stop the scan.
template <typename F>
std::optional<std::string> scan_words(std::size_t bound, F&& f) {
    for (std::size_t n = 0; n <= bound; ++n)
        for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << n); ++rank) {
            if (auto fail = f(word::from_rank(n, rank))) return fail;
        }
    return std::nullopt;
}

// Slope pairs with p+q <= bound, both orientations.
template <typename F>
std::optional<std::string> scan_christoffel(std::size_t bound, F&& f) {
    for (std::int64_t n = 2; n <= static_cast<std::int64_t>(bound); ++n)
        for (std::int64_t p = 1; p < n; ++p) {
            const slope_pair s{p, n - p};
            if (auto fail = f(s, christoffel::lower(s))) return fail;
            if (auto fail = f(s, christoffel::upper(s))) return fail;
        }
    return std::nullopt;
}

// --- claim checkers -------------------------------------------------

std::optional<std::string> check_prefsuf(std::size_t bound) {
    auto fail = scan_words(bound, [](const word& w) -> std::optional<std::string> {
        if (sturmian::is_left_special(w)) {
            const word c = central::right_palindromic_closure(w);
            if (!central::is_central(c) || !c.starts_with(w))
                return "left special " + quoted(w) + " is not a prefix of a central closure";
        }
        if (sturmian::is_right_special(w)) {
            const word c = central::left_palindromic_closure(w);
            if (!central::is_central(c) || !c.ends_with(w))
                return "right special " + quoted(w) + " is not a suffix of a central closure";
        }
        return std::nullopt;
    });
    if (fail) return fail;
    // Converse: every prefix (suffix) of a central word is left (right)
    // special.
    return scan_words(bound + 2, [](const word& w) -> std::optional<std::string> {
        if (!central::is_central(w)) return std::nullopt;
        for (std::size_t k = 0; k <= w.size(); ++k) {
            if (!sturmian::is_left_special(w.prefix(k)))
                return "prefix " + quoted(w.prefix(k)) + " of central " + quoted(w) +
                       " is not left special";
            if (!sturmian::is_right_special(w.suffix(k)))
                return "suffix " + quoted(w.suffix(k)) + " of central " + quoted(w) +
                       " is not right special";
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_sturmstrispe(std::size_t bound) {
    return scan_words(bound, [](const word& w) -> std::optional<std::string> {
        const auto cls = sturmian::classify(w);
        if (cls.tag == sturmian::class_tag::strictly_bispecial && !is_palindrome(w))
            return "strictly bispecial non-palindrome " + quoted(w);
        if (cls.tag == sturmian::class_tag::non_strictly_bispecial && is_palindrome(w))
            return "non-strictly bispecial palindrome " + quoted(w);
        return std::nullopt;
    });
}

std::optional<std::string> check_delmi(std::size_t bound) {
    return scan_words(bound, [](const word& w) -> std::optional<std::string> {
        const bool awb = sturmian::is_balanced(letter::a + w + letter::b);
        const bool bwa = sturmian::is_balanced(letter::b + w + letter::a);
        if (!(awb && bwa)) return std::nullopt;
        if (!sturmian::is_balanced(letter::a + w + letter::a) ||
            !sturmian::is_balanced(letter::b + w + letter::b))
            return "mixed extensions balanced but equal ones not, w=" + quoted(w);
        return std::nullopt;
    });
}

std::optional<std::string> check_bisp(std::size_t bound) {
    return scan_words(bound, [](const word& w) -> std::optional<std::string> {
        if (!sturmian::is_balanced(w)) {
            if (sturmian::classify(w).extension_count != 0)
                return "unbalanced word with nonzero extension count " + quoted(w);
            return std::nullopt;
        }
        const bool left = sturmian::is_left_special(w);
        const bool right = sturmian::is_right_special(w);
        const int count = static_cast<int>(sturmian::extensions(w).size());
        int expected;
        if (left && right)
            expected = count == 4 ? 4 : 3;
        else if (left || right)
            expected = 2;
        else
            expected = 1;
        if (count != expected)
            return "extension count " + std::to_string(count) + " for " + quoted(w) +
                   ", predicates give " + std::to_string(expected);
        if (sturmian::classify(w).extension_count != count)
            return "classify disagrees with direct extension count for " + quoted(w);
        return std::nullopt;
    });
}

std::optional<std::string> check_charcentral(std::size_t bound) {
    return scan_words(bound, [](const word& w) -> std::optional<std::string> {
        const bool via_periods = central::is_central(w).has_value();
        const auto dec = central::try_decompose(w);
        if (via_periods != dec.has_value())
            return "period route and split route disagree on " + quoted(w);
        if (!via_periods) return std::nullopt;
        if (const auto* tp = std::get_if<central::two_palindromes>(&*dec)) {
            // The second palindrome must be the longest palindromic
            // proper suffix.
            word lpps;
            for (std::size_t len = w.size(); len-- > 0;) {
                word s = w.suffix(len);
                if (is_palindrome(s)) { lpps = std::move(s); break; }
            }
            if (tp->q != lpps)
                return "second palindrome of " + quoted(w) +
                       " is not the longest proper palindromic suffix";
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_sbscen(std::size_t bound) {
    return scan_words(bound, [](const word& w) -> std::optional<std::string> {
        const bool is_c = central::is_central(w).has_value();
        const bool is_sbs =
            sturmian::classify(w).tag == sturmian::class_tag::strictly_bispecial;
        if (is_c != is_sbs)
            return quoted(w) + (is_c ? " is central but not strictly bispecial"
                                     : " is strictly bispecial but not central");
        return std::nullopt;
    });
}

std::optional<std::string> check_rev(std::size_t bound) {
    for (std::int64_t p = 1; p <= static_cast<std::int64_t>(bound); ++p)
        for (std::int64_t q = 1; q <= static_cast<std::int64_t>(bound); ++q) {
            const word lo = christoffel::lower({p, q});
            if (christoffel::upper({p, q}) != reversed(lo))
                return "upper word is not the reversed lower word at " + slope_text(p, q);
            if (static_cast<std::int64_t>(lo.count(letter::a)) != p ||
                static_cast<std::int64_t>(lo.count(letter::b)) != q)
                return "letter counts differ from the slope at " + slope_text(p, q);
        }
    return std::nullopt;
}

// Shared by the two internal-factor characterizations: internal factors
// of Christoffel words of length m+2, optionally restricted to the
// primitive ones, against a classification predicate.
std::optional<std::string> check_internal_factors(std::size_t bound, bool primitive_only) {
    for (std::size_t m = 0; m <= bound; ++m) {
        std::set<word> by_definition;
        for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << m); ++rank) {
            word w = word::from_rank(m, rank);
            const auto tag = sturmian::classify(w).tag;
            const bool wanted =
                primitive_only
                    ? tag == sturmian::class_tag::strictly_bispecial
                    : tag == sturmian::class_tag::strictly_bispecial ||
                          tag == sturmian::class_tag::non_strictly_bispecial;
            if (wanted) by_definition.insert(std::move(w));
        }
        std::set<word> by_christoffel;
        const std::int64_t n = static_cast<std::int64_t>(m) + 2;
        for (std::int64_t p = 1; p < n; ++p) {
            const std::int64_t q = n - p;
            if (primitive_only && std::gcd(p, q) != 1) continue;
            by_christoffel.insert(christoffel::lower({p, q}).subword(1, m));
            by_christoffel.insert(christoffel::upper({p, q}).subword(1, m));
        }
        if (by_definition != by_christoffel) {
            std::set<word> diff;
            std::set_symmetric_difference(by_definition.begin(), by_definition.end(),
                                          by_christoffel.begin(), by_christoffel.end(),
                                          std::inserter(diff, diff.begin()));
            return "sets differ at internal length " + std::to_string(m) + ", first odd word " +
                   quoted(*diff.begin());
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_sbs_primitive(std::size_t bound) {
    return check_internal_factors(bound, true);
}

std::optional<std::string> check_main(std::size_t bound) {
    return check_internal_factors(bound, false);
}

std::optional<std::string> check_np_chris(std::size_t bound) {
    auto fail = scan_christoffel(
        bound, [](slope_pair s, const word& cw) -> std::optional<std::string> {
            christoffel::factorization f;
            try {
                f = christoffel::factorize(cw);  // reassembly checked inside
            } catch (const std::exception&) {
                return "factorization failed for " + quoted(cw);
            }
            if (!central::is_central(f.u))
                return "non-central kernel " + quoted(f.u) + " for " + quoted(cw);
            if (f.repetitions != static_cast<std::size_t>(std::gcd(s.p, s.q)) - 1)
                return "repetition count differs from gcd at " + slope_text(s.p, s.q);
            if ((f.repetitions == 0) != is_primitive(cw))
                return "primitivity disagrees with repetition count for " + quoted(cw);
            return std::nullopt;
        });
    if (fail) return fail;
    // Converse: assembling x (u y x)^k u y from any central u yields a
    // Christoffel word, primitive exactly for k = 0.
    if (bound < 2) return std::nullopt;
    return scan_words(bound - 2, [&](const word& u) -> std::optional<std::string> {
        if (!central::is_central(u)) return std::nullopt;
        const std::size_t piece = u.size() + 2;
        for (auto [x, y] : {std::pair{letter::a, letter::b}, std::pair{letter::b, letter::a}}) {
            for (std::size_t k = 0; (k + 1) * piece <= bound; ++k) {
                word cw;
                cw.reserve((k + 1) * piece);
                cw.push_back(x);
                for (std::size_t i = 0; i < k; ++i) {
                    cw += u;
                    cw.push_back(y);
                    cw.push_back(x);
                }
                cw += u;
                cw.push_back(y);
                const auto rec = christoffel::recognize(cw);
                if (!rec)
                    return "assembled word " + quoted(cw) + " is not a Christoffel word";
                if ((k == 0) != is_primitive(cw))
                    return "assembled word " + quoted(cw) + " has wrong primitivity";
            }
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_rpl(std::size_t bound) {
    return scan_christoffel(bound,
                            [](slope_pair, const word& cw) -> std::optional<std::string> {
                                const word w = cw.subword(1, cw.size() - 2);
                                if (!central::is_central(central::right_palindromic_closure(w)))
                                    return "right closure of " + quoted(w) + " is not central";
                                if (!central::is_central(central::left_palindromic_closure(w)))
                                    return "left closure of " + quoted(w) + " is not central";
                                return std::nullopt;
                            });
}

std::optional<std::string> check_counts(std::size_t bound) {
    const auto mismatch = [](const char* name, std::int64_t n, std::int64_t closed,
                             std::int64_t brute) -> std::string {
        return std::string(name) + "(" + std::to_string(n) + "): closed form " +
               std::to_string(closed) + ", exhaustive " + std::to_string(brute);
    };
    for (std::size_t n = 0; n <= bound; ++n) {
        std::int64_t st = 0, ls = 0, rs = 0, bs = 0, sbs = 0;
        for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << n); ++rank) {
            const word w = word::from_rank(n, rank);
            if (!sturmian::is_balanced(w)) continue;
            ++st;
            const bool left = sturmian::is_left_special(w);
            const bool right = sturmian::is_right_special(w);
            if (left) ++ls;
            if (right) ++rs;
            if (left && right) {
                ++bs;
                if (sturmian::extensions(w).size() == 4) ++sbs;
            }
        }
        const std::int64_t nbs = bs - sbs;
        const std::int64_t mf =
            n == 0 ? 0
                   : static_cast<std::int64_t>(forbidden::bruteforce(n, bound).words.size());
        const auto sn = static_cast<std::int64_t>(n);
        if (enumeration::count_sturmian(sn) != st)
            return mismatch("St", sn, enumeration::count_sturmian(sn), st);
        if (enumeration::count_left_special(sn) != ls)
            return mismatch("LS", sn, enumeration::count_left_special(sn), ls);
        if (enumeration::count_right_special(sn) != rs)
            return mismatch("RS", sn, enumeration::count_right_special(sn), rs);
        if (enumeration::count_strict_bispecial(sn) != sbs)
            return mismatch("SBS", sn, enumeration::count_strict_bispecial(sn), sbs);
        if (enumeration::count_nonstrict_bispecial(sn) != nbs)
            return mismatch("NBS", sn, enumeration::count_nonstrict_bispecial(sn), nbs);
        if (enumeration::count_bispecial(sn) != bs)
            return mismatch("BS", sn, enumeration::count_bispecial(sn), bs);
        if (enumeration::count_minimal_forbidden(sn) != mf)
            return mismatch("MF", sn, enumeration::count_minimal_forbidden(sn), mf);
        // Derivation chain on the closed forms.
        if (enumeration::count_left_special(sn) !=
            enumeration::count_sturmian(sn + 1) - enumeration::count_sturmian(sn))
            return "LS(" + std::to_string(n) + ") differs from the growth of St";
        if (enumeration::count_strict_bispecial(sn) !=
            enumeration::count_left_special(sn + 1) - enumeration::count_left_special(sn))
            return "SBS(" + std::to_string(n) + ") differs from the growth of LS";
    }
    return std::nullopt;
}

std::optional<std::string> check_mf(std::size_t bound) {
    for (std::size_t n = 2; n <= bound; ++n) {
        const auto constructed = forbidden::construct(n).words;
        const auto filtered = forbidden::bruteforce(n, bound).words;
        if (constructed != filtered) {
            std::set<word> diff;
            std::set_symmetric_difference(constructed.begin(), constructed.end(),
                                          filtered.begin(), filtered.end(),
                                          std::inserter(diff, diff.begin()));
            return "sets differ at length " + std::to_string(n) + ", first odd word " +
                   quoted(*diff.begin());
        }
    }
    return std::nullopt;
}

// --- registry ---------------------------------------------------------

std::string range_words(std::size_t b) { return "all words of length 0.." + std::to_string(b); }
std::string range_internal(std::size_t b) { return "internal lengths 0.." + std::to_string(b); }
std::string range_slopes(std::size_t b) {
    return "slope pairs (p,q), 1 <= p,q <= " + std::to_string(b);
}
std::string range_christoffel(std::size_t b) {
    return "Christoffel words of length 2.." + std::to_string(b);
}
std::string range_lengths(std::size_t b) { return "lengths 0.." + std::to_string(b); }
std::string range_lengths_from_two(std::size_t b) { return "lengths 2.." + std::to_string(b); }

struct claim_spec {
    const char* id;
    std::size_t quick, standard, thorough, cap;
    std::optional<std::string> (*check)(std::size_t);
    std::string (*range)(std::size_t);
};

constexpr claim_spec claims[] = {
    {"lem:prefsuf", 10, 12, 16, 18, check_prefsuf, range_words},
    {"prop:sturmstrispe", 10, 12, 16, 18, check_sturmstrispe, range_words},
    {"lem:delmi", 10, 12, 16, 18, check_delmi, range_words},
    {"prop:bisp", 10, 12, 16, 18, check_bisp, range_words},
    {"prop:charcentral", 10, 12, 16, 18, check_charcentral, range_words},
    {"prop:sbscen", 10, 12, 16, 18, check_sbscen, range_words},
    {"lem:rev", 20, 50, 50, 200, check_rev, range_slopes},
    {"theor:sbsCP", 10, 12, 16, 18, check_sbs_primitive, range_internal},
    {"lem:npChris", 10, 16, 20, 20, check_np_chris, range_christoffel},
    {"lem:rpl", 10, 16, 20, 64, check_rpl, range_christoffel},
    {"theor:main", 10, 12, 16, 18, check_main, range_internal},
    {"counts", 10, 14, 16, 18, check_counts, range_lengths},
    {"theor:mf", 10, 14, 16, 18, check_mf, range_lengths_from_two},
};

const claim_spec& find_claim(std::string_view id) {
    for (const claim_spec& c : claims)
        if (id == c.id) return c;
    throw std::invalid_argument("unknown claim: " + std::string(id));
}

}  // namespace

std::optional<profile> profile_from_string(std::string_view name) {
    if (name == "quick") return profile::quick;
    if (name == "standard") return profile::standard;
    if (name == "thorough") return profile::thorough;
    return std::nullopt;
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const claim_spec& c : claims) out.emplace_back(c.id);
    return out;
}

bool is_claim(std::string_view id) {
    for (const claim_spec& c : claims)
        if (id == c.id) return true;
    return false;
}

std::size_t claim_bound(const std::string& id, profile p) {
    const claim_spec& c = find_claim(id);
    switch (p) {
        case profile::quick: return c.quick;
        case profile::standard: return c.standard;
        case profile::thorough: return c.thorough;
    }
    return c.standard;
}

std::size_t claim_cap(const std::string& id) { return find_claim(id).cap; }

report verify(const std::string& claim_id, std::size_t bound) {
    const claim_spec& c = find_claim(claim_id);
    if (bound > c.cap)
        throw std::length_error("claim " + claim_id + ": bound " + std::to_string(bound) +
                                " exceeds cap " + std::to_string(c.cap));
    report rep;
    rep.claim_id = c.id;
    rep.range = c.range(bound);
    const auto start = std::chrono::steady_clock::now();
    try {
        rep.counterexample = c.check(bound);
    } catch (const std::exception& e) {
        rep.counterexample = std::string("exception: ") + e.what();
    }
    rep.passed = !rep.counterexample.has_value();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::vector<report> verify_all(profile p) {
    std::vector<std::future<report>> futures;
    futures.reserve(std::size(claims));
    for (const claim_spec& c : claims) {
        const std::string id = c.id;
        const std::size_t bound = claim_bound(id, p);
        futures.push_back(std::async(std::launch::async,
                                     [id, bound] { return verify(id, bound); }));
    }
    std::vector<report> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

bool all_passed(const std::vector<report>& reports) {
    for (const report& r : reports)
        if (!r.passed) return false;
    return true;
}

std::string to_text_line(const report& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  ";
    os << r.claim_id;
    for (std::size_t i = r.claim_id.size(); i < 18; ++i) os << ' ';
    os << "  " << r.range;
    if (r.counterexample) os << "  counterexample: " << *r.counterexample;
    return os.str();
}

std::string to_json_line(const report& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["range"] = r.range;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    else
        j["counterexample"] = nullptr;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

}  // namespace sturmkit::oracle
