#include "sturmkit/enumeration.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sturmkit::enumeration {

namespace {

constexpr std::int64_t trial_division_limit = 10'000;

void check_nonnegative(std::int64_t n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative length");
    if (n > max_table_length)
        throw std::length_error(std::string(what) + ": length " + std::to_string(n) +
                                " exceeds table cap " + std::to_string(max_table_length));
}

std::int64_t totient_trial(std::int64_t n) {
    std::int64_t result = n, m = n;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::domain_error("totient: argument must be positive");
    if (n < trial_division_limit) return totient_trial(n);
    return totient_table(n)[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> totient_table(std::int64_t max_n) {
    if (max_n < 1) throw std::domain_error("totient_table: bound must be positive");
    if (max_n > max_table_length + 4)
        throw std::length_error("totient_table: bound exceeds table cap");
    std::vector<std::int64_t> phi(static_cast<std::size_t>(max_n) + 1);
    std::iota(phi.begin(), phi.end(), std::int64_t{0});
    for (std::int64_t i = 2; i <= max_n; ++i)
        if (phi[static_cast<std::size_t>(i)] == i)  // i is prime
            for (std::int64_t j = i; j <= max_n; j += i) {
                auto& v = phi[static_cast<std::size_t>(j)];
                v -= v / i;
            }
    return phi;
}

std::int64_t count_sturmian(std::int64_t n) {
    check_nonnegative(n, "count_sturmian");
    if (n == 0) return 1;
    const auto phi = totient_table(n);
    std::int64_t sum = 1;
    for (std::int64_t i = 1; i <= n; ++i) sum += (n - i + 1) * phi[static_cast<std::size_t>(i)];
    return sum;
}

std::int64_t count_left_special(std::int64_t n) {
    check_nonnegative(n, "count_left_special");
    const auto phi = totient_table(n + 1);
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= n + 1; ++i) sum += phi[static_cast<std::size_t>(i)];
    return sum;
}

std::int64_t count_right_special(std::int64_t n) {
    check_nonnegative(n, "count_right_special");
    return count_left_special(n);
}

std::int64_t count_strict_bispecial(std::int64_t n) {
    check_nonnegative(n, "count_strict_bispecial");
    return totient(n + 2);
}

std::int64_t count_nonstrict_bispecial(std::int64_t n) {
    check_nonnegative(n, "count_nonstrict_bispecial");
    if (n < 2) return 0;
    return 2 * (n + 1 - totient(n + 2));
}

std::int64_t count_bispecial(std::int64_t n) {
    check_nonnegative(n, "count_bispecial");
    return 2 * (n + 1) - totient(n + 2);
}

std::int64_t count_minimal_forbidden(std::int64_t n) {
    check_nonnegative(n, "count_minimal_forbidden");
    if (n < 2) return 0;
    return 2 * (n - 1 - totient(n));
}

count_table build_table(std::int64_t max_n) {
    check_nonnegative(max_n, "build_table");
    const auto phi = totient_table(max_n + 3);
    const auto at = [&phi](std::int64_t i) { return phi[static_cast<std::size_t>(i)]; };

    // Running sums: big_phi = sum of phi(i), weighted = sum of i*phi(i),
    // so that st(n) = 1 + (n+1)*big_phi(n) - weighted(n).
    const auto st_of = [&](std::int64_t n, std::int64_t big_phi, std::int64_t weighted) {
        return 1 + (n + 1) * big_phi - weighted;
    };

    count_table table;
    table.max_length = max_n;
    table.rows.reserve(static_cast<std::size_t>(max_n) + 1);

    std::int64_t big_phi = 0, weighted = 0;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        if (n >= 1) {
            big_phi += at(n);
            weighted += n * at(n);
        }
        count_row row;
        row.n = n;
        row.st = st_of(n, big_phi, weighted);
        row.ls = big_phi + at(n + 1);
        row.rs = row.ls;
        row.sbs = at(n + 2);
        row.nbs = n < 2 ? 0 : 2 * (n + 1 - at(n + 2));
        row.bs = 2 * (n + 1) - at(n + 2);
        row.mf = n < 2 ? 0 : 2 * (n - 1 - at(n));

        if (row.bs != row.sbs + row.nbs)
            throw std::logic_error("build_table: bispecial split mismatch at n=" + std::to_string(n));
        const std::int64_t st_next =
            st_of(n + 1, big_phi + at(n + 1), weighted + (n + 1) * at(n + 1));
        if (st_next - row.st != row.ls)
            throw std::logic_error("build_table: growth mismatch at n=" + std::to_string(n));

        table.rows.push_back(row);
    }
    return table;
}

}  // namespace sturmkit::enumeration
