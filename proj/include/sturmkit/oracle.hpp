#pragma once

// Exhaustive desk-scale verification harness. Each registered claim is
// checked over a finite domain controlled by a bound; a failure carries
// the first (shortlex-least) counterexample found.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturmkit::oracle {

enum class profile { quick, standard, thorough };

std::optional<profile> profile_from_string(std::string_view name);

struct report {
    std::string claim_id;
    std::string range;
    bool passed = false;
    std::optional<std::string> counterexample;
    std::int64_t elapsed_ms = 0;
};

// Registered claim identifiers, in registration order.
std::vector<std::string> claim_ids();

bool is_claim(std::string_view id);

// Bound a profile assigns to a claim; throws for unknown claims.
std::size_t claim_bound(const std::string& id, profile p);

// Hard per-claim bound cap.
std::size_t claim_cap(const std::string& id);

// Runs one claim. Throws std::invalid_argument for an unknown claim and
// std::length_error when the bound exceeds the claim's cap. Exceptions
// raised while checking are converted into a failed report.
report verify(const std::string& claim_id, std::size_t bound);

// Runs every claim at the profile's bounds; claims execute
// concurrently and reports come back in registration order.
std::vector<report> verify_all(profile p = profile::standard);

bool all_passed(const std::vector<report>& reports);

// One-line renderings. The text line is fully deterministic; the JSON
// line additionally carries the elapsed time.
std::string to_text_line(const report& r);
std::string to_json_line(const report& r);

}  // namespace sturmkit::oracle
