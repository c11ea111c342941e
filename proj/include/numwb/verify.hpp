#pragma once
// The published-value check suite behind `numwb verify`.

#include <string>
#include <vector>

namespace numwb {

enum class CheckStatus { match, known_misprint, mismatch_new };
std::string status_name(CheckStatus s);  // match, mismatch-known-misprint, mismatch-new

struct CheckRecord {
    std::string id;      // "<module>/<name>", unique
    std::string module;
    std::string locus;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::match;
    // Only the differing positions, e.g. "n=45:5" against "n=45:6".
    std::string printed_diff, derived_diff;
};

struct VerificationReport {
    std::vector<CheckRecord> records;  // sorted by id
    std::size_t count(CheckStatus s) const;
};

std::vector<std::string> verify_scopes();  // "all" plus every module id
// Throws std::invalid_argument for an unknown scope. workers == 0 uses the
// hardware count; the report does not depend on it.
VerificationReport run_verification(const std::string& scope, unsigned workers = 0);

// Check ids without running anything.
std::vector<std::string> check_ids(const std::string& scope);

}  // namespace numwb
