#pragma once
// Output formats and argument parsing shared by the numwb command line.

#include "numwb/verify.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace numwb {

enum class OutputFormat { bfile, csv, jsonl, table };

// Accepts "json" as another name for jsonl. Throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);
std::string format_name(OutputFormat f);

struct IndexRange {
    std::uint64_t lo = 0, hi = 0;
};
// "a..b" or a single "n". Throws std::invalid_argument (also for a > b).
IndexRange parse_range(const std::string& text);
std::vector<std::uint64_t> parse_u64_list(const std::string& text);  // "6,19,35"

// A missing value is a gap (an empty digit string), written "-" in bfile and
// table output, as an empty csv field and as null in jsonl.
struct IndexedValue {
    std::uint64_t index = 0;
    std::optional<std::string> value;
    bool operator==(const IndexedValue&) const = default;
};

// table: the values on one line separated by single spaces.
std::string render_sequence(const std::vector<IndexedValue>& terms, OutputFormat f, const std::string& name);
std::vector<IndexedValue> parse_bfile(const std::string& text);  // throws on malformed lines

std::string render_report(const VerificationReport& r, OutputFormat f);

class Deadline {
public:
    explicit Deadline(std::optional<double> seconds);
    bool expired() const;

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_mismatch = 2, exit_timeout = 3 };

}  // namespace numwb
