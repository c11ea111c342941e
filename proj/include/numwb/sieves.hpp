#pragma once
// Deletion sieves. Value sieves delete by an arithmetic property and expose a
// closed survivor predicate; positional sieves delete by position in the
// list that is left after the previous pass.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace numwb {

struct SieveKind {
    enum Tag {
        cube_free,
        m_power_free,
        square_free,
        irrational_root,
        odd_sieve,
        binary,
        trinary,
        n_ary,
        k_ary_consecutive,
        consecutive,
        general,
        more_general,
        random,
    };
    Tag tag = binary;
    std::uint64_t param = 0;           // m for m_power_free, n for n_ary
    std::vector<std::uint64_t> u, v;   // generators for general / more_general
    std::uint64_t seed = 0;            // random
    std::vector<std::uint64_t> choices;  // random: explicit leading choices
};

std::optional<SieveKind::Tag> sieve_tag_from_name(const std::string& name);
std::string sieve_tag_name(SieveKind::Tag t);
std::vector<std::string> sieve_tag_names();
bool is_value_sieve(SieveKind::Tag t);

struct SieveRun {
    SieveKind kind;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> survivors;
    std::vector<std::uint64_t> deletion_log;  // deletions per pass (positional / random)
    std::vector<std::uint64_t> chosen;        // random sieve: the u_k actually used
};

SieveRun run_sieve(const SieveKind& kind, std::uint64_t limit);

// Only for value sieves; throws std::invalid_argument otherwise.
bool survivor_predicate(const SieveKind& kind, std::uint64_t n);

}  // namespace numwb
