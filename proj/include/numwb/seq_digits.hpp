#pragma once
// Digit-construction and concatenation sequences, pseudo-* classifiers and
// digital / partial-digital filters.

#include "numwb/numeric.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace numwb {

enum class Family {
    consecutive,
    circular,
    symmetric,
    mirror,
    deconstructive,
    permutation,
    reverse,
    anti_symmetric,
    concatenated_natural,
    unary,
    no_prime_digit,
    no_square_digit,
    pierced_chain,
    code_puzzle,
    threes_ones_simple,
    threes_ones_nested,
    generic_concat,
};

// One value of a user function for generic_concat; nullopt means "empty here".
using ConcatPart = std::function<std::optional<Natural>(std::uint64_t)>;

struct FamilySpec {
    Family family = Family::consecutive;
    unsigned base = 10;
    std::vector<ConcatPart> parts;  // generic_concat only
};

// Terms are kept as digit text: code_puzzle keeps leading zeros and the
// digit-stripping families can produce the empty string (a gap, not 0).
struct Term {
    std::string digits;
    unsigned base = 10;
    bool empty() const { return digits.empty(); }
    Natural value() const;  // throws on an empty term
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);
std::vector<std::string> family_names();

Term term(const FamilySpec& spec, std::uint64_t n);
std::string english_words(std::uint64_t n);  // "twenty one", no "and"

enum class Source { naturals, odds, evens, primes, squares, cubes, fibonacci, custom };
enum class Direction { forward, backward };

struct BaseSeqSpec {
    Source source = Source::naturals;
    Direction direction = Direction::forward;
    std::vector<Natural> custom;
};

std::optional<Source> source_from_name(const std::string& name);
// First n members of the source (throws if a custom list is too short).
std::vector<Natural> source_prefix(const BaseSeqSpec& s, std::size_t n);
Natural concatenated_term(const BaseSeqSpec& s, std::size_t n);

std::vector<Natural> constructive_terms(const std::vector<std::string>& atoms, std::size_t count);

struct PseudoProperty {
    enum Kind { prime, square, cube, m_power, factorial, odd, even, triangular, multiple_of, divisor_of };
    Kind kind = prime;
    std::uint64_t param = 0;  // m for m_power, p for multiple_of, m for divisor_of
};

bool satisfies(const PseudoProperty& p, const Natural& n);

struct PseudoFlags {
    bool first = false;
    bool second = false;
    bool third = false;
};
PseudoFlags pseudo_classify(const PseudoProperty& p, const Natural& n);

enum class AlmostKind { first, second };
std::vector<std::uint64_t> almost_primes(AlmostKind kind, std::uint64_t a1, std::size_t count);

enum class CountSource { primes, factorials, self_powers };
std::size_t digit_count_sequence(CountSource s, unsigned digit, std::uint64_t n);

// Members of the predicate's set whose decimal digits are exactly `digits`
// (all used, nothing else). Searches up to max_digits digits.
std::vector<Natural> digit_only_subsequence(const std::function<bool(const Natural&)>& pred,
                                            const std::vector<unsigned>& digits, std::size_t count,
                                            std::size_t max_digits = 24);

bool full_digital_filter(const PseudoProperty& p, const Natural& n);

enum class PartialKind { square, cube, prime, lucas, fibonacci };
std::optional<std::vector<std::string>> partial_digital_filter(PartialKind p, const Natural& n);

std::vector<std::uint64_t> lucky_numbers(std::uint64_t limit);

enum class DigitalFn { double_it, lucky_index };
std::optional<std::pair<Natural, Natural>> f_digital_filter(
    const std::function<std::optional<Natural>(const Natural&)>& f, const Natural& n);
std::optional<std::pair<Natural, Natural>> f_digital_filter(DigitalFn f, const Natural& n);

enum class SubKind {
    crescendo,
    decrescendo,
    cresc_pyramidal,
    decresc_pyramidal,
    cresc_symmetric,
    decresc_symmetric,
    permutation_sub,
};
std::uint64_t subsequence_closed_form(SubKind k, std::uint64_t i);
// Block-by-block construction, used to check the formulas.
std::vector<std::uint64_t> subsequence_stream(SubKind k, std::size_t count);

struct UniformResult {
    bool empty = false;  // certified: no multiple at all
    std::vector<Natural> terms;
};
UniformResult uniform_sequence(std::uint64_t n, std::vector<unsigned> digits, unsigned base, std::size_t count,
                               std::size_t max_length = 400);

enum class Op { add, sub, mul, div, pow, root };
struct OperationResult {
    std::vector<Natural> terms;
    bool truncated = false;
    std::string note;
};
// mode_seed empty -> minimal; otherwise a seeded random admissible choice.
OperationResult operation_sequence(const std::vector<Op>& ops, std::size_t count,
                                   std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace numwb
