#pragma once
// Generalized numeral bases with greedy codecs, factorial-base arithmetic,
// Romanian multiplication, division by k^n, Smarandacheials and summants.

#include "numwb/numeric.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace numwb {

// A scale 1 = g_0 < g_1 < ... The prefix is generated on demand and cached.
class GeneralizedBase {
public:
    enum Kind { prime, square, m_power, factorial, double_factorial, triangular, geometric, custom };

    static GeneralizedBase primes();
    static GeneralizedBase squares();
    static GeneralizedBase m_powers(unsigned m);
    static GeneralizedBase factorials();
    static GeneralizedBase double_factorials();
    static GeneralizedBase triangulars();
    static GeneralizedBase geometric_base(unsigned p);
    // Finite list; must start at 1 and increase strictly. Throws otherwise.
    static GeneralizedBase custom_list(std::vector<Natural> scale);

    Kind kind() const { return kind_; }
    std::string name() const;
    Natural scale(std::size_t i) const;  // g_i; throws past a custom list
    // Index of the largest g_i <= a (a >= 1).
    std::size_t position_of(const Natural& a) const;
    Natural digit_bound(std::size_t i) const;  // floor((g_{i+1} - 1) / g_i)

private:
    GeneralizedBase(Kind k, unsigned param) : kind_(k), param_(param), cache_(std::make_shared<Cache>()) {}
    Natural generate(std::size_t i) const;

    struct Cache {
        std::mutex mu;
        std::vector<Natural> values;
    };
    Kind kind_;
    unsigned param_;
    std::shared_ptr<Cache> cache_;
};

std::optional<GeneralizedBase> base_from_name(const std::string& name, unsigned param = 0);

// digits[i] is the digit at position i (least significant first).
struct RadixNumeral {
    std::vector<Natural> digits;
    std::string str() const;  // most significant first; digits > 9 in brackets
};

RadixNumeral encode(const Natural& a, const GeneralizedBase& base);
Natural decode(const RadixNumeral& x, const GeneralizedBase& base);  // throws on bound violations
// Parses the printed form (most significant first, one char per digit or [n]).
RadixNumeral parse_numeral(const std::string& text);
std::vector<Natural> superior_part_summands(const Natural& a, const GeneralizedBase& base);

// Factorial base: position i carries at i + 2.
RadixNumeral factorial_add(const RadixNumeral& x, const RadixNumeral& y);
RadixNumeral factorial_sub(const RadixNumeral& x, const RadixNumeral& y);  // throws if x < y

struct WorkRow {
    Natural a, b;  // multiplication: c(A), c(B). division: c(A), exponent of c(k^n)
    Natural r, p;  // rest and partial (division: c(P) power is k^row)
};

struct WorkTable {
    std::vector<WorkRow> rows;
    Natural total;
    Natural last_a;  // division: the final c(A) line (the quotient)
    std::string render(bool division, unsigned k) const;
};

struct MultiplyResult {
    Natural product;
    WorkTable table;
};
MultiplyResult romanian_multiply(const Natural& a, const Natural& b, unsigned k);

struct DivideResult {
    Natural quotient, remainder;
    WorkTable table;
};
DivideResult divide_by_power(const Natural& a, unsigned k, unsigned n);

enum class FoldMode { product, signed_sum, absolute_sum };

struct FoldSpec {
    std::int64_t n = 0;
    std::int64_t k = 1;
    std::optional<std::int64_t> m;  // extension bound
    FoldMode mode = FoldMode::product;
};

// Index set i >= 0 with 0 < |n - k i| <= bound (bound = m or n).
std::vector<std::int64_t> fold_factors(std::int64_t n, std::int64_t k, std::int64_t bound);
Integer smarandacheial(const FoldSpec& spec);
// Without m: the same index set as the Smarandacheial. With m: i = 0..floor((n+m)/k).
Integer summant(const FoldSpec& spec);

}  // namespace numwb
