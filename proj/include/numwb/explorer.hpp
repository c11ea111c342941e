#pragma once
// Tables, recurrence-built sets, greedy builders, loop analysis and bounded
// searches. Everything here takes explicit bounds.

#include "numwb/numeric.hpp"
#include "numwb/seq_digits.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace numwb {

// Cells hold 0 where the table is blank (below the diagonal).
struct TableReport {
    std::vector<std::uint64_t> row_labels, col_labels;
    std::vector<std::vector<std::uint64_t>> cells;
    std::uint64_t scalar = 0;
};

// Over the first n odd primes, repetition allowed.
std::uint64_t goldbach_t(std::size_t n);
std::uint64_t vinogradov_v(std::size_t n);
TableReport goldbach_table(std::size_t n);
// Plane i (1-based): p_i + p_j + p_k for j <= k.
TableReport vinogradov_plane(std::size_t n, std::size_t i);

// Ways to write odd m as p_i + (p_j + p_k): the first summand is ordered,
// the remaining pair is unordered. The odd primes are not bounded.
std::uint64_t vinogradov_a(std::uint64_t m);

enum class ProductKind { prime, square, cubic, factorial, custom };
struct ProductTerm {
    Natural value;
    bool prime = false;
};
// 1 + u_1 u_2 ... u_n; custom takes u(k) for k >= 1.
ProductTerm product_sequence(ProductKind kind, std::size_t n,
                             const std::function<Natural(std::uint64_t)>& custom = {});

enum class Relation { sum_of_squares, sum_of_cubes, custom };
enum class Combine { tuples, subsets };  // j distinct indices, or one or more
enum class Polarity { positive, negative };

struct RecurrenceSetSpec {
    std::vector<std::uint64_t> seeds{1, 2};
    std::size_t arity = 2;
    Combine combine = Combine::tuples;
    Relation relation = Relation::sum_of_squares;
    Polarity polarity = Polarity::positive;
    // Must be non-decreasing in each argument, so truncation at the limit is safe.
    std::function<std::uint64_t(const std::vector<std::uint64_t>&)> custom;
};

// Positive: the closure in increasing order. Negative: the greedy avoider.
// Both stop at the limit.
std::vector<std::uint64_t> recurrence_set(const RecurrenceSetSpec& spec, std::uint64_t limit);

enum class ProgressionKind { arithmetic, geometric };
// No t chosen terms in progression; geometric ratios may be rational.
std::vector<std::uint64_t> progression_avoider(ProgressionKind kind, unsigned t, std::vector<std::uint64_t> seeds,
                                               std::size_t count);

enum class BuilderKind { multiplicative, non_multiplicative };
std::vector<std::uint64_t> multiplicative_builder(BuilderKind kind, unsigned k, std::vector<std::uint64_t> seeds,
                                                  std::size_t count);

enum class Law { add, sub, mul };
// Offsets k with f(k+1) o ... o f(k+p) = f(k+p+1) o ... o f(k+p+q), folded left.
// The range bounds the first index k + 1.
std::vector<std::uint64_t> relationship_search(const std::function<Integer(std::uint64_t)>& f, unsigned p,
                                               unsigned q, Law law, std::uint64_t lo, std::uint64_t hi);

std::vector<std::int64_t> partial_perfect_additive(std::size_t count);

enum class LoopKind { reverse_subtract, subtraction, multiplication, mixed, generic };
struct LoopSpec {
    LoopKind kind = LoopKind::reverse_subtract;
    unsigned width = 0;  // digit width; 0 takes the start's own width
    std::uint64_t c = 0;
    std::function<std::uint64_t(std::uint64_t)> map;  // generic only
};

struct LoopReport {
    std::uint64_t start = 0;
    std::size_t tail = 0;  // steps before the first cycle member
    std::vector<std::uint64_t> cycle;
    std::size_t period = 0;
    bool invariant_hit = false;  // the cycle is a fixed point
    // 1-based index of the first repeated term (the start is term 1), i.e.
    // tail + period + 1. Published search tables count this way.
    std::size_t closing_index() const { return tail + period + 1; }
};

std::uint64_t loop_step(const LoopSpec& spec, unsigned width, std::uint64_t n);
LoopReport periodic_loop(const LoopSpec& spec, std::uint64_t start);

// C(n, k) = 4n prod_{i=1}^{k-1} (4n - 4i + 1), C(n, 0) = 1.
Natural carpet_C(unsigned n, unsigned k);
// Builds the rhombus |x| + |y| <= n cell by cell; level k sits at distance n - k
// and takes the sum of every cell on the outer levels.
std::vector<std::vector<Natural>> carpet(unsigned n);
std::vector<Natural> carpet_levels(unsigned n);  // read back from the grid

struct MagicIndex {
    std::uint64_t min_sum = 0, max_sum = 0;
    std::size_t combinations = 0;  // distinct up to rotation and reflection
    std::size_t extreme_combinations = 0;  // those reaching min or max
};
MagicIndex magic_index(unsigned n);  // n == 3 only
bool magic_square_check(const std::vector<std::vector<std::int64_t>>& grid);

struct BadNumberScan {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> witnesses;  // a -> (x, y)
    std::vector<std::uint64_t> unrepresented;
};
BadNumberScan bad_number_scan(std::uint64_t a_limit, std::uint64_t x_limit, std::uint64_t y_limit);

struct PrimeTriple {
    std::uint64_t p, q, r;  // m = p + q - r, p <= q
};
std::vector<PrimeTriple> prime_conjecture_count(std::int64_t m, std::uint64_t prime_bound);

Natural partition_count(std::uint64_t n, unsigned power);  // multisets of positive powers

// n in [from, limit]. workers == 0 picks the hardware count; the result does
// not depend on it. Triplets start at n = 4: n = 3 only qualifies through the
// value chosen for S(1).
std::vector<std::uint64_t> triplet_search(std::uint64_t limit, unsigned workers = 0, std::uint64_t from = 4);
std::vector<std::uint64_t> duplet_search(std::uint64_t limit, unsigned workers = 0, std::uint64_t from = 1);

struct ExpressionHit {
    std::vector<std::uint64_t> xs;
    Natural value;
};
Natural cyclic_power_sum(const std::vector<std::uint64_t>& xs);  // x1^x2 + ... + xn^x1
// 2 <= x_i <= bound, gcd of the tuple 1, one rotation per cycle (n = 2: x < y).
std::vector<ExpressionHit> expression_prime_search(unsigned n, std::uint64_t bound);

struct CharacterizationGroup {
    std::vector<Natural> members;  // pairwise coprime, each >= 2
    std::optional<Natural> c;      // witness; built from Wilson when absent
    Natural a = 1;
};
struct CharacterizationResult {
    bool condition_e = false;
    bool direct = false;  // every member prime
};
// Wilson witness for a tuple: sum_j ((p_j - 1)! + 1) * P / p_j, with P the product.
Natural wilson_witness(const std::vector<Natural>& members);
CharacterizationResult simultaneous_prime_check(const std::vector<CharacterizationGroup>& groups);

struct PartialProduct {
    Rational product;
    double last_term_magnitude = 0;  // |1 / a(N)|
};
std::optional<std::function<Natural(std::uint64_t)>> series_from_name(const std::string& name);
PartialProduct infinite_product_partial(const std::function<Natural(std::uint64_t)>& a, std::uint64_t N);

struct GAddOnReport {
    std::vector<std::size_t> prime_ranks;
    std::vector<std::size_t> prime_digit_counts;  // same terms, by length
    std::vector<std::size_t> perfect_power_ranks;
};
Natural gadd_on(const BaseSeqSpec& g, std::size_t n);
GAddOnReport gadd_on_report(const BaseSeqSpec& g, std::size_t count, bool check_powers = false);

}  // namespace numwb
