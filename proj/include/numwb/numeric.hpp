#pragma once
// Arbitrary-precision helpers shared by everything else: digits, primality,
// factorization, roots, digit permutations and a few digit-pattern checks.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace numwb {

using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Most significant digit first. Zero is the single digit 0.
struct DigitString {
    unsigned base = 10;
    std::vector<unsigned> digits{0};

    std::string str() const;  // digits >= 10 are written as letters
    bool operator==(const DigitString&) const = default;
};

DigitString digits_of(const Natural& n, unsigned base = 10);
Natural value_of(const DigitString& d);

std::string to_string(const Natural& n);
Natural parse_natural(const std::string& s);  // throws std::invalid_argument

// Decimal digit count; 0 has one digit.
std::size_t digit_count(const Natural& n);
Natural concat(const Natural& a, const Natural& b);
Natural pow10(std::size_t k);
Natural ipow(const Natural& b, unsigned e);

bool is_prime_u64(std::uint64_t n);
// Deterministic below 2^64, Miller-Rabin with `rounds` fixed-seed bases above.
// Error bound for composites above 2^64 is at most 4^-rounds.
bool is_prime(const Natural& n, unsigned rounds = 40);

using FactorMap = std::vector<std::pair<Natural, unsigned>>;
using FactorMap64 = std::vector<std::pair<std::uint64_t, unsigned>>;

FactorMap factorize(const Natural& n);  // n >= 2
FactorMap64 factorize_u64(std::uint64_t n);  // n >= 2

// Largest r with r^m <= n.
Natural integer_root(const Natural& n, unsigned m);
std::uint64_t integer_root_u64(std::uint64_t n, unsigned m);

// Smallest base (so largest exponent), e.g. 64 -> (2, 6). None below 4.
std::optional<std::pair<Natural, unsigned>> is_perfect_power(const Natural& n);

// All values reachable by rearranging the decimal digits. Leading zeros are
// allowed and then dropped numerically (100 -> 001 = 1). "nontrivial" means a
// non-identity permutation of positions, so a repeated digit still lets the
// identity value through (11 -> 11).
std::set<Natural> digit_permutations(const Natural& n, bool nontrivial_only);

bool gsp_check(const Natural& n);  // n >= 10

struct GeneralizedPeriod {
    std::set<unsigned> digits;
    std::size_t groups = 0;
    std::size_t length = 0;
};
GeneralizedPeriod generalized_period(const Natural& n, unsigned base = 10);

// Highest power of ten whose digit is k, or -1.
int digit_position(const Natural& n, unsigned k);
std::size_t counter(unsigned digit, const Natural& b);

struct DivisorClass {
    bool simple = false;
    bool impotent = false;
};
Natural proper_divisor_product(std::uint64_t n);
Natural divisor_product(std::uint64_t n);
DivisorClass classify_by_proper_divisor_product(std::uint64_t n);

bool wrong_number_check(const Natural& n);

// Small prime helpers used across modules.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);
std::vector<std::uint64_t> first_primes(std::size_t count);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
std::vector<std::uint64_t> divisors(std::uint64_t n);  // sorted
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t digit_sum(const Natural& n);

}  // namespace numwb
