#pragma once
// The Smarandache function family and the other arithmetic functions:
// complements, residues, f-parts, iterated compositions, SK/SW/SNTP.

#include "numwb/numeric.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace numwb {

// Sorted primes up to a bound that grows on demand. Readers share a lock,
// growth takes it exclusively.
class PrimeTable {
public:
    static PrimeTable& shared();

    std::uint64_t nth(std::size_t n);  // 1-based: nth(1) == 2
    std::vector<std::uint64_t> up_to(std::uint64_t x);
    std::size_t pi(std::uint64_t x);  // number of primes <= x
    bool contains(std::uint64_t x);

private:
    void extend_to(std::uint64_t bound);
    void extend_count(std::size_t count);

    std::shared_mutex mu_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t bound_ = 1;
};

// Legendre: exponent of prime p in m!.
std::uint64_t legendre(std::uint64_t m, const Natural& p);

// Least m with p^k | m!. Throws if p is not prime.
Natural S_p(const Natural& p, std::uint64_t k);

// Least m with n | m!, S(1) = 1. The u64 overload is memoized.
std::uint64_t S(std::uint64_t n);
Natural S(const Natural& n);
std::uint64_t S_uncached(std::uint64_t n);
void clear_S_memo();
// Trusted values, e.g. read back from a cache file.
void preload_S_memo(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& values);
std::size_t S_memo_size();

// S_n(a): n = u^r reads as "k! multiple of u^(r*a)"; composite n takes the max.
Natural S_first_kind(std::uint64_t n, std::uint64_t a);
Natural S_second_kind(std::uint64_t k, std::uint64_t n);
// a_seq[i], b_seq[i] are the terms with index i + 1.
Natural S_third_kind(const std::vector<std::uint64_t>& a_seq, const std::vector<std::uint64_t>& b_seq,
                     std::uint64_t n);

std::uint64_t Z(std::uint64_t n);
Natural quotient(std::uint64_t n);
std::uint64_t double_factorial_df(std::uint64_t n);
Natural double_factorial(std::uint64_t m);
Natural double_factorial_complement(std::uint64_t n);

Natural power_complement(std::uint64_t n, unsigned m);
std::uint64_t prime_additive_complement(std::uint64_t n);
Natural m_power_residue(std::uint64_t n, unsigned m);
std::uint64_t exponent(const Natural& n, const Natural& p);

enum class FKind { primes, squares, cubes, factorials, custom };
enum class PartDir { inferior, superior };

struct FPartSpec {
    FKind f = FKind::primes;
    PartDir dir = PartDir::inferior;
    // custom: f(0), f(1), ... strictly increasing
    std::function<Natural(std::uint64_t)> custom;
};

Natural f_part(const FPartSpec& spec, double x);
double fractional_f_part(const FPartSpec& spec, double x);

// Least k >= k_min with law(x, k) in range(g). g is strictly increasing over
// 0, 1, 2, ... and law is increasing in k; throws once k passes the bound.
Natural smarandacheian_complement(const std::function<Natural(std::uint64_t)>& g,
                                  const std::function<Natural(const Natural&, const Natural&)>& law,
                                  const Natural& x, std::uint64_t k_min = 0, std::uint64_t bound = 1000000);

std::uint64_t SP(std::uint64_t n);
std::uint64_t ceil_k(std::uint64_t n, unsigned k);

std::optional<std::uint64_t> SK(std::uint64_t p, std::uint64_t bound = 100000);
std::optional<std::uint64_t> SW(std::uint64_t p, std::uint64_t bound = 100000);
std::optional<std::uint64_t> SNTP(std::uint64_t n, std::uint64_t search_bound = 10000);

Integer residual_L(const Integer& x, std::uint64_t m);

bool coprime_criterion(std::uint64_t a, std::uint64_t b);

struct EulerSplit {
    std::uint64_t m_s = 0;
    unsigned s = 0;
    bool verified = false;
};
EulerSplit generalized_euler(std::int64_t a, std::int64_t m);

enum class SelfMap { d, sigma, gd, pi, P, omega, custom };
enum class IterKind { SI1, SI2, SI3, F_g, f_g };

struct IterationSpec {
    SelfMap g = SelfMap::d;
    IterKind kind = IterKind::SI1;
    std::function<Natural(const Natural&)> custom;
};

Natural apply_self_map(const IterationSpec& spec, const Natural& x);
// SI2 / F_g need b (reach >= b), SI3 needs b (reach <= b). f_g counts until
// the value stops changing, the same as SI1.
std::uint64_t iterate(const IterationSpec& spec, const Natural& x, std::optional<Natural> b = std::nullopt,
                      std::uint64_t max_steps = 1000000);

int anti_prime(const Natural& n);
int anti_coprime(const std::vector<Natural>& values, std::size_t k);

enum class SRatio { S1, S2, S3, Fs, Theta, ThetaBar };
std::optional<SRatio> s_ratio_from_name(const std::string& name);
// S1..S3 are exact ratios; the sums come back with denominator 1.
Rational s_ratio_functions(SRatio which, std::uint64_t x);

std::uint64_t analogue_a(const Natural& n);
bool erdos_smarandache_test(std::uint64_t n);

enum class MetallicForm { n_plus_one, one_plus_n };  // x^2 - n x - 1, x^2 - x - n
struct MetallicMean {
    double root = 0;
    std::vector<std::pair<Natural, Natural>> convergents;  // p/q
};
MetallicMean metallic_mean(std::uint64_t n, MetallicForm form, std::size_t j = 10);

bool inequality_check(std::uint64_t n, std::uint64_t k);
bool divisibility_check(const Integer& a, std::uint64_t m);

enum class ProgKind { linear_prime, geometric, self_power_plus, self_power_minus };
struct ProgressionCount {
    std::size_t count = 0;
    std::vector<Integer> witnesses;
};
ProgressionCount prime_count_in_progression(ProgKind kind, std::int64_t a, std::int64_t b, std::uint64_t limit);

// Largest subset of {1..n} without an m-term arithmetic progression.
std::size_t cardinality_S(std::size_t n, std::size_t m, std::size_t max_n = 30);

// values[i] = f(i + 1). Returns the coprime pairs (a, b), a < b, a*b <= N,
// where f(ab) != max(f(a), f(b)).
std::vector<std::pair<std::uint64_t, std::uint64_t>> s_multiplicative_check(const std::vector<Natural>& values);

}  // namespace numwb
