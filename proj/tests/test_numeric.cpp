#include <doctest.h>

#include "numwb/numeric.hpp"

#include <random>

using namespace numwb;
using u64 = std::uint64_t;

namespace {

bool slow_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> slow_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("digits round trip in every base") {
    std::mt19937_64 rng(7);
    for (unsigned b = 2; b <= 16; ++b) {
        for (int i = 0; i < 50; ++i) {
            Natural n = rng() % 1000000007;
            CHECK(value_of(digits_of(n, b)) == n);
        }
    }
    CHECK(digits_of(0).str() == "0");
    CHECK(digits_of(255, 16).str() == "ff");
    CHECK(digits_of(5, 2).digits == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("parse and print naturals") {
    Natural big = parse_natural("123456789012345678901234567890");
    CHECK(to_string(big) == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_natural("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_natural(""), std::invalid_argument);
    CHECK(digit_count(0) == 1);
    CHECK(digit_count(pow10(20)) == 21);
    CHECK(concat(12, 345) == 12345);
    CHECK(concat(7, 0) == 70);
}

TEST_CASE("primality agrees with trial division") {
    for (u64 n = 0; n < 20000; ++n) {
        CHECK(is_prime_u64(n) == slow_prime(n));
        if (n % 97 == 0) CHECK(is_prime(Natural(n)) == slow_prime(n));
    }
    Natural m61 = ipow(2, 61) - 1, m67 = ipow(2, 67) - 1, m89 = ipow(2, 89) - 1;
    CHECK(is_prime(m61));
    CHECK_FALSE(is_prime(m67));  // 193707721 * 761838257287
    CHECK(is_prime(m89));
    CHECK_FALSE(is_prime(m89 * 3));
}

TEST_CASE("factorization multiplies back to n with prime factors") {
    for (u64 n = 2; n < 5000; ++n) {
        Natural prod = 1;
        for (auto [p, e] : factorize_u64(n)) {
            CHECK(slow_prime(p));
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
    Natural n = Natural(1000003) * 1000033 * 1000037;
    auto f = factorize(n);
    REQUIRE(f.size() == 3);
    CHECK(f[0].first == 1000003);
}

TEST_CASE("integer roots bracket n") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Natural n = Natural(rng()) * rng();
        for (unsigned m = 2; m <= 5; ++m) {
            Natural r = integer_root(n, m);
            CHECK(ipow(r, m) <= n);
            CHECK(ipow(r + 1, m) > n);
        }
    }
    CHECK(integer_root_u64(~0ULL, 2) == 4294967295ULL);
}

TEST_CASE("perfect powers match a brute-force table") {
    std::map<u64, std::pair<u64, unsigned>> table;
    for (u64 b = 2; b * b <= 5000; ++b) {
        u64 v = b * b;
        for (unsigned e = 2; v <= 5000; ++e, v *= b)
            if (!table.count(v)) table[v] = {b, e};
    }
    for (u64 n = 0; n <= 5000; ++n) {
        auto r = is_perfect_power(n);
        auto it = table.find(n);
        REQUIRE(r.has_value() == (it != table.end()));
        if (r) {
            CHECK(r->first == it->second.first);
            CHECK(r->second == it->second.second);
        }
    }
}

TEST_CASE("digit permutations drop leading zeros") {
    auto p = digit_permutations(100, false);
    CHECK(p == std::set<Natural>{1, 10, 100});
    auto q = digit_permutations(11, true);
    CHECK(q == std::set<Natural>{11});
    CHECK(digit_permutations(123, true).size() == 5);
}

TEST_CASE("divisor helpers against brute force") {
    for (u64 n = 1; n <= 600; ++n) {
        auto d = slow_divisors(n);
        CHECK(divisors(n) == d);
        Natural all = 1;
        for (auto x : d) all *= x;
        CHECK(divisor_product(n) == all);
        CHECK(proper_divisor_product(n) == all / n);
        u64 phi = 0;
        for (u64 k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        CHECK(euler_phi(n) == phi);
    }
}

TEST_CASE("prime lists") {
    auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    auto f = first_primes(10);
    CHECK(f.back() == 29);
    CHECK(next_prime(7) == 11);
    CHECK(next_prime(1) == 2);
    CHECK(powmod_u64(3, 200, 1000000007) == 136318165ULL);
}

TEST_CASE("digit sums and positions") {
    CHECK(digit_sum(Natural(99999)) == 45);
    CHECK(digit_position(Natural(1203), 2) == 2);
    CHECK(digit_position(Natural(1203), 5) == -1);
    CHECK(counter(1, Natural(1101)) == 3);
}
