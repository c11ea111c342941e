#include <doctest.h>

#include "numwb/arith.hpp"

#include <cmath>
#include <future>
#include <numeric>

using namespace numwb;
using u64 = std::uint64_t;

namespace {

// least m with n | m!, by running m! mod n
u64 slow_S(u64 n) {
    if (n == 1) return 1;
    u64 f = 1;
    for (u64 m = 1;; ++m) {
        f = f * m % n;
        if (f == 0) return m;
    }
}

u64 slow_Z(u64 n) {
    for (u64 m = 1;; ++m)
        if ((m * (m + 1) / 2) % n == 0) return m;
}

bool slow_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_mth_power(u64 v, unsigned m) {
    u64 r = static_cast<u64>(std::llround(std::pow(static_cast<double>(v), 1.0 / m)));
    for (u64 c = r > 2 ? r - 2 : 0; c <= r + 2; ++c) {
        u64 p = 1;
        for (unsigned i = 0; i < m; ++i) p *= c;
        if (p == v) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("S matches the running factorial residue") {
    clear_S_memo();
    for (u64 n = 1; n <= 3000; ++n) {
        CHECK(S(n) == slow_S(n));
        CHECK(S_uncached(n) == slow_S(n));
    }
    CHECK(S(Natural(3000)) == slow_S(3000));
    CHECK(S(6) == 3);
    CHECK(S(8) == 4);
    CHECK(S(25) == 10);
}

TEST_CASE("S is consistent when computed from many threads") {
    clear_S_memo();
    std::vector<std::future<std::vector<u64>>> jobs;
    for (int w = 0; w < 8; ++w)
        jobs.push_back(std::async(std::launch::async, [] {
            std::vector<u64> v;
            for (u64 n = 1; n <= 4000; ++n) v.push_back(S(n));
            return v;
        }));
    auto first = jobs[0].get();
    for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get() == first);
    for (u64 n = 1; n <= 4000; n += 37) CHECK(first[n - 1] == slow_S(n));
}

TEST_CASE("preloaded S values are served from the memo") {
    clear_S_memo();
    CHECK(S_memo_size() == 0);
    preload_S_memo({{10, 5}, {11, 11}});
    CHECK(S_memo_size() >= 2);
    CHECK(S(10) == 5);
    clear_S_memo();
}

TEST_CASE("S_p and Legendre against direct counts") {
    for (u64 p : {2, 3, 5, 7}) {
        for (u64 m = 1; m <= 200; ++m) {
            u64 e = 0;
            for (u64 i = 1; i <= m; ++i)
                for (u64 x = i; x % p == 0; x /= p) ++e;
            CHECK(legendre(m, p) == e);
        }
        for (u64 k = 1; k <= 40; ++k) {
            u64 m = 1;
            while (legendre(m, p) < k) ++m;
            CHECK(S_p(p, k) == m);
        }
    }
    CHECK(S_p(2, 4) == 6);
    CHECK(S_p(3, 4) == 9);
    CHECK(S_p(2, 1) == 2);
    CHECK_THROWS(S_p(4, 2));
}

TEST_CASE("Z against triangular numbers") {
    for (u64 n = 1; n <= 2000; ++n) CHECK(Z(n) == slow_Z(n));
    CHECK(Z(6) == 3);
    CHECK(Z(7) == 6);
}

TEST_CASE("complements and residues by brute force") {
    for (u64 n = 1; n <= 300; ++n) {
        CHECK(quotient(n) * n == [&] {
            Natural f = 1;
            for (u64 i = 2; i <= slow_S(n); ++i) f *= i;
            return f;
        }());
        for (unsigned m : {2u, 3u}) {
            u64 k = 1;
            while (!is_mth_power(n * k, m)) ++k;
            CHECK(power_complement(n, m) == k);
        }
        u64 k = 0;
        while (!slow_prime(n + k)) ++k;
        CHECK(prime_additive_complement(n) == k);
        u64 df = 1;
        Natural dfact = 1;
        for (;; ++df) {
            dfact = double_factorial(df);
            if (dfact % n == 0) break;
        }
        CHECK(double_factorial_df(n) == df);
    }
    CHECK(quotient(7) == 720);
    CHECK(quotient(10) == 12);
    CHECK(double_factorial_df(8) == 4);
    CHECK(double_factorial_complement(5) == 3);
    CHECK(power_complement(8, 2) == 2);
    CHECK(power_complement(4, 3) == 2);
    CHECK(prime_additive_complement(8) == 3);
}

TEST_CASE("m-power residues and exponents") {
    auto residue = [](u64 n, unsigned m) {
        Natural r = 1;
        for (u64 p = 2; p <= n; ++p) {
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            for (unsigned i = 0; i < std::min(e, m - 1); ++i) r *= p;
        }
        return r;
    };
    for (u64 n = 1; n <= 500; ++n) {
        CHECK(m_power_residue(n, 2) == residue(n, 2));
        CHECK(m_power_residue(n, 3) == residue(n, 3));
        u64 e = 0;
        for (u64 x = n; x % 2 == 0; x /= 2) ++e;
        CHECK(exponent(n, 2) == e);
    }
    CHECK(m_power_residue(8, 2) == 2);
    CHECK(m_power_residue(8, 3) == 4);
}

TEST_CASE("f-parts") {
    CHECK(f_part({FKind::primes, PartDir::inferior, {}}, 10) == 7);
    CHECK(f_part({FKind::primes, PartDir::superior, {}}, 10) == 11);
    FPartSpec sq{FKind::squares, PartDir::inferior, {}};
    CHECK(f_part(sq, 12.501) == 9);
    CHECK(fractional_f_part(sq, 12.501) == doctest::Approx(3.501));
}

TEST_CASE("smarandacheian complements") {
    auto squares = [](u64 i) { return Natural(i) * i; };
    auto cubes = [](u64 i) { return Natural(i) * i * i; };
    auto mul = [](const Natural& a, const Natural& b) { return a * b; };
    auto add = [](const Natural& a, const Natural& b) { return a + b; };
    CHECK(smarandacheian_complement(squares, mul, 8, 1) == 2);
    CHECK(smarandacheian_complement(cubes, mul, 1, 1) == 1);
    auto primes = [](u64 i) { return Natural(PrimeTable::shared().nth(i + 1)); };
    CHECK(smarandacheian_complement(primes, add, 8, 0) == 3);
    auto never = [](u64 i) { return Natural(2 * i + 1); };
    CHECK_THROWS(smarandacheian_complement(never, mul, 2, 1, 1000));
}

TEST_CASE("SP and ceil_k by brute force") {
    for (u64 n = 1; n <= 400; ++n) {
        for (unsigned k : {2u, 3u, 4u}) {
            u64 m = 1;
            while (true) {
                u64 p = 1;
                bool ok = false;
                for (unsigned i = 0; i < k; ++i) p = p * m % n;
                ok = p % n == 0;
                if (ok) break;
                ++m;
            }
            CHECK(ceil_k(n, k) == m);
        }
    }
    CHECK(SP(8) == 4);
    CHECK(ceil_k(8, 2) == 4);
    CHECK(ceil_k(8, 3) == 2);
}

TEST_CASE("SK, SW and SNTP") {
    CHECK(SK(17) == 5u);
    CHECK(SW(11) == 4u);
    CHECK_FALSE(SW(2).has_value());
    CHECK(SNTP(5) == 3u);
    CHECK(SNTP(6) == 3u);
    CHECK(SNTP(7) == 3u);
    CHECK_FALSE(SNTP(9, 10000).has_value());
    // SK by direct left factorial sums
    for (u64 p : {3, 5, 7, 11, 13, 19, 23}) {
        auto r = SK(p);
        u64 sum = 0, f = 1;
        std::optional<u64> m;
        for (u64 i = 0; i < 200 && !m; ++i) {
            sum = (sum + f) % p;  // adds i!
            f = f * (i + 1) % p;
            if (sum == 0) m = i + 1;
        }
        CHECK(r == m);
    }
}

TEST_CASE("residual products") {
    CHECK(residual_L(0, 7) == 720);
    CHECK(residual_L(0, 9) == 2240);
    CHECK(residual_L(0, 10) == 189);
    // at x = 0 the product runs over the residues coprime to m
    for (u64 m = 2; m <= 30; ++m) {
        Integer prod = 1;
        for (u64 k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) prod *= k;
        CHECK(residual_L(0, m) == prod);
    }
}

TEST_CASE("coprime criterion and generalized Euler") {
    CHECK(coprime_criterion(2, 3));
    CHECK(coprime_criterion(4, 9));
    auto e = generalized_euler(2, 12);
    CHECK(e.verified);
    CHECK(powmod_u64(2, euler_phi(e.m_s) + e.s, 12) == powmod_u64(2, e.s, 12));
}

TEST_CASE("iterated self maps") {
    CHECK(iterate({SelfMap::d, IterKind::SI1, {}}, 6) == 3);
    CHECK(iterate({SelfMap::sigma, IterKind::SI2, {}}, 4, Natural(11)) == 3);
    CHECK(iterate({SelfMap::gd, IterKind::SI3, {}}, 60, Natural(3)) == 4);
}

TEST_CASE("anti functions, ratios and tests") {
    CHECK(anti_prime(7) == 0);
    CHECK(anti_prime(4) == 1);
    CHECK(anti_coprime({4, 9}, 2) == 0);
    CHECK(s_ratio_functions(SRatio::S2, 6) == Rational(1, 2));
    CHECK(analogue_a(25) == 5);
    CHECK(erdos_smarandache_test(6));
    CHECK_FALSE(erdos_smarandache_test(8));
}

TEST_CASE("metallic means") {
    CHECK(metallic_mean(1, MetallicForm::n_plus_one).root == doctest::Approx(1.6180339887));
    CHECK(metallic_mean(2, MetallicForm::n_plus_one).root == doctest::Approx(2.4142135624));
    CHECK(metallic_mean(2, MetallicForm::one_plus_n).root == doctest::Approx(2.0));
    auto golden = metallic_mean(1, MetallicForm::n_plus_one, 10);
    for (auto& [p, q] : golden.convergents) {
        // consecutive Fibonacci numbers satisfy p^2 - pq - q^2 = +-1
        Integer d = Integer(p) * p - Integer(p) * q - Integer(q) * q;
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("divisibility and inequality checks") {
    CHECK(divisibility_check(2, 4));
    CHECK(divisibility_check(3, 6));
    CHECK(inequality_check(7, 2));
}

TEST_CASE("primes in progressions") {
    auto self = prime_count_in_progression(ProgKind::self_power_plus, 0, 0, 4);
    CHECK(self.witnesses == std::vector<Integer>{2, 5, 257});
    auto lin = prime_count_in_progression(ProgKind::linear_prime, 1, 0, 5);
    CHECK(lin.count == 5);
    auto geo = prime_count_in_progression(ProgKind::geometric, 2, 1, 5);
    CHECK(geo.count == 3);  // 3, 5, 17 among 3, 5, 9, 17, 33
}

TEST_CASE("progression-free cardinalities by exhaustive subsets") {
    auto brute = [](std::size_t n) {
        std::size_t best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t d = 1; a + 2 * d < n && ok; ++d)
                    if ((mask >> a & 1) && (mask >> (a + d) & 1) && (mask >> (a + 2 * d) & 1)) ok = false;
            if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
        }
        return best;
    };
    for (std::size_t n = 1; n <= 14; ++n) CHECK(cardinality_S(n, 3) == brute(n));
    CHECK(cardinality_S(4, 3) == 3);
    CHECK(cardinality_S(5, 3) == 4);
}

TEST_CASE("S-multiplicativity") {
    std::vector<Natural> s, id, one(50, 1);
    for (u64 n = 1; n <= 100; ++n) s.push_back(S(n));
    for (u64 n = 1; n <= 20; ++n) id.push_back(n);
    CHECK(s_multiplicative_check(s).empty());
    CHECK_FALSE(s_multiplicative_check(id).empty());
    CHECK(s_multiplicative_check(one).empty());
}
