#include <doctest.h>

#include "numwb/sieves.hpp"

#include <numeric>
#include <stdexcept>

using namespace numwb;
using u64 = std::uint64_t;
using V = std::vector<u64>;

namespace {

SieveKind kind(SieveKind::Tag t, u64 param = 0) {
    SieveKind k;
    k.tag = t;
    k.param = param;
    return k;
}

V survivors(SieveKind::Tag t, u64 limit, u64 param = 0) { return run_sieve(kind(t, param), limit).survivors; }

bool slow_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 max_exponent(u64 n) {
    u64 best = 0;
    for (u64 p = 2; p * p <= n; ++p) {
        u64 e = 0;
        while (n % p == 0) n /= p, ++e;
        best = std::max(best, e);
    }
    return n > 1 ? std::max<u64>(best, 1) : best;
}

bool perfect_power(u64 n) {
    for (u64 b = 2; b * b <= n; ++b)
        for (u64 v = b * b; v <= n; v *= b)
            if (v == n) return true;
    return false;
}

// Passes over the remaining list; pass k deletes every base^k-th element.
V power_passes(u64 base, u64 limit) {
    V v(limit);
    std::iota(v.begin(), v.end(), 1);
    for (u64 step = base; step <= v.size(); step *= base) {
        V keep;
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((i + 1) % step != 0) keep.push_back(v[i]);
        v = keep;
    }
    return v;
}

}  // namespace

TEST_CASE("published sieve prefixes") {
    CHECK(survivors(SieveKind::binary, 35) == V{1, 3, 5, 9, 11, 13, 17, 21, 25, 27, 29, 33, 35});
    CHECK(survivors(SieveKind::cube_free, 12) == V{2, 3, 4, 5, 6, 7, 9, 10, 11, 12});
    CHECK(survivors(SieveKind::consecutive, 21) == V{1, 3, 5, 9, 11, 17, 21});
    CHECK(survivors(SieveKind::odd_sieve, 33) == V{7, 13, 19, 23, 25, 31, 33});
}

TEST_CASE("binary and trinary sieves match pass-by-pass simulation") {
    CHECK(survivors(SieveKind::binary, 5000) == power_passes(2, 5000));
    CHECK(survivors(SieveKind::trinary, 5000) == power_passes(3, 5000));
    CHECK(survivors(SieveKind::n_ary, 3000, 5) == power_passes(5, 3000));
}

TEST_CASE("value sieves agree with their predicates and with factorization") {
    const u64 N = 10000;
    for (auto t : {SieveKind::cube_free, SieveKind::square_free, SieveKind::irrational_root, SieveKind::odd_sieve}) {
        auto run = survivors(t, N);
        V filtered;
        for (u64 n = 1; n <= N; ++n)
            if (survivor_predicate(kind(t), n)) filtered.push_back(n);
        CHECK(run == filtered);
    }
    for (u64 n = 2; n <= 3000; ++n) {
        CHECK(survivor_predicate(kind(SieveKind::cube_free), n) == (max_exponent(n) < 3));
        CHECK(survivor_predicate(kind(SieveKind::m_power_free, 4), n) == (max_exponent(n) < 4));
        CHECK(survivor_predicate(kind(SieveKind::irrational_root), n) == !perfect_power(n));
        if (n % 2 == 1) CHECK(survivor_predicate(kind(SieveKind::odd_sieve), n) == !slow_prime(n + 2));
    }
    CHECK_FALSE(survivor_predicate(kind(SieveKind::cube_free), 8));
    CHECK_FALSE(survivor_predicate(kind(SieveKind::irrational_root), 64));
    CHECK(survivor_predicate(kind(SieveKind::odd_sieve), 25));
    CHECK_THROWS_AS(survivor_predicate(kind(SieveKind::binary), 5), std::invalid_argument);
}

TEST_CASE("more general sieve with unit offsets is the general sieve") {
    SieveKind g = kind(SieveKind::general);
    g.u = {3, 5, 7, 11};
    SieveKind m = kind(SieveKind::more_general);
    m.u = g.u;
    m.v = {1, 1, 1, 1};
    CHECK(run_sieve(g, 2000).survivors == run_sieve(m, 2000).survivors);
}

TEST_CASE("malformed generators are rejected") {
    SieveKind g = kind(SieveKind::general);
    g.u = {3, 3};
    CHECK_THROWS(run_sieve(g, 100));
    g.u = {1, 4};
    CHECK_THROWS(run_sieve(g, 100));
    SieveKind m = kind(SieveKind::more_general);
    m.u = {3, 5};
    m.v = {3, 1};
    CHECK_THROWS(run_sieve(m, 100));
}

TEST_CASE("random sieve") {
    SieveKind r = kind(SieveKind::random);
    r.choices = {6, 19, 35};
    // 35 deletes the multiples of 5 and 7, so 5, 7 and 25 are gone
    auto fixed = run_sieve(r, 40);
    CHECK(fixed.chosen == V{6, 19, 35, 37});
    CHECK(fixed.survivors == V{1, 6, 11, 13, 17, 19, 23, 29, 31, 35, 37});
    for (u64 seed : {1, 2, 3, 42, 2024}) {
        SieveKind s = kind(SieveKind::random);
        s.seed = seed;
        auto a = run_sieve(s, 10000), b = run_sieve(s, 10000);
        CHECK(a.survivors == b.survivors);
        CHECK(a.chosen == b.chosen);
        // the chosen u_k are coprime two by two; skipped survivors need not be
        const auto& v = a.chosen;
        bool coprime = true;
        for (std::size_t i = 0; i < v.size() && coprime; ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (std::gcd(v[i], v[j]) != 1) {
                    coprime = false;
                    break;
                }
        CHECK(coprime);
    }
}

TEST_CASE("survivors stay sorted and bounded") {
    for (auto& name : sieve_tag_names()) {
        auto t = *sieve_tag_from_name(name);
        SieveKind k = kind(t, t == SieveKind::m_power_free ? 3 : t == SieveKind::n_ary ? 4 : 0);
        if (t == SieveKind::general || t == SieveKind::more_general) {
            k.u = {3, 5};
            k.v = {1, 2};
        }
        auto s = run_sieve(k, 500).survivors;
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        if (!s.empty()) CHECK(s.back() <= 500);
    }
}

TEST_CASE("k-ary consecutive sieve keeps k and skips k + 1") {
    V expect;
    u64 x = 1;
    for (u64 k = 2; x <= 3000; ++k) {
        for (u64 i = 0; i < k; ++i, ++x)
            if (x <= 3000) expect.push_back(x);
        x += k + 1;
    }
    CHECK(survivors(SieveKind::k_ary_consecutive, 3000) == expect);
    CHECK(survivors(SieveKind::k_ary_consecutive, 16) == V{1, 2, 6, 7, 8, 13, 14, 15, 16});
}
