#include <doctest.h>

#include "numwb/arith.hpp"
#include "numwb/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace numwb;
using u64 = std::uint64_t;
using V = std::vector<u64>;

namespace {

u64 slow_S(u64 n) {
    if (n == 1) return 1;
    u64 f = 1;
    for (u64 m = 1;; ++m) {
        f = f * m % n;
        if (f == 0) return m;
    }
}

bool slow_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

V odd_primes(std::size_t count) {
    V out;
    for (u64 n = 3; out.size() < count; n += 2)
        if (slow_prime(n)) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("Goldbach and Vinogradov counts") {
    V t, v;
    for (std::size_t n = 1; n <= 5; ++n) t.push_back(goldbach_t(n)), v.push_back(vinogradov_v(n));
    CHECK(t == V{6, 10, 14, 18, 26});
    CHECK(v == V{9, 15, 21, 29, 39});
    auto ps = odd_primes(20);
    for (std::size_t n = 1; n <= 14; ++n) {
        CHECK(goldbach_t(n) <= 2 * ps[n - 1]);
        CHECK(vinogradov_v(n) <= 3 * ps[n - 1]);
        if (n > 1) CHECK(goldbach_t(n) >= goldbach_t(n - 1));
        if (n > 1) CHECK(vinogradov_v(n) >= vinogradov_v(n - 1));
    }
    auto table = goldbach_table(15);
    auto row = std::find(table.row_labels.begin(), table.row_labels.end(), 3u) - table.row_labels.begin();
    auto col = std::find(table.col_labels.begin(), table.col_labels.end(), 47u) - table.col_labels.begin();
    REQUIRE(row < static_cast<long>(table.row_labels.size()));
    REQUIRE(col < static_cast<long>(table.col_labels.size()));
    CHECK(table.cells[row][col] == 50);
}

TEST_CASE("Vinogradov a(m): ordered first prime, unordered pair") {
    auto ps = odd_primes(200);
    for (u64 m = 1; m <= 301; m += 2) {
        u64 count = 0;
        for (u64 p : ps)
            for (std::size_t j = 0; j < ps.size(); ++j)
                for (std::size_t k = j; k < ps.size(); ++k)
                    if (p + ps[j] + ps[k] == m) ++count;
        CHECK(vinogradov_a(m) == count);
    }
    CHECK(vinogradov_a(9) == 1);
    CHECK(vinogradov_a(11) == 2);
    CHECK(vinogradov_a(13) == 4);
}

TEST_CASE("product sequences") {
    auto p4 = product_sequence(ProductKind::prime, 4);
    CHECK(p4.value == 211);
    CHECK(p4.prime);
    CHECK(product_sequence(ProductKind::square, 5).value == 14401);
    auto f4 = product_sequence(ProductKind::factorial, 4);
    CHECK(f4.value == 289);
    CHECK_FALSE(f4.prime);
    auto c = product_sequence(ProductKind::custom, 3, [](u64 k) { return Natural(k + 1); });
    CHECK(c.value == 25);
}

TEST_CASE("recurrence sets") {
    RecurrenceSetSpec ss2;
    auto a = recurrence_set(ss2, 1000);
    CHECK(V(a.begin(), a.begin() + 6) == V{1, 2, 5, 26, 29, 677});
    RecurrenceSetSpec cs2;
    cs2.relation = Relation::sum_of_cubes;
    auto e = recurrence_set(cs2, 1000);
    CHECK(e == V{1, 2, 9, 730, 737});
    // closure: every pair combination up to the limit is a member
    for (auto* set : {&a, &e}) {
        std::set<u64> s(set->begin(), set->end());
        bool cubes = set == &e;
        for (std::size_t i = 0; i < set->size(); ++i)
            for (std::size_t j = i + 1; j < set->size(); ++j) {
                u64 x = (*set)[i], y = (*set)[j];
                u64 v = cubes ? x * x * x + y * y * y : x * x + y * y;
                if (v <= 1000) CHECK(s.count(v));
            }
    }
    RecurrenceSetSpec nss2;
    nss2.polarity = Polarity::negative;
    auto c = recurrence_set(nss2, 11);
    CHECK(c == V{1, 2, 3, 4, 6, 7, 8, 9, 11});
}

TEST_CASE("progression avoiders") {
    auto ap = progression_avoider(ProgressionKind::arithmetic, 3, {1, 2}, 65);
    CHECK(V(ap.begin(), ap.begin() + 9) == V{1, 2, 4, 5, 10, 11, 13, 14, 28});
    bool free = true;
    for (std::size_t i = 0; i < ap.size(); ++i)
        for (std::size_t j = i + 1; j < ap.size(); ++j)
            for (std::size_t k = j + 1; k < ap.size(); ++k)
                if (ap[j] - ap[i] == ap[k] - ap[j]) free = false;
    CHECK(free);
    // greedy: every skipped number would close a progression
    std::set<u64> in(ap.begin(), ap.end());
    for (u64 x = 3; x < ap.back(); ++x) {
        if (in.count(x)) continue;
        bool closes = false;
        for (u64 a : ap)
            if (a < x && 2 * a >= x && in.count(2 * a - x) && 2 * a - x < a) closes = true;
        CHECK(closes);
    }
    CHECK(progression_avoider(ProgressionKind::geometric, 3, {1, 2}, 8) == V{1, 2, 3, 5, 6, 7, 8, 10});
    CHECK(progression_avoider(ProgressionKind::arithmetic, 3, {0}, 1) == V{0});
}

TEST_CASE("multiplicative builders") {
    CHECK(multiplicative_builder(BuilderKind::multiplicative, 2, {2, 3}, 9) == V{2, 3, 6, 12, 18, 24, 36, 48, 54});
    CHECK(multiplicative_builder(BuilderKind::non_multiplicative, 2, {2, 3}, 3)[2] == 4);
}

TEST_CASE("relationship search finds S(k+1) + S(k+2) = S(k+3)") {
    auto f = [](u64 n) { return Integer(S(n)); };
    auto hits = relationship_search(f, 2, 1, Law::add, 1, 3000);
    V brute;
    for (u64 k = 0; k + 1 <= 3000; ++k)
        if (slow_S(k + 1) + slow_S(k + 2) == slow_S(k + 3)) brute.push_back(k);
    CHECK(hits == brute);
}

TEST_CASE("partial perfect additive sequence") {
    auto a = partial_perfect_additive(8);
    CHECK(a == std::vector<std::int64_t>{1, 1, 0, 2, -1, 1, 1, 3});
}

TEST_CASE("loops") {
    LoopSpec rs{LoopKind::reverse_subtract, 2, 0, {}};
    auto r = periodic_loop(rs, 52);
    CHECK(std::set<u64>(r.cycle.begin(), r.cycle.end()) == std::set<u64>{9, 81, 63, 27, 45});
    for (u64 n = 10; n <= 99; ++n) {
        if (n % 11 == 0) continue;
        auto rep = periodic_loop(rs, n);
        CHECK(rep.period == 5);
        // from any cycle member the map returns in exactly `period` steps
        u64 x = rep.cycle.front();
        for (std::size_t i = 0; i < rep.period; ++i) x = loop_step(rs, 2, x);
        CHECK(x == rep.cycle.front());
    }
    auto m = periodic_loop({LoopKind::multiplication, 0, 7, {}}, 68);
    CHECK(m.cycle == V{68, 26, 42, 84});
    CHECK(m.period == 4);
    auto s = periodic_loop({LoopKind::subtraction, 0, 7, {}}, 109);
    CHECK(s.period == 200);
    CHECK(s.tail + s.period == 286);
}

TEST_CASE("carpet closed form against the grid") {
    CHECK(carpet_C(3, 2) == 108);
    CHECK(carpet_C(8, 2) == 928);
    CHECK(carpet_C(5, 0) == 1);
    for (unsigned n = 1; n <= 8; ++n) {
        auto levels = carpet_levels(n);
        REQUIRE(levels.size() == n + 1);
        for (unsigned k = 0; k <= n; ++k) CHECK(levels[k] == carpet_C(n, k));
    }
}

TEST_CASE("magic squares") {
    CHECK(magic_square_check({{16, 3, 2, 13}, {5, 10, 11, 8}, {9, 6, 7, 12}, {4, 15, 14, 1}}));
    CHECK_FALSE(magic_square_check({{3, 16, 2, 13}, {5, 10, 11, 8}, {9, 6, 7, 12}, {4, 15, 14, 1}}));
    auto mi = magic_index(3);
    CHECK(mi.min_sum == 9);
    CHECK(mi.max_sum == 12);
    CHECK_THROWS(magic_index(4));
}

TEST_CASE("bad number witnesses satisfy their equations") {
    auto scan = bad_number_scan(14, 10000, 1000000);
    CHECK(scan.witnesses.at(12) == std::pair<u64, u64>{13, 47});
    CHECK(scan.witnesses.at(8) == std::pair<u64, u64>{1, 3});
    for (auto& [a, w] : scan.witnesses) {
        std::int64_t x3 = static_cast<std::int64_t>(w.first * w.first * w.first);
        std::int64_t y2 = static_cast<std::int64_t>(w.second * w.second);
        CHECK(static_cast<u64>(std::llabs(x3 - y2)) == a);
    }
    CHECK(std::find(scan.unrepresented.begin(), scan.unrepresented.end(), 5u) != scan.unrepresented.end());
}

TEST_CASE("prime conjecture representations") {
    for (auto& t : prime_conjecture_count(5, 60)) {
        CHECK(slow_prime(t.p));
        CHECK(slow_prime(t.q));
        CHECK(slow_prime(t.r));
        CHECK(t.p <= t.q);
        CHECK(static_cast<std::int64_t>(t.p + t.q) - static_cast<std::int64_t>(t.r) == 5);
    }
    CHECK_FALSE(prime_conjecture_count(5, 60).empty());
}

TEST_CASE("partitions into powers against dynamic programming") {
    CHECK(partition_count(9, 2) == 4);
    CHECK(partition_count(9, 3) == 2);
    CHECK(partition_count(1, 2) == 1);
    std::vector<Natural> ways(101, 0);
    ways[0] = 1;
    for (u64 b = 1; b * b <= 100; ++b)
        for (u64 s = b * b; s <= 100; ++s) ways[s] += ways[s - b * b];
    for (u64 n = 1; n <= 100; ++n) CHECK(partition_count(n, 2) == ways[n]);
}

TEST_CASE("triplets and duplets against a direct S table") {
    const u64 N = 6000;
    V s(N + 2);
    for (u64 n = 1; n <= N + 1; ++n) s[n] = slow_S(n);
    V trip, dup;
    for (u64 n = 4; n <= N; ++n)
        if (s[n] == s[n - 1] + s[n - 2]) trip.push_back(n);
    for (u64 n = 1; n <= N; ++n) {
        u64 a = std::min(s[n], s[n + 1]), b = std::max(s[n], s[n + 1]);
        bool none = true;
        for (u64 x = a; x <= b && none; ++x) none = !slow_prime(x);
        if (none) dup.push_back(n);
    }
    CHECK(triplet_search(N) == trip);
    CHECK(duplet_search(N) == dup);
    CHECK(V(trip.begin(), trip.begin() + 3) == V{11, 121, 4902});
    CHECK(V(dup.begin(), dup.begin() + 2) == V{224, 2057});
}

TEST_CASE("searches do not depend on the worker count or chunking") {
    auto one = triplet_search(70000, 1), many = triplet_search(70000, 7);
    CHECK(one == many);
    V chunked;
    for (u64 lo = 4; lo <= 70000; lo += 9999) {
        auto part = triplet_search(std::min<u64>(70000, lo + 9998), 3, lo);
        chunked.insert(chunked.end(), part.begin(), part.end());
    }
    CHECK(chunked == one);
    CHECK(duplet_search(5000, 1) == duplet_search(5000, 5));
}

TEST_CASE("cyclic expressions") {
    CHECK(cyclic_power_sum({2, 3}) == 17);
    CHECK(cyclic_power_sum({2, 3, 4}) == 8 + 81 + 16);
    for (auto& h : expression_prime_search(2, 30)) {
        REQUIRE(h.xs.size() == 2);
        CHECK(h.xs[0] < h.xs[1]);
        CHECK(std::gcd(h.xs[0], h.xs[1]) == 1);
        CHECK(h.value == cyclic_power_sum(h.xs));
        CHECK(is_prime(h.value));
    }
    auto hits = expression_prime_search(2, 10);
    CHECK(std::none_of(hits.begin(), hits.end(), [](const ExpressionHit& h) { return h.xs == V{2, 4}; }));
}

TEST_CASE("simultaneous primality via Wilson witnesses") {
    CHECK(wilson_witness({5}) == 25);
    CharacterizationGroup five{{5}, std::nullopt, 1};
    auto r = simultaneous_prime_check({five});
    CHECK(r.condition_e);
    CHECK(r.direct);
    CharacterizationGroup eight{{8}, std::nullopt, 1};
    CHECK_FALSE(simultaneous_prime_check({eight}).condition_e);
    CharacterizationGroup pair{{3, 5}, std::nullopt, 1};
    CHECK(simultaneous_prime_check({pair}).condition_e);
}

TEST_CASE("infinite product partials") {
    auto dp = series_from_name("divisor_products");
    REQUIRE(dp.has_value());
    auto a = infinite_product_partial(*dp, 3);
    CHECK(a.product == Rational(1, 6));
    CHECK(infinite_product_partial([](u64) { return Natural(1); }, 9).product == 1);
    auto two = infinite_product_partial([](u64 n) { return ipow(2, static_cast<unsigned>(n)); }, 10);
    CHECK(two.product == Rational(Natural(1), ipow(2, 55)));
    CHECK_FALSE(series_from_name("nope").has_value());
}

TEST_CASE("add-on sequences") {
    BaseSeqSpec odds{Source::odds, Direction::forward, {}};
    CHECK(gadd_on(odds, 2) == 13);
    CHECK(gadd_on(odds, 4) == 1357);
    auto rep = gadd_on_report(odds, 20);
    for (auto rank : rep.prime_ranks) CHECK(is_prime(gadd_on(odds, rank)));
    CHECK(std::find(rep.prime_ranks.begin(), rep.prime_ranks.end(), 2u) != rep.prime_ranks.end());
    // published by digit length: the rank 10 term has 15 digits
    CHECK(rep.prime_digit_counts == std::vector<std::size_t>{2, 15, 27});
    auto evens = gadd_on_report({Source::evens, Direction::forward, {}}, 50, true);
    CHECK(evens.perfect_power_ranks.empty());
}
