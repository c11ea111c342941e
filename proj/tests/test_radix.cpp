#include <doctest.h>

#include "numwb/radix.hpp"

#include <random>

using namespace numwb;
using u64 = std::uint64_t;
using std::int64_t;

namespace {

std::vector<GeneralizedBase> all_bases() {
    return {GeneralizedBase::primes(),      GeneralizedBase::squares(),           GeneralizedBase::m_powers(3),
            GeneralizedBase::factorials(),  GeneralizedBase::double_factorials(), GeneralizedBase::triangulars(),
            GeneralizedBase::geometric_base(3)};
}

// Greedy expansion over an explicitly listed scale.
std::vector<u64> greedy(u64 a, const std::vector<u64>& scale) {
    std::vector<u64> d(scale.size(), 0);
    for (std::size_t i = scale.size(); i-- > 0;) {
        d[i] = a / scale[i];
        a %= scale[i];
    }
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
}

std::vector<u64> as_u64(const RadixNumeral& x) {
    std::vector<u64> out;
    for (auto& d : x.digits) out.push_back(static_cast<u64>(d));
    return out;
}

Integer fold_oracle(int64_t n, int64_t k, int64_t bound, int mode) {
    Integer acc = mode == 0 ? 1 : 0;
    for (int64_t i = 0;; ++i) {
        int64_t f = n - k * i;
        if (f < -bound) break;
        if (f == 0 || f > bound) continue;
        if (mode == 0) acc *= f;
        if (mode == 1) acc += f;
        if (mode == 2) acc += f < 0 ? -f : f;
    }
    return acc;
}

}  // namespace

TEST_CASE("encode and decode round trip in every base") {
    for (auto& b : all_bases()) {
        for (u64 a = 0; a <= 3000; ++a) CHECK(decode(encode(a, b), b) == a);
        for (std::size_t i = 0; i < 8; ++i) CHECK(b.scale(i) < b.scale(i + 1));
    }
    std::mt19937_64 rng(5);
    auto f = GeneralizedBase::factorials();
    for (int i = 0; i < 100; ++i) {
        Natural a = Natural(rng()) * rng();
        CHECK(decode(encode(a, f), f) == a);
    }
}

TEST_CASE("encode is the greedy expansion over the scale") {
    std::vector<u64> primes{1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::vector<u64> fact{1, 2, 6, 24, 120, 720, 5040};
    std::vector<u64> tri{1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105};
    std::vector<u64> squares;
    for (u64 i = 1; i <= 12; ++i) squares.push_back(i * i);
    for (u64 a = 1; a < 79; ++a) {
        CHECK(as_u64(encode(a, GeneralizedBase::primes())) == greedy(a, primes));
        CHECK(as_u64(encode(a, GeneralizedBase::factorials())) == greedy(a, fact));
        CHECK(as_u64(encode(a, GeneralizedBase::triangulars())) == greedy(a, tri));
        CHECK(as_u64(encode(a, GeneralizedBase::squares())) == greedy(a, squares));
    }
}

TEST_CASE("published codec examples") {
    CHECK(encode(4, GeneralizedBase::primes()).str() == "101");
    CHECK(encode(6, GeneralizedBase::factorials()).str() == "100");
    CHECK(encode(3, GeneralizedBase::triangulars()).str() == "10");
    CHECK(encode(23, GeneralizedBase::factorials()).str() == "321");
    CHECK(decode(parse_numeral("101"), GeneralizedBase::primes()) == 4);
    CHECK(decode(parse_numeral("100"), GeneralizedBase::squares()) == 9);
    CHECK(decode(parse_numeral("0"), GeneralizedBase::triangulars()) == 0);
    CHECK(encode(1500, GeneralizedBase::factorials()).str() == "202200");
}

TEST_CASE("digit bounds are enforced on decode") {
    // factorial position 0 allows digit 1 at most
    CHECK_THROWS(decode(parse_numeral("2"), GeneralizedBase::factorials()));
    CHECK_THROWS(GeneralizedBase::custom_list({2, 3}));
    CHECK_THROWS(GeneralizedBase::custom_list({1, 3, 3}));
    auto c = GeneralizedBase::custom_list({1, 4, 10});
    CHECK(encode(13, c).str() == "103");
    CHECK(parse_numeral("1[12]0").digits == std::vector<Natural>{0, 12, 1});
}

TEST_CASE("superior part summands add up greedily") {
    CHECK(superior_part_summands(10, GeneralizedBase::primes()) == std::vector<Natural>{7, 3});
    CHECK(superior_part_summands(9, GeneralizedBase::squares()) == std::vector<Natural>{9});
    CHECK(superior_part_summands(23, GeneralizedBase::factorials()) == std::vector<Natural>{6, 6, 6, 2, 2, 1});
    for (u64 a = 1; a <= 500; ++a) {
        auto s = superior_part_summands(a, GeneralizedBase::triangulars());
        Natural sum = 0;
        for (auto& x : s) sum += x;
        CHECK(sum == a);
        CHECK(std::is_sorted(s.rbegin(), s.rend()));
    }
}

TEST_CASE("factorial base arithmetic agrees with integer arithmetic") {
    auto f = GeneralizedBase::factorials();
    CHECK(factorial_add(parse_numeral("210"), parse_numeral("221")).str() == "1101");
    CHECK(factorial_sub(parse_numeral("1001"), parse_numeral("320")).str() == "11");
    CHECK(factorial_add(parse_numeral("321"), parse_numeral("0")).str() == "321");
    for (u64 x = 0; x <= 400; x += 7)
        for (u64 y = 0; y <= 400; y += 11) {
            CHECK(decode(factorial_add(encode(x, f), encode(y, f)), f) == x + y);
            if (x >= y)
                CHECK(decode(factorial_sub(encode(x, f), encode(y, f)), f) == x - y);
            else
                CHECK_THROWS(factorial_sub(encode(x, f), encode(y, f)));
        }
}

TEST_CASE("Romanian multiplication") {
    auto r = romanian_multiply(73, 97, 3);
    CHECK(r.product == 7081);
    std::vector<Natural> partials;
    for (auto& row : r.table.rows) partials.push_back(row.p);
    CHECK(partials == std::vector<Natural>{73, 438, 657, 0, 5913});
    auto r5 = romanian_multiply(73, 97, 5);
    std::vector<Natural> p5;
    for (auto& row : r5.table.rows)
        if (row.p != 0) p5.push_back(row.p);
    CHECK(p5 == std::vector<Natural>{146, 1460, 5475});
    CHECK(romanian_multiply(41, 1, 4).product == 41);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Natural a = rng() % 100000, b = rng() % 100000 + 1;
        unsigned k = 2 + rng() % 9;
        auto m = romanian_multiply(a, b, k);
        CHECK(m.product == a * b);
        CHECK(m.table.total == a * b);
    }
    auto text = r.table.render(false, 3);
    CHECK(text.find("total 7081") != std::string::npos);
    CHECK(text.find(" A |") != std::string::npos);
}

TEST_CASE("division by k^n") {
    auto d = divide_by_power(1357, 2, 7);
    CHECK(d.quotient == 10);
    CHECK(d.remainder == 77);
    auto e = divide_by_power(19495, 3, 8);
    CHECK(e.quotient == 2);
    CHECK(e.remainder == 6373);
    auto z = divide_by_power(5, 2, 7);
    CHECK(z.quotient == 0);
    CHECK(z.remainder == 5);
    for (u64 a = 0; a < 3000; a += 13)
        for (unsigned k = 2; k <= 5; ++k)
            for (unsigned n = 1; n <= 6; ++n) {
                u64 kn = 1;
                for (unsigned i = 0; i < n; ++i) kn *= k;
                auto r = divide_by_power(a, k, n);
                CHECK(r.quotient == a / kn);
                CHECK(r.remainder == a % kn);
            }
}

TEST_CASE("Smarandacheials and summants against direct index sets") {
    CHECK(smarandacheial({7, 3, std::nullopt, FoldMode::product}) == 280);
    CHECK(smarandacheial({7, 2, 9, FoldMode::product}) == -99225);
    CHECK(smarandacheial({3, 2, std::nullopt, FoldMode::product}) == 9);
    CHECK(summant({7, 3, std::nullopt, FoldMode::signed_sum}) == 5);
    CHECK(summant({7, 3, std::nullopt, FoldMode::absolute_sum}) == 19);
    CHECK(summant({9, 4, std::nullopt, FoldMode::signed_sum}) == 5);
    CHECK(summant({9, 4, std::nullopt, FoldMode::absolute_sum}) == 25);
    CHECK_THROWS(smarandacheial({3, 3, std::nullopt, FoldMode::product}));
    for (int64_t n = 2; n <= 30; ++n)
        for (int64_t k = 1; k < std::min<int64_t>(n, 7); ++k) {
            CHECK(smarandacheial({n, k, std::nullopt, FoldMode::product}) == fold_oracle(n, k, n, 0));
            CHECK(summant({n, k, std::nullopt, FoldMode::signed_sum}) == fold_oracle(n, k, n, 1));
            CHECK(summant({n, k, std::nullopt, FoldMode::absolute_sum}) == fold_oracle(n, k, n, 2));
            CHECK(smarandacheial({n, k, n + 3, FoldMode::product}) == fold_oracle(n, k, n + 3, 0));
        }
}

TEST_CASE("extended summant runs i up to (n + m) / k") {
    for (int64_t n = 2; n <= 15; ++n)
        for (int64_t k = 1; k < std::min<int64_t>(n, 5); ++k)
            for (int64_t m = 0; m <= 10; ++m) {
                Integer s = 0, a = 0;
                for (int64_t i = 0; i <= (n + m) / k; ++i) {
                    s += n - k * i;
                    a += std::abs(n - k * i);
                }
                CHECK(summant({n, k, m, FoldMode::signed_sum}) == s);
                CHECK(summant({n, k, m, FoldMode::absolute_sum}) == a);
            }
}
