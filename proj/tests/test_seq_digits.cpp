#include <doctest.h>

#include "numwb/seq_digits.hpp"

#include <algorithm>

using namespace numwb;
using u64 = std::uint64_t;

namespace {

std::string t(Family f, u64 n) { return term(FamilySpec{f, 10, {}}, n).digits; }

std::string up_to(u64 n) {
    std::string s;
    for (u64 i = 1; i <= n; ++i) s += std::to_string(i);
    return s;
}

std::string down_from(u64 n) {
    std::string s;
    for (u64 i = n; i >= 1; --i) s += std::to_string(i);
    return s;
}

bool slow_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("concatenation families against direct construction") {
    for (u64 n = 1; n <= 25; ++n) {
        CHECK(t(Family::consecutive, n) == up_to(n));
        CHECK(t(Family::reverse, n) == down_from(n));
        CHECK(t(Family::anti_symmetric, n) == up_to(n) + up_to(n));
        std::string rep;
        for (u64 i = 0; i < n; ++i) rep += std::to_string(n);
        CHECK(t(Family::concatenated_natural, n) == rep);
        CHECK(t(Family::mirror, n) == down_from(n) + up_to(n).substr(1));
        std::string ones(n, '3');
        CHECK(t(Family::threes_ones_simple, n) == ones + "1");
    }
    // symmetric alternates between an odd and an even palindrome
    for (u64 k = 1; k <= 12; ++k) {
        std::string head = up_to(k), tail = down_from(k);
        CHECK(t(Family::symmetric, 2 * k - 1) == head + tail.substr(std::to_string(k).size()));
        CHECK(t(Family::symmetric, 2 * k) == head + tail);
    }
}

TEST_CASE("circular terms are the rotations of 1..k") {
    u64 n = 1;
    for (u64 k = 1; k <= 9; ++k) {
        std::string s = up_to(k);
        for (u64 r = 0; r < k; ++r, ++n) {
            CHECK(t(Family::circular, n) == s);
            std::rotate(s.begin(), s.begin() + 1, s.end());
        }
    }
}

TEST_CASE("unary terms are repunits of prime length") {
    u64 n = 0;
    for (u64 p = 2; n < 20; ++p) {
        if (!slow_prime(p)) continue;
        ++n;
        CHECK(t(Family::unary, n) == std::string(p, '1'));
    }
}

TEST_CASE("deconstructive groups cycle through 1..9") {
    std::string stream;
    for (int i = 0; i < 40; ++i) stream += "123456789";
    std::size_t at = 0;
    for (u64 n = 1; n <= 20; ++n) {
        CHECK(t(Family::deconstructive, n) == stream.substr(at, n));
        at += n;
    }
}

TEST_CASE("permutation terms: odds up, evens down") {
    for (u64 n = 1; n <= 15; ++n) {
        std::string s;
        for (u64 i = 1; i < 2 * n; i += 2) s += std::to_string(i);
        for (u64 i = 2 * n; i >= 2; i -= 2) s += std::to_string(i);
        CHECK(t(Family::permutation, n) == s);
    }
}

TEST_CASE("digit-stripping families leave gaps") {
    auto strip = [](u64 n, const std::string& bad) {
        std::string s;
        for (char c : std::to_string(n))
            if (bad.find(c) == std::string::npos) s += c;
        return s;
    };
    for (u64 n = 1; n <= 300; ++n) {
        CHECK(t(Family::no_prime_digit, n) == strip(n, "2357"));
        CHECK(t(Family::no_square_digit, n) == strip(n, "0149"));
    }
    CHECK(term(FamilySpec{Family::no_prime_digit, 10, {}}, 2).empty());
    CHECK(t(Family::no_prime_digit, 20) == "0");
}

TEST_CASE("family examples") {
    CHECK(t(Family::symmetric, 5) == "12321");
    CHECK(t(Family::circular, 5) == "231");
    CHECK(t(Family::pierced_chain, 2) == "1010101");
    CHECK(t(Family::permutation, 3) == "135642");
    CHECK(t(Family::code_puzzle, 1) == "151405");
    CHECK(english_words(21) == "twenty one");
    CHECK(family_from_name("symmetric") == Family::symmetric);
    CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("pierced chain terms divided by 101 are 1, 10001, ...") {
    for (u64 n = 1; n <= 10; ++n) {
        std::string s = "1";
        for (u64 i = 1; i < n; ++i) s += "0001";
        CHECK(term(FamilySpec{Family::pierced_chain, 10, {}}, n).value() == Natural(s) * 101);
    }
}

TEST_CASE("concatenated base sequences") {
    CHECK(concatenated_term({Source::odds, Direction::forward, {}}, 4) == 1357);
    CHECK(concatenated_term({Source::primes, Direction::backward, {}}, 3) == 532);
    CHECK(concatenated_term({Source::fibonacci, Direction::forward, {}}, 5) == 11235);
    BaseSeqSpec custom{Source::custom, Direction::forward, {4, 40}};
    CHECK(concatenated_term(custom, 2) == 440);
    CHECK_THROWS(concatenated_term(custom, 3));
}

TEST_CASE("constructive sets match a brute-force scan") {
    auto from = [](const std::string& digits, std::size_t count) {
        std::vector<Natural> out;
        for (u64 n = 1; out.size() < count; ++n) {
            auto s = std::to_string(n);
            if (std::all_of(s.begin(), s.end(), [&](char c) { return digits.find(c) != std::string::npos; }))
                out.push_back(n);
        }
        return out;
    };
    CHECK(constructive_terms({"1", "2"}, 30) == from("12", 30));
    CHECK(constructive_terms({"1", "2", "3"}, 40) == from("123", 40));
    CHECK(constructive_terms({"5"}, 3) == std::vector<Natural>{5, 55, 555});
    CHECK_THROWS_AS(constructive_terms({}, 3), std::invalid_argument);
}

TEST_CASE("pseudo classification") {
    PseudoProperty prime{PseudoProperty::prime, 0};
    auto f14 = pseudo_classify(prime, 14);
    CHECK((f14.first && f14.second && f14.third));
    auto f13 = pseudo_classify(prime, 13);
    CHECK(f13.first);
    CHECK_FALSE(f13.second);
    CHECK(f13.third);
    auto f10 = pseudo_classify({PseudoProperty::square, 0}, 10);
    CHECK((f10.first && f10.second && f10.third));
}

TEST_CASE("almost primes") {
    CHECK(almost_primes(AlmostKind::first, 10, 12) ==
          std::vector<u64>{10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23});
    CHECK(almost_primes(AlmostKind::second, 10, 6) == std::vector<u64>{10, 11, 13, 17, 19, 21});
    // starting at 2 the first kind is exactly the primes
    auto a = almost_primes(AlmostKind::first, 2, 60);
    std::vector<u64> primes;
    for (u64 n = 2; primes.size() < 60; ++n)
        if (slow_prime(n)) primes.push_back(n);
    CHECK(a == primes);
}

TEST_CASE("digit counts along sequences") {
    CHECK(digit_count_sequence(CountSource::primes, 1, 5) == 2);
    CHECK(digit_count_sequence(CountSource::factorials, 0, 6) == 1);
    CHECK(digit_count_sequence(CountSource::self_powers, 5, 4) == 1);
}

TEST_CASE("digit-only subsequences against brute force") {
    auto mult3 = [](const Natural& n) { return n % 3 == 0; };
    CHECK(digit_only_subsequence(mult3, {0, 1}, 3) == std::vector<Natural>{1011, 1101, 1110});
    auto isp = [](const Natural& n) { return slow_prime(static_cast<u64>(n)); };
    std::vector<Natural> brute;
    for (u64 n = 1; n < 100000; ++n) {
        auto s = std::to_string(n);
        bool has1 = s.find('1') != std::string::npos, has7 = s.find('7') != std::string::npos;
        bool only = s.find_first_not_of("17") == std::string::npos;
        if (has1 && has7 && only && slow_prime(n)) brute.push_back(n);
    }
    CHECK(digit_only_subsequence(isp, {1, 7}, brute.size(), 5) == brute);
    CHECK(digit_only_subsequence([](const Natural&) { return true; }, {0}, 5) == std::vector<Natural>{0});
}

TEST_CASE("digital filters") {
    CHECK(full_digital_filter({PseudoProperty::square, 0}, 144));
    CHECK(full_digital_filter({PseudoProperty::prime, 0}, 23));
    CHECK_FALSE(full_digital_filter({PseudoProperty::prime, 0}, 19));
    auto sq = partial_digital_filter(PartialKind::square, 256036);
    REQUIRE(sq.has_value());
    CHECK(*sq == std::vector<std::string>{"256", "0", "36"});
    CHECK(partial_digital_filter(PartialKind::prime, 113) == std::vector<std::string>{"11", "3"});
    CHECK(partial_digital_filter(PartialKind::lucas, 123) == std::vector<std::string>{"1", "2", "3"});
    CHECK(f_digital_filter(DigitalFn::double_it, 714) == std::pair<Natural, Natural>{7, 14});
    CHECK(f_digital_filter(DigitalFn::lucky_index, 37) == std::pair<Natural, Natural>{3, 7});
    CHECK_FALSE(f_digital_filter(DigitalFn::double_it, 13).has_value());
}

TEST_CASE("lucky numbers by direct sieving") {
    std::vector<u64> v;
    for (u64 i = 1; i <= 2000; i += 2) v.push_back(i);
    for (std::size_t k = 1; k < v.size() && v[k] <= v.size(); ++k) {
        u64 step = v[k];
        std::vector<u64> keep;
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((i + 1) % step != 0) keep.push_back(v[i]);
        v = keep;
    }
    CHECK(lucky_numbers(2000) == v);
}

TEST_CASE("subsequence closed forms agree with block construction") {
    for (auto k : {SubKind::crescendo, SubKind::decrescendo, SubKind::cresc_pyramidal, SubKind::decresc_pyramidal,
                   SubKind::cresc_symmetric, SubKind::decresc_symmetric, SubKind::permutation_sub}) {
        auto stream = subsequence_stream(k, 2000);
        for (u64 i = 1; i <= stream.size(); ++i) CHECK(subsequence_closed_form(k, i) == stream[i - 1]);
    }
    CHECK(subsequence_closed_form(SubKind::crescendo, 10) == 4);
    CHECK(subsequence_closed_form(SubKind::decrescendo, 10) == 1);
    CHECK(subsequence_closed_form(SubKind::cresc_pyramidal, 9) == 1);
}

TEST_CASE("uniform sequences") {
    auto r = uniform_sequence(7, {1}, 10, 2);
    CHECK(r.terms == std::vector<Natural>{111111, 111111111111ULL});
    CHECK(uniform_sequence(79365, {5}, 10, 1).terms == std::vector<Natural>{555555});
    CHECK(uniform_sequence(79365, {6}, 10, 3).empty);
    // brute force: multiples of 13 written with 2s and 3s only, both used
    std::vector<Natural> brute;
    for (u64 m = 13; m < 10000000 && brute.size() < 8; m += 13) {
        auto s = std::to_string(m);
        if (s.find_first_not_of("23") == std::string::npos && s.find('2') != std::string::npos &&
            s.find('3') != std::string::npos)
            brute.push_back(m);
    }
    CHECK(uniform_sequence(13, {2, 3}, 10, brute.size()).terms == brute);
}

TEST_CASE("operation sequences") {
    CHECK(operation_sequence({Op::add}, 3).terms == std::vector<Natural>{1, 3, 6});
    auto r = operation_sequence({Op::add, Op::sub, Op::mul, Op::div}, 4);
    CHECK(r.terms == std::vector<Natural>{1, 2, 5, 6});
    auto a = operation_sequence({Op::add, Op::sub}, 4, 99), b = operation_sequence({Op::add, Op::sub}, 4, 99);
    CHECK(a.terms == b.terms);
}
