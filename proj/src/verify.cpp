#include "numwb/verify.hpp"

#include "numwb/arith.hpp"
#include "numwb/explorer.hpp"
#include "numwb/misprints.hpp"
#include "numwb/radix.hpp"
#include "numwb/seq_digits.hpp"
#include "numwb/sieves.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <tuple>

namespace numwb {

namespace {

using u64 = std::uint64_t;
using Strs = std::vector<std::string>;

struct Published {
    const char* name;
    const char* locus;
    u64 first;
    const char* values;
};

const Published kPublished[] = {
#include "published_values.inc"
};

const Published& published(std::string_view name) {
    for (auto& p : kPublished)
        if (name == p.name) return p;
    throw std::logic_error("no published list named " + std::string(name));
}

Strs split_list(const char* text) {
    Strs out;
    std::string cur;
    for (const char* c = text; *c; ++c) {
        if (*c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (*c != ' ' || !cur.empty()) {
            cur += *c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string s(const Natural& v) { return to_string(v); }
std::string s(u64 v) { return std::to_string(v); }
std::string s(std::int64_t v) { return std::to_string(v); }
std::string s(int v) { return std::to_string(v); }
std::string s(bool v) { return v ? "true" : "false"; }

template <class V>
Strs strs(const V& v) {
    Strs out;
    for (auto& x : v) out.push_back(s(x));
    return out;
}

template <class F>
Strs over(u64 first, std::size_t count, F f) {
    Strs out;
    for (u64 n = first; n < first + count; ++n) out.push_back(s(f(n)));
    return out;
}

std::string joined(const Strs& v, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

struct Check {
    std::string module, name, locus;
    u64 first = 0;  // index of the first list value; 0 marks an unindexed value tuple
    Strs expected;
    std::function<Strs()> compute;
    std::string id() const { return module + "/" + name; }
};

// Differences as "label:value" pairs, printed side and computed side.
std::pair<std::string, std::string> diff_signature(const Check& c, const Strs& got) {
    const Strs& want = c.expected;
    auto label = [&](std::size_t i) {
        return c.first ? "n=" + std::to_string(c.first + i) : "#" + std::to_string(i + 1);
    };
    if (want.size() == 1 && got.size() == 1) return {want[0], got[0]};
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i)
        if (want[i] != got[i]) diff.push_back(i);
    std::string p, d;
    const std::size_t shown = 6;
    for (std::size_t j = 0; j < diff.size() && j < shown; ++j) {
        if (j) p += "; ", d += "; ";
        p += label(diff[j]) + ":" + want[diff[j]];
        d += label(diff[j]) + ":" + got[diff[j]];
    }
    if (diff.size() > shown) {
        std::string more = "; +" + std::to_string(diff.size() - shown) + " more";
        p += more, d += more;
    }
    if (want.size() != got.size()) {
        if (!p.empty()) p += "; ", d += "; ";
        p += "length " + std::to_string(want.size());
        d += "length " + std::to_string(got.size());
    }
    return {p, d};
}

Check listed(std::string module, std::string name, std::string_view list, std::function<Strs(u64, std::size_t)> f) {
    auto& p = published(list);
    Check c{std::move(module), std::move(name), p.locus, p.first, split_list(p.values), {}};
    u64 first = p.first;
    std::size_t n = c.expected.size();
    c.compute = [f, first, n] { return f(first, n); };
    return c;
}

// First `count` items of a published list, for checks that only cover a prefix.
Strs published_prefix(std::string_view list, std::size_t count) {
    auto v = split_list(published(list).values);
    if (v.size() > count) v.resize(count);
    return v;
}

Check prefixed(std::string module, std::string name, std::string_view list, std::size_t count,
               std::function<Strs(u64, std::size_t)> f) {
    auto& p = published(list);
    Check c{std::move(module), std::move(name), std::string(p.locus) + " (prefix)", p.first,
            published_prefix(list, count), {}};
    u64 first = p.first;
    std::size_t n = c.expected.size();
    c.compute = [f, first, n] { return f(first, n); };
    return c;
}

Check value(std::string module, std::string name, std::string locus, Strs expected, std::function<Strs()> f) {
    return Check{std::move(module), std::move(name), std::move(locus), 0, std::move(expected), std::move(f)};
}

bool is_squarefree(u64 n) {
    if (n < 2) return true;
    for (auto [p, e] : factorize_u64(n))
        if (e > 1) return false;
    return true;
}

std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string flags(const PseudoFlags& f) { return s(f.first) + " " + s(f.second) + " " + s(f.third); }

Strs work_rows(const WorkTable& t) {
    Strs out;
    for (auto& r : t.rows) out.push_back(s(r.a) + "/" + s(r.b) + "/" + s(r.r) + "/" + s(r.p));
    return out;
}

std::string optional_str(const std::optional<u64>& v) { return v ? s(*v) : "unknown"; }

// ---- numeric-core ----------------------------------------------------------

void numeric_checks(std::vector<Check>& out) {
    const std::string m = "numeric-core";
    out.push_back(value(m, "concat-1-3", "lower-odd concatenation, first terms", {"13"}, [] { return Strs{s(concat(1, 3))}; }));
    out.push_back(value(m, "concat-2-3", "prime concatenation, first terms", {"23"}, [] { return Strs{s(concat(2, 3))}; }));
    out.push_back(value(m, "is-prime-2357", "prime sequence concatenation, fourth term", {"true"},
                        [] { return Strs{s(is_prime(Natural(2357)))}; }));
    out.push_back(value(m, "integer-root-8-2", "square root sequence, n = 8", {"2"},
                        [] { return Strs{s(integer_root(8, 2))}; }));
    out.push_back(value(m, "integer-root-63-2", "square root sequence, n = 63", {"7"},
                        [] { return Strs{s(integer_root(63, 2))}; }));
    out.push_back(value(m, "permutations-14", "pseudo-primes, 14 via 41", {"14", "41"},
                        [] { return strs(digit_permutations(14, false)); }));
    out.push_back(value(m, "permutations-100-contains-1", "pseudo-divisors, 100 rearranged to 001", {"true"},
                        [] { return Strs{s(digit_permutations(100, true).count(1) == 1)}; }));
    out.push_back(value(m, "gsp-1235656312", "generalized palindrome (12)(3)(56)(56)(3)(12)", {"true"},
                        [] { return Strs{s(gsp_check(Natural(1235656312)))}; }));
    out.push_back(value(m, "gsp-23523", "generalized palindrome (23)(5)(23)", {"true"},
                        [] { return Strs{s(gsp_check(Natural(23523)))}; }));
    out.push_back(value(m, "generalized-period-104001144", "generalized period example", {"014", "2", "3"}, [] {
        auto g = generalized_period(Natural(104001144));
        std::string d;
        for (unsigned x : g.digits) d += char('0' + x);
        return Strs{d, s(u64(g.groups)), s(u64(g.length))};
    }));
    out.push_back(value(m, "digit-position", "digital position example U1, U2, U3", {"-1", "0", "2"}, [] {
        return Strs{s(digit_position(5, 7)), s(digit_position(17, 7)), s(digit_position(775, 7))};
    }));
    out.push_back(value(m, "counter-1-11", "digit-1 count in the prime list, fifth value", {"2"},
                        [] { return Strs{s(u64(counter(1, 11)))}; }));
    out.push_back(value(m, "divisor-class-9", "simple and impotent number lists, 9", {"true", "true"}, [] {
        auto c = classify_by_proper_divisor_product(9);
        return Strs{s(c.simple), s(c.impotent)};
    }));
    out.push_back(value(m, "divisor-class-15", "simple number list, 15", {"true", "false"}, [] {
        auto c = classify_by_proper_divisor_product(15);
        return Strs{s(c.simple), s(c.impotent)};
    }));
    out.push_back(listed(m, "divisor-products", "divisor_products",
                         [](u64 a, std::size_t n) { return over(a, n, divisor_product); }));
    out.push_back(listed(m, "proper-divisor-products", "proper_divisor_products",
                         [](u64 a, std::size_t n) { return over(a, n, proper_divisor_product); }));
}

// ---- seq-digits ------------------------------------------------------------

Strs family_terms(Family f, u64 from, std::size_t count) {
    Strs out;
    for (u64 n = from; n < from + count; ++n) out.push_back(term(FamilySpec{f, 10, {}}, n).digits);
    return out;
}

void seq_digits_checks(std::vector<Check>& out) {
    const std::string m = "seq-digits";
    auto fam = [&](std::string name, std::string locus, Family f, u64 n, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)},
                            [f, n] { return Strs{term(FamilySpec{f, 10, {}}, n).digits}; }));
    };
    fam("symmetric-5", "symmetric sequence list", Family::symmetric, 5, "12321");
    fam("circular-5", "circular sequence list", Family::circular, 5, "231");
    fam("pierced-chain-2", "pierced chain list", Family::pierced_chain, 2, "1010101");
    fam("permutation-3", "permutation sequence list", Family::permutation, 3, "135642");
    fam("code-puzzle-1", "code puzzle, ONE = 151405", Family::code_puzzle, 1, "151405");
    fam("no-prime-digit-20", "no-prime-digit list, 20th entry", Family::no_prime_digit, 20, "0");
    out.push_back(value(m, "symmetric-prefix", "symmetric sequence list", {"1", "11", "121", "1221"},
                        [] { return family_terms(Family::symmetric, 1, 4); }));
    // The printed list runs terms together across spaces and commas.
    out.push_back(value(m, "deconstructive-prefix", "deconstructive sequence list",
                        {"1", "23", "456", "789 1", "23456", "789 123", "456789 1", "23456789", "123456789",
                         "123456789 1"},
                        [] { return family_terms(Family::deconstructive, 1, 10); }));
    auto cat = [&](std::string name, std::string locus, Source src, Direction dir, u64 n, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)},
                            [src, dir, n] { return Strs{s(concatenated_term(BaseSeqSpec{src, dir, {}}, n))}; }));
    };
    cat("concatenated-odd-4", "concatenated odd sequence list", Source::odds, Direction::forward, 4, "1357");
    cat("back-concatenated-prime-3", "back concatenated prime list", Source::primes, Direction::backward, 3, "532");
    cat("concatenated-fibonacci-5", "concatenated Fibonacci list", Source::fibonacci, Direction::forward, 5, "11235");
    out.push_back(value(m, "constructive-12", "constructive set of digits 1, 2", {"1", "2", "11", "12", "21", "22"},
                        [] { return strs(constructive_terms({"1", "2"}, 6)); }));
    out.push_back(value(m, "constructive-123", "constructive set of digits 1, 2, 3", {"1", "2", "3", "11"},
                        [] { return strs(constructive_terms({"1", "2", "3"}, 4)); }));
    auto pseudo = [&](std::string name, std::string locus, PseudoProperty::Kind k, u64 n, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)},
                            [k, n] { return Strs{flags(pseudo_classify(PseudoProperty{k, 0}, n))}; }));
    };
    pseudo("pseudo-prime-14", "pseudo-prime lists of three kinds, 14", PseudoProperty::prime, 14, "true true true");
    pseudo("pseudo-prime-13", "pseudo-prime lists of three kinds, 13", PseudoProperty::prime, 13, "true false true");
    pseudo("pseudo-square-10", "pseudo-square lists of three kinds, 10", PseudoProperty::square, 10, "true true true");
    out.push_back(value(m, "almost-primes-first-10", "almost primes of the first kind",
                        split_list("10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 23"),
                        [] { return strs(almost_primes(AlmostKind::first, 10, 12)); }));
    out.push_back(value(m, "almost-primes-second-10", "almost primes of the second kind",
                        split_list("10, 11, 13, 17, 19, 21"),
                        [] { return strs(almost_primes(AlmostKind::second, 10, 6)); }));
    out.push_back(value(m, "almost-primes-first-2", "almost primes from 2 give the primes", split_list("2, 3, 5, 7, 11"),
                        [] { return strs(almost_primes(AlmostKind::first, 2, 5)); }));
    out.push_back(value(m, "digit-count-primes-1-5", "digital sequence, digit 1 in primes", {"2"},
                        [] { return Strs{s(u64(digit_count_sequence(CountSource::primes, 1, 5)))}; }));
    out.push_back(value(m, "digit-count-factorials-0-6", "digital sequence, digit 0 in factorials", {"1"},
                        [] { return Strs{s(u64(digit_count_sequence(CountSource::factorials, 0, 6)))}; }));
    out.push_back(value(m, "digit-count-self-powers-5-4", "digital sequence, digit 5 in n^n", {"1"},
                        [] { return Strs{s(u64(digit_count_sequence(CountSource::self_powers, 5, 4)))}; }));
    out.push_back(value(m, "construction-multiples-3", "construction sequence, digits 0 and 1, multiples of 3",
                        {"1011", "1101", "1110"}, [] {
                            return strs(digit_only_subsequence([](const Natural& n) { return n % 3 == 0; }, {0, 1}, 3));
                        }));
    out.push_back(value(m, "construction-primes-17", "construction sequence, digits 1 and 7, primes", {"17", "71"},
                        [] {
                            return strs(digit_only_subsequence([](const Natural& n) { return is_prime(n); }, {1, 7}, 2));
                        }));
    out.push_back(value(m, "square-digital-144", "square-digital list", {"true"},
                        [] { return Strs{s(full_digital_filter(PseudoProperty{PseudoProperty::square, 0}, 144))}; }));
    out.push_back(value(m, "prime-digital-23", "prime-digital list", {"true"},
                        [] { return Strs{s(full_digital_filter(PseudoProperty{PseudoProperty::prime, 0}, 23))}; }));
    auto part = [&](std::string name, std::string locus, PartialKind k, u64 n, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)}, [k, n] {
            auto r = partial_digital_filter(k, n);
            return Strs{r ? joined(*r, "|") : "none"};
        }));
    };
    part("partial-square-256036", "square-partial-digital, 256/0/36", PartialKind::square, 256036, "256|0|36");
    part("partial-prime-113", "prime-partial-digital, 11 and 3", PartialKind::prime, 113, "11|3");
    part("partial-lucas-123", "Lucas-partial-digital, 1, 2 and 3", PartialKind::lucas, 123, "1|2|3");
    auto fdig = [&](std::string name, std::string locus, DigitalFn f, u64 n, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)}, [f, n] {
            auto r = f_digital_filter(f, n);
            return Strs{r ? s(r->first) + "|" + s(r->second) : "none"};
        }));
    };
    fdig("double-digital-714", "f-digital example, 714 as 7 and 14", DigitalFn::double_it, 714, "7|14");
    fdig("lucky-digital-37", "f-digital example, 37 as 3 and 7", DigitalFn::lucky_index, 37, "3|7");
    out.push_back(value(m, "sub-sequences", "sub-sequence closed forms", {"4", "1", "1"}, [] {
        return Strs{s(subsequence_closed_form(SubKind::crescendo, 10)),
                    s(subsequence_closed_form(SubKind::decrescendo, 10)),
                    s(subsequence_closed_form(SubKind::cresc_pyramidal, 9))};
    }));
    out.push_back(value(m, "uniform-7-ones", "uniform sequence, multiples of 7 made of 1s", {"111111", "1111111"},
                        [] { return strs(uniform_sequence(7, {1}, 10, 2).terms); }));
    out.push_back(value(m, "uniform-79365-fives", "uniform sequence, multiples of 79365 made of 5s", {"555555"},
                        [] { return strs(uniform_sequence(79365, {5}, 10, 1).terms); }));
    out.push_back(value(m, "uniform-79365-sixes-empty", "uniform sequence, multiples of 79365 end in 0 or 5",
                        {"true"}, [] { return Strs{s(uniform_sequence(79365, {6}, 10, 1).empty)}; }));
    out.push_back(value(m, "operation-sequence-prefix", "operation sequence, starts 1, 2, 3, 5",
                        {"1", "2", "3", "5"}, [] {
                            auto r = operation_sequence({Op::add, Op::sub, Op::mul, Op::div}, 4);
                            return strs(r.terms);
                        }));
    out.push_back(listed(m, "prime-digital-prefix", "prime_digital", [](u64, std::size_t n) {
        Strs v;
        for (u64 p = 2; v.size() < n; p = next_prime(p)) {
            bool ok = true;
            for (char c : std::to_string(p)) ok = ok && (c == '2' || c == '3' || c == '5' || c == '7');
            if (ok) v.push_back(s(p));
        }
        return v;
    }));
    out.push_back(value(m, "prime-digital-100th", "prime-digital subsequence, 100th term", {"33223"}, [] {
        std::size_t count = 0;
        for (u64 p = 2;; p = next_prime(p))
            if (full_digital_filter(PseudoProperty{PseudoProperty::prime, 0}, p) && ++count == 100)
                return Strs{s(p)};
    }));
}

// ---- sieves ----------------------------------------------------------------

Strs survivors(SieveKind k, u64 limit, std::size_t count) {
    auto v = run_sieve(k, limit).survivors;
    if (v.size() > count) v.resize(count);
    return strs(v);
}

void sieve_checks(std::vector<Check>& out) {
    const std::string m = "sieves";
    auto sv = [&](std::string name, std::string list, SieveKind::Tag t, u64 limit) {
        out.push_back(listed(m, std::move(name), list, [t, limit](u64, std::size_t n) {
            SieveKind k;
            k.tag = t;
            return survivors(k, limit, n);
        }));
    };
    sv("cube-free", "cube_free_sieve", SieveKind::cube_free, 80);
    sv("odd-sieve", "odd_sieve", SieveKind::odd_sieve, 100);
    sv("binary", "binary_sieve", SieveKind::binary, 160);
    sv("trinary", "trinary_sieve", SieveKind::trinary, 160);
    sv("k-ary-consecutive", "k_ary_consecutive_sieve", SieveKind::k_ary_consecutive, 50);
    sv("consecutive", "consecutive_sieve", SieveKind::consecutive, 500);
    out.push_back(listed(m, "random-choices-6-19-35", "random_sieve", [](u64, std::size_t n) {
        SieveKind k;
        k.tag = SieveKind::random;
        k.choices = {6, 19, 35};
        return survivors(k, 60, n);
    }));
    out.push_back(value(m, "cube-free-8", "cube-free sieve deletes 8", {"false"}, [] {
        SieveKind k;
        k.tag = SieveKind::cube_free;
        return Strs{s(survivor_predicate(k, 8))};
    }));
    out.push_back(value(m, "odd-sieve-25", "odd sieve keeps 25", {"true"}, [] {
        SieveKind k;
        k.tag = SieveKind::odd_sieve;
        return Strs{s(survivor_predicate(k, 25))};
    }));
}

// ---- arith-functions -------------------------------------------------------

void arith_checks(std::vector<Check>& out) {
    const std::string m = "arith-functions";
    auto L = [&](std::string name, std::string list, std::function<std::string(u64)> f) {
        out.push_back(listed(m, std::move(name), list, [f](u64 a, std::size_t n) {
            Strs v;
            for (u64 i = a; i < a + n; ++i) v.push_back(f(i));
            return v;
        }));
    };
    L("smarandache-function", "smarandache_function", [](u64 n) { return s(S(n)); });
    L("smarandache-quotients", "smarandache_quotients", [](u64 n) { return s(quotient(n)); });
    L("double-factorial-numbers", "double_factorial_numbers", [](u64 n) { return s(double_factorial_df(n)); });
    L("double-factorial-complements", "double_factorial_complements",
      [](u64 n) { return s(double_factorial_complement(n)); });
    L("primitive-numbers-2", "primitive_numbers_2", [](u64 k) { return s(S_p(2, k)); });
    L("primitive-numbers-3", "primitive_numbers_3", [](u64 k) { return s(S_p(3, k)); });
    L("square-complements", "square_complements", [](u64 n) { return s(power_complement(n, 2)); });
    L("cubic-complements", "cubic_complements", [](u64 n) { return s(power_complement(n, 3)); });
    L("prime-additive-complements", "prime_additive_complements",
      [](u64 n) { return s(prime_additive_complement(n)); });
    L("square-residues", "square_residues", [](u64 n) { return s(m_power_residue(n, 2)); });
    L("cubical-residues", "cubical_residues", [](u64 n) { return s(m_power_residue(n, 3)); });
    L("exponents-of-2", "exponents_of_2", [](u64 n) { return s(exponent(n, 2)); });
    L("power-function", "power_function", [](u64 n) { return s(SP(n)); });
    L("ceil-order-2-short", "ceil_order_2_short", [](u64 n) { return s(ceil_k(n, 2)); });
    L("ceil-order-3-short", "ceil_order_3_short", [](u64 n) { return s(ceil_k(n, 3)); });
    L("residual-products", "residual_products", [](u64 m) { return s(residual_L(0, m)); });
    L("analogue-function", "analogue", [](u64 n) { return s(analogue_a(n)); });
    // The longer ceil lists skip squarefree n, where S_k(n) = n.
    L("ceil-order-2-consecutive-index", "ceil_order_2", [](u64 n) { return s(ceil_k(n, 2)); });
    for (unsigned k = 2; k <= 6; ++k) {
        std::string list = "ceil_order_" + std::to_string(k);
        out.push_back(listed(m, "ceil-order-" + std::to_string(k) + "-non-squarefree", list,
                             [k](u64, std::size_t n) {
                                 Strs v;
                                 for (u64 x = 2; v.size() < n; ++x)
                                     if (!is_squarefree(x)) v.push_back(s(ceil_k(x, k)));
                                 return v;
                             }));
        out.back().first = 0;
        out.back().locus += ", over non-squarefree n";
    }
    out.push_back(value(m, "pseudo-smarandache-table", "pseudo-Smarandache table, n = 1..7",
                        split_list("1, 3, 2, 3, 4, 3, 6"), [] { return over(1, 7, Z); }));
    out.push_back(value(m, "f-parts", "inferior and superior prime parts of 10", {"7", "11"}, [] {
        return Strs{s(f_part(FPartSpec{FKind::primes, PartDir::inferior, {}}, 10)),
                    s(f_part(FPartSpec{FKind::primes, PartDir::superior, {}}, 10))};
    }));
    out.push_back(value(m, "square-part-12.501", "inferior square part, 12.501 - 9 = 3.501", {"9", "3.501"}, [] {
        FPartSpec sp{FKind::squares, PartDir::inferior, {}};
        return Strs{s(f_part(sp, 12.501)), fixed3(fractional_f_part(sp, 12.501))};
    }));
    out.push_back(value(m, "complement-square-8", "square complement as a Smarandacheian complement", {"2"}, [] {
        auto g = [](u64 k) { return Natural(k) * k; };
        auto law = [](const Natural& x, const Natural& k) { return x * k; };
        return Strs{s(smarandacheian_complement(g, law, 8, 1))};
    }));
    out.push_back(value(m, "complement-prime-additive-8", "prime additive complement as a Smarandacheian complement",
                        {"3"}, [] {
                            auto g = [](u64 k) { return Natural(PrimeTable::shared().nth(k + 1)); };
                            auto law = [](const Natural& x, const Natural& k) { return x + k; };
                            return Strs{s(smarandacheian_complement(g, law, 8, 0))};
                        }));
    out.push_back(value(m, "SK-table", "SK table",
                        split_list("2, 4, 6, 6, 5, 7, 7, 12, 22, 16, 55, 54, 42, 24"), [] {
                            Strs v;
                            for (u64 p : {2, 3, 7, 11, 17, 19, 23, 31, 37, 41, 61, 71, 73, 89})
                                v.push_back(optional_str(SK(p)));
                            return v;
                        }));
    out.push_back(value(m, "SW-table", "SW table", split_list("2, 4, 5, 12, 19, 24, 32, 19, 20, 20, 7, 57, 6"), [] {
        Strs v;
        for (u64 p : {3, 11, 17, 23, 29, 37, 41, 43, 53, 67, 73, 79, 97}) v.push_back(optional_str(SW(p)));
        return v;
    }));
    out.push_back(value(m, "SNTP-table", "SNTP table, n = 1..11 and 59",
                        split_list("2, 2, 2, 5, 3, 3, 3, 5, unknown, 5, 11, 13"), [] {
                            Strs v;
                            for (u64 n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 59}) v.push_back(optional_str(SNTP(n)));
                            return v;
                        }));
    out.push_back(value(m, "iterations", "iteration examples with d, sigma and gd", {"3", "3", "4"}, [] {
        return Strs{s(iterate(IterationSpec{SelfMap::d, IterKind::SI1, {}}, 6)),
                    s(iterate(IterationSpec{SelfMap::sigma, IterKind::SI2, {}}, 4, Natural(11))),
                    s(iterate(IterationSpec{SelfMap::gd, IterKind::SI3, {}}, 60, Natural(3)))};
    }));
    out.push_back(value(m, "anti-prime", "anti-prime values P(7) and P(4)", {"0", "1"},
                        [] { return Strs{s(anti_prime(7)), s(anti_prime(4))}; }));
    out.push_back(listed(m, "erdos-smarandache", "erdos_smarandache", [](u64, std::size_t n) {
        Strs v;
        for (u64 x = 2; x <= 35 && v.size() < n + 1; ++x)
            if (erdos_smarandache_test(x)) v.push_back(s(x));
        return v;
    }));
    out.push_back(value(m, "s-multiplicative-constant", "constant function has no S-multiplicativity violations",
                        {"0"}, [] { return Strs{s(u64(s_multiplicative_check(std::vector<Natural>(50, 1)).size()))}; }));
}

// ---- radix-systems ---------------------------------------------------------

void radix_checks(std::vector<Check>& out) {
    const std::string m = "radix-systems";
    auto base_list = [&](std::string name, std::string list, GeneralizedBase b) {
        out.push_back(listed(m, std::move(name), list, [b](u64 a, std::size_t n) {
            Strs v;
            for (u64 x = a; x < a + n; ++x) v.push_back(encode(x, b).str());
            return v;
        }));
    };
    base_list("prime-base", "prime_base", GeneralizedBase::primes());
    base_list("square-base", "square_base", GeneralizedBase::squares());
    base_list("factorial-base", "factorial_base", GeneralizedBase::factorials());
    base_list("triangular-base", "triangular_base", GeneralizedBase::triangulars());
    out.push_back(value(m, "decode-examples", "prime-base 101 and square-base 100", {"4", "9"}, [] {
        return Strs{s(decode(parse_numeral("101"), GeneralizedBase::primes())),
                    s(decode(parse_numeral("100"), GeneralizedBase::squares()))};
    }));
    out.push_back(value(m, "factorial-add", "factorial-base addition 210 + 221", {"1101"},
                        [] { return Strs{factorial_add(parse_numeral("210"), parse_numeral("221")).str()}; }));
    out.push_back(value(m, "factorial-sub", "factorial-base subtraction 1001 - 320", {"11"},
                        [] { return Strs{factorial_sub(parse_numeral("1001"), parse_numeral("320")).str()}; }));
    auto rom = [&](unsigned k, Strs rows) {
        rows.push_back("7081");
        out.push_back(value(m, "romanian-73x97-k" + std::to_string(k),
                            "Romanian multiplication table, 73 x 97 with k = " + std::to_string(k), rows, [k] {
                                auto r = romanian_multiply(73, 97, k);
                                auto v = work_rows(r.table);
                                v.push_back(s(r.product));
                                return v;
                            }));
    };
    rom(3, {"73/97/1/73", "219/32/2/438", "657/10/1/657", "1971/3/0/0", "5913/1/1/5913"});
    rom(4, {"73/97/1/73", "292/24/0/0", "1168/6/2/2336", "4672/1/1/4672"});
    rom(5, {"73/97/2/146", "365/19/4/1460", "1825/3/3/5475"});
    rom(10, {"73/97/7/511", "730/9/9/6570"});
    // Rows as c(R), c(r), c(A), then the final c(A) line and the rest.
    auto div = [&](std::string name, std::string locus, u64 a, unsigned k, unsigned n, Strs want) {
        out.push_back(value(m, std::move(name), std::move(locus), std::move(want), [a, k, n] {
            auto r = divide_by_power(a, k, n);
            Strs v;
            for (auto& w : r.table.rows) v.push_back(s(w.p) + "/" + s(w.r) + "/" + s(w.a));
            v.push_back(s(r.quotient));
            v.push_back(s(r.remainder));
            return v;
        }));
    };
    div("divide-1357-by-2^7", "division by 2^7 table", 1357, 2, 7,
        {"1/1/1357", "0/0/678", "4/1/339", "8/1/169", "0/0/84", "0/0/42", "64/1/21", "10", "77"});
    div("divide-19495-by-3^8", "division by 3^8 table", 19495, 3, 8,
        {"1/1/19495", "0/0/6498", "0/0/2166", "54/2/722", "0/0/240", "486/2/80", "1458/2/26", "4374/2/8", "2",
         "6373"});
    auto fold = [&](std::string name, std::string locus, FoldSpec f, bool product, std::string want) {
        out.push_back(value(m, std::move(name), std::move(locus), {std::move(want)},
                            [f, product] { return Strs{s(product ? smarandacheial(f) : summant(f))}; }));
    };
    fold("smarandacheial-7-3", "Smarandacheial !7!3", FoldSpec{7, 3, std::nullopt, FoldMode::product}, true, "280");
    fold("smarandacheial-7-2-bound-9", "generalized Smarandacheial, factors down to 7 - 16",
         FoldSpec{7, 2, 9, FoldMode::product}, true, "-99225");
    fold("summant-7-3", "summant S(7,3)", FoldSpec{7, 3, std::nullopt, FoldMode::signed_sum}, false, "5");
    fold("summant-abs-7-3", "summant S|7,3|", FoldSpec{7, 3, std::nullopt, FoldMode::absolute_sum}, false, "19");
    fold("summant-9-4", "summant S(9,4)", FoldSpec{9, 4, std::nullopt, FoldMode::signed_sum}, false, "5");
    fold("summant-abs-9-4", "summant S|9,4|", FoldSpec{9, 4, std::nullopt, FoldMode::absolute_sum}, false, "25");
    fold("summant-11-5", "summant S(11,5)", FoldSpec{11, 5, std::nullopt, FoldMode::signed_sum}, false, "5");
    fold("summant-abs-11-5", "summant S|11,5|", FoldSpec{11, 5, std::nullopt, FoldMode::absolute_sum}, false, "31");
    fold("summant-7-9-2", "generalized summant S(7,9,2)", FoldSpec{7, 2, 9, FoldMode::signed_sum}, false, "-2");
    fold("summant-abs-7-3-2", "generalized summant S|7,3,2|", FoldSpec{7, 2, 3, FoldMode::absolute_sum}, false, "20");
}

// ---- explorer --------------------------------------------------------------

std::vector<u64> sorted(std::vector<u64> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void explorer_checks(std::vector<Check>& out) {
    const std::string m = "explorer";
    out.push_back(listed(m, "goldbach-t", "goldbach_t",
                         [](u64 a, std::size_t n) { return over(a, n, [](u64 i) { return goldbach_t(i); }); }));
    out.push_back(listed(m, "vinogradov-v", "vinogradov_v",
                         [](u64 a, std::size_t n) { return over(a, n, [](u64 i) { return vinogradov_v(i); }); }));
    out.push_back(value(m, "goldbach-cell-3-47", "Goldbach table row 3, column 47", {"50"}, [] {
        auto t = goldbach_table(14);
        auto r = std::find(t.row_labels.begin(), t.row_labels.end(), 3u) - t.row_labels.begin();
        auto c = std::find(t.col_labels.begin(), t.col_labels.end(), 47u) - t.col_labels.begin();
        return Strs{s(t.cells.at(r).at(c))};
    }));
    auto vin = [](u64, std::size_t n) {
        Strs v;
        for (u64 k = 0; k < n; ++k) v.push_back(s(vinogradov_a(2 * k + 1)));
        return v;
    };
    out.push_back(prefixed(m, "vinogradov-a-prefix", "vinogradov_a", 10, vin));
    out.push_back(listed(m, "vinogradov-a", "vinogradov_a", vin));
    auto prod = [&](std::string name, std::string list, ProductKind k) {
        out.push_back(listed(m, std::move(name), list, [k](u64 a, std::size_t n) {
            return over(a, n, [k](u64 i) { return product_sequence(k, i).value; });
        }));
    };
    prod("prime-products", "prime_products", ProductKind::prime);
    prod("square-products", "square_products", ProductKind::square);
    prod("cubic-products", "cubic_products", ProductKind::cubic);
    prod("factorial-products", "factorial_products", ProductKind::factorial);
    out.push_back(value(m, "product-primality", "prime product 211 is prime, factorial product 289 = 17^2",
                        {"true", "false"}, [] {
                            return Strs{s(product_sequence(ProductKind::prime, 4).prime),
                                        s(product_sequence(ProductKind::factorial, 4).prime)};
                        }));
    auto rec = [&](std::string name, std::string list, RecurrenceSetSpec spec, u64 limit) {
        out.push_back(listed(m, std::move(name), list, [spec, limit](u64, std::size_t n) {
            auto v = recurrence_set(spec, limit);
            if (v.size() > n) v.resize(n);
            return strs(v);
        }));
    };
    rec("ss2", "ss2", RecurrenceSetSpec{}, 458354);
    RecurrenceSetSpec ss1;
    ss1.seeds = {1};
    ss1.combine = Combine::subsets;
    rec("ss1", "ss1", ss1, 46);
    RecurrenceSetSpec nss2;
    nss2.polarity = Polarity::negative;
    rec("nss2", "nss2", nss2, 21);
    RecurrenceSetSpec cs2;
    cs2.relation = Relation::sum_of_cubes;
    rec("cs2", "cs2", cs2, 389017729);
    out.push_back(value(m, "partitions-9", "ns(9) = 4 and nc(9) = 2", {"4", "2"},
                        [] { return Strs{s(partition_count(9, 2)), s(partition_count(9, 3))}; }));
    out.push_back(listed(m, "non-arithmetic", "non_arithmetic", [](u64, std::size_t n) {
        return strs(progression_avoider(ProgressionKind::arithmetic, 3, {1, 2}, n));
    }));
    out.push_back(listed(m, "non-geometric", "non_geometric", [](u64, std::size_t n) {
        return strs(progression_avoider(ProgressionKind::geometric, 3, {1, 2}, n));
    }));
    out.push_back(listed(m, "multiplicative", "multiplicative", [](u64, std::size_t n) {
        return strs(multiplicative_builder(BuilderKind::multiplicative, 2, {2, 3}, n));
    }));
    out.push_back(value(m, "relationships", "S(6) + S(7) = S(8) + S(9), 1 - 2 = 3 - 4, 5 + 3 + 7 = 4 + 6 + 5",
                        {"true", "true", "true"}, [] {
                            auto f = [](u64 n) { return Integer(S(n)); };
                            auto has = [](const std::vector<u64>& v, u64 x) {
                                return std::find(v.begin(), v.end(), x) != v.end();
                            };
                            return Strs{s(has(relationship_search(f, 2, 2, Law::add, 1, 40), 5)),
                                        s(has(relationship_search(f, 2, 2, Law::sub, 1, 10), 0)),
                                        s(has(relationship_search(f, 3, 3, Law::add, 1, 20), 4))};
                        }));
    out.push_back(prefixed(m, "partial-perfect-prefix", "partial_perfect", 8,
                           [](u64, std::size_t n) { return strs(partial_perfect_additive(n)); }));
    out.push_back(listed(m, "partial-perfect", "partial_perfect",
                         [](u64, std::size_t n) { return strs(partial_perfect_additive(n)); }));
    out.push_back(value(m, "loop-2-digit", "two-digit reverse-subtract loop from 52", split_list("9, 27, 45, 63, 81"),
                        [] { return strs(sorted(periodic_loop(LoopSpec{LoopKind::reverse_subtract, 2, 0, {}}, 52).cycle)); }));
    out.push_back(value(m, "loop-3-digit", "three-digit reverse-subtract loop", split_list("99, 297, 495, 693, 891"),
                        [] { return strs(sorted(periodic_loop(LoopSpec{LoopKind::reverse_subtract, 3, 0, {}}, 100).cycle)); }));
    out.push_back(value(m, "loop-4-digit-2178", "four-digit loop 2178, 6534 is reached", {"2178", "6534"}, [] {
        LoopSpec sp{LoopKind::reverse_subtract, 4, 0, {}};
        for (u64 n = 1000; n <= 9999; ++n) {
            auto c = sorted(periodic_loop(sp, n).cycle);
            if (c.size() == 2 && n != c[0] && n != c[1]) return strs(c);
        }
        return Strs{};
    }));
    out.push_back(value(m, "loop-1019", "longest four-digit loop, closed at term 18", {"18"}, [] {
        return Strs{s(u64(periodic_loop(LoopSpec{LoopKind::reverse_subtract, 4, 0, {}}, 1019).closing_index()))};
    }));
    out.push_back(value(m, "loop-subtraction-1-52", "subtraction loop c = 1 from 52, 18 elements", {"18"},
                        [] { return Strs{s(u64(periodic_loop(LoopSpec{LoopKind::subtraction, 0, 1, {}}, 52).period))}; }));
    out.push_back(value(m, "loop-subtraction-7-109", "subtraction loop c = 7 from 109, 200 elements closed after 286",
                        {"200", "286"}, [] {
                            auto r = periodic_loop(LoopSpec{LoopKind::subtraction, 0, 7, {}}, 109);
                            return Strs{s(u64(r.period)), s(u64(r.tail + r.period))};
                        }));
    out.push_back(value(m, "loop-multiplication-7-68", "multiplication loop c = 7: 68, 26, 42, 84",
                        {"68", "26", "42", "84"},
                        [] { return strs(periodic_loop(LoopSpec{LoopKind::multiplication, 0, 7, {}}, 68).cycle); }));
    out.push_back(value(m, "carpet-C", "numerical carpet C(3,2), C(8,2), C(5,0)", {"108", "928", "1"},
                        [] { return Strs{s(carpet_C(3, 2)), s(carpet_C(8, 2)), s(carpet_C(5, 0))}; }));
    out.push_back(value(m, "carpet-table", "numerical carpet table, rows n = 0..8",
                        split_list("1, 1, 4, 1, 8, 40, 1, 12, 108, 504, 1, 16, 208, 1872, 9360, 1, 20, 340, 4420, "
                                   "39780, 198900, 1, 24, 504, 8568, 111384, 1002456, 5012280, 1, 28, 700, 14700, "
                                   "249900, 3248700, 29238300, 146191500, 1, 32, 928, 23200, 487200, 8282400, "
                                   "107671200, 969040800, 4845204000"),
                        [] {
                            Strs v;
                            for (unsigned n = 0; n <= 8; ++n)
                                for (unsigned k = 0; k <= n; ++k) v.push_back(s(carpet_C(n, k)));
                            return v;
                        }));
    out.push_back(value(m, "magic-triangle-index", "SGI(3) = (9, 12; 2)", {"9", "12", "2"}, [] {
        auto r = magic_index(3);
        return Strs{s(r.min_sum), s(r.max_sum), s(u64(r.combinations))};
    }));
    out.push_back(value(m, "durer-square", "Durer magic square", {"true"}, [] {
        return Strs{s(magic_square_check({{16, 3, 2, 13}, {5, 10, 11, 8}, {9, 6, 7, 12}, {4, 15, 14, 1}}))};
    }));
    out.push_back(value(m, "bad-number-witnesses", "12 = |13^3 - 47^2| and 8 = |1^3 - 3^2|", {"12", "8"}, [] {
        auto d = [](std::int64_t x, std::int64_t y) { return s(u64(std::llabs(x * x * x - y * y))); };
        return Strs{d(13, 47), d(1, 3)};
    }));
    out.push_back(value(m, "bad-numbers", "probable bad numbers 5, 6, 7, 10, 13, 14", split_list("5, 6, 7, 10, 13, 14"),
                        [] { return strs(bad_number_scan(14, 10000, 1000000).unrepresented); }));
    out.push_back(value(m, "prime-conjecture", "1 = 3 + 5 - 7 and 9 = 5 + 7 - 3", {"true", "true"}, [] {
        auto has = [](std::int64_t mm, u64 p, u64 q, u64 r) {
            for (auto& t : prime_conjecture_count(mm, 100))
                if (t.p == p && t.q == q && t.r == r) return true;
            return false;
        };
        return Strs{s(has(1, 3, 5, 7)), s(has(9, 5, 7, 3))};
    }));
    out.push_back(value(m, "fibonacci-triplets", "Fibonacci triplets up to 10^5", published_prefix("fibonacci_triplets", 6),
                        [] { return strs(triplet_search(100000)); }));
    out.push_back(value(m, "radu-duplets", "Radu duplets up to 10^4", published_prefix("radu_duplets", 2),
                        [] { return strs(duplet_search(10000)); }));
    out.push_back(value(m, "odd-add-on-13", "odd sequence, second term 13 is prime", {"13", "true"}, [] {
        auto v = gadd_on(BaseSeqSpec{Source::odds, Direction::forward, {}}, 2);
        return Strs{s(v), s(is_prime(v))};
    }));
    // The printed "ranks" are the digit counts of the prime terms.
    out.push_back(value(m, "odd-add-on-prime-lengths", "odd sequence primes, ranks 2, 15, 27, 63, 93",
                        split_list("2, 15, 27, 63, 93"), [] {
                            auto r = gadd_on_report(BaseSeqSpec{Source::odds, Direction::forward, {}}, 49);
                            return strs(r.prime_digit_counts);
                        }));
    out.push_back(value(m, "even-add-on-no-power", "even sequence, no perfect power among the first 50 terms", {"0"},
                        [] {
                            auto r = gadd_on_report(BaseSeqSpec{Source::evens, Direction::forward, {}}, 50, true);
                            return Strs{s(u64(r.perfect_power_ranks.size()))};
                        }));
}

const std::vector<std::string>& module_ids() {
    static const std::vector<std::string> ids{"numeric-core", "seq-digits", "sieves",
                                              "arith-functions", "radix-systems", "explorer"};
    return ids;
}

std::vector<Check> all_checks() {
    std::vector<Check> v;
    numeric_checks(v);
    seq_digits_checks(v);
    sieve_checks(v);
    arith_checks(v);
    radix_checks(v);
    explorer_checks(v);
    return v;
}

std::vector<Check> checks_for(const std::string& scope) {
    if (scope != "all" && std::find(module_ids().begin(), module_ids().end(), scope) == module_ids().end())
        throw std::invalid_argument("unknown verify scope: " + scope);
    std::vector<Check> out;
    for (auto& c : all_checks())
        if (scope == "all" || c.module == scope) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id() < b.id(); });
    return out;
}

CheckRecord evaluate(const Check& c) {
    CheckRecord r{c.id(), c.module, c.locus, joined(c.expected), "", CheckStatus::match, "", ""};
    Strs got;
    try {
        got = c.compute();
    } catch (const std::exception& e) {
        got = {std::string("error: ") + e.what()};
    }
    r.computed = joined(got);
    if (got == c.expected) return r;
    std::tie(r.printed_diff, r.derived_diff) = diff_signature(c, got);
    const Misprint* mp = find_misprint(r.id);
    r.status = (mp && mp->printed == r.printed_diff && mp->derived == r.derived_diff) ? CheckStatus::known_misprint
                                                                         : CheckStatus::mismatch_new;
    return r;
}

}  // namespace

std::string status_name(CheckStatus st) {
    switch (st) {
        case CheckStatus::match: return "match";
        case CheckStatus::known_misprint: return "mismatch-known-misprint";
        case CheckStatus::mismatch_new: return "mismatch-new";
    }
    return "?";
}

std::size_t VerificationReport::count(CheckStatus st) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [st](const CheckRecord& r) { return r.status == st; }));
}

std::vector<std::string> verify_scopes() {
    std::vector<std::string> v{"all"};
    v.insert(v.end(), module_ids().begin(), module_ids().end());
    return v;
}

std::vector<std::string> check_ids(const std::string& scope) {
    std::vector<std::string> v;
    for (auto& c : checks_for(scope)) v.push_back(c.id());
    return v;
}

VerificationReport run_verification(const std::string& scope, unsigned workers) {
    auto checks = checks_for(scope);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    VerificationReport rep;
    rep.records.resize(checks.size());
    // Each worker takes every workers-th check; slots are fixed, so order is canonical.
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < checks.size(); i += workers) rep.records[i] = evaluate(checks[i]);
        }));
    for (auto& t : tasks) t.get();
    return rep;
}

}  // namespace numwb
