#include "numwb/misprints.hpp"

#include <algorithm>

namespace numwb {

const std::vector<Misprint>& misprint_table() {
    static const std::vector<Misprint> table = [] {
        std::vector<Misprint> t = {
            // check id, locus, printed, derived, note, anticipated
            {"arith-functions/SK-table",
             "SK table, p = 3",
             "#2:4",
             "#2:unknown",
             "no m exists: for m >= 3 the factorial sum 0! + ... + (m-1)! is 1 mod 3", false},
            {"arith-functions/SNTP-table",
             "SNTP table, n = 4, 8, 11",
             "#4:5; #8:5; #11:11",
             "#4:unknown; #8:unknown; #11:7",
             "4 and 8 never divide q* - 1 since q* is 2 mod 4; 7* - 1 = 209 = 11 * 19 so SNTP(11) = 7", false},
            {"arith-functions/analogue-function",
             "analogue function list",
             "n=2:1; n=3:2; n=7:3",
             "n=2:2; n=3:3; n=7:4",
             "the printed list has an extra leading 1 and one four too few; a(25) = 5 agrees", false},
            {"arith-functions/ceil-order-2-consecutive-index",
             "ceil function of order 2 list",
             "n=1:2; n=2:4; n=4:6; n=5:4; n=7:10; n=8:12; +60 more",
             "n=1:1; n=2:2; n=4:2; n=5:5; n=7:7; n=8:4; +60 more",
             "the printed list runs over non-squarefree n only; under consecutive indexing it disagrees almost everywhere", true},
            {"arith-functions/ceil-order-3-short",
             "S^3 function list, n = 8",
             "n=8:8",
             "n=8:2",
             "2^3 = 8, so the value is 2", false},
            {"arith-functions/cubic-complements",
             "cubic complements list, from n = 28",
             "n=28:841; n=29:900; n=30:961; n=31:2; n=32:1089; n=33:1156; +16 more",
             "n=28:98; n=29:841; n=30:900; n=31:961; n=32:2; n=33:1089; +16 more",
             "98 (for 28 = 4 * 7) is missing and the rest of the list shifts by one", false},
            {"arith-functions/double-factorial-complements",
             "double factorial complements list, n = 10",
             "n=10:192",
             "n=10:384",
             "df(10) = 10 and 10!! = 3840 = 10 * 384", false},
            {"arith-functions/double-factorial-numbers",
             "double factorial numbers list, n = 50",
             "n=50:10",
             "n=50:20",
             "50 needs 5^2 and 2, so the first even double factorial divisible by 50 is 20!!", false},
            {"arith-functions/exponents-of-2",
             "exponents of power 2 list, n = 24 and 48",
             "n=24:2; n=48:3",
             "n=24:3; n=48:4",
             "24 = 2^3 * 3 and 48 = 2^4 * 3", false},
            {"arith-functions/power-function",
             "power function list, n = 40",
             "n=40:20",
             "n=40:10",
             "10^10 is divisible by 40", false},
            {"arith-functions/primitive-numbers-2",
             "primitive numbers of power 2 list, n = 63",
             "n=63:66",
             "n=63:64",
             "64! already holds 2^63", false},
            {"arith-functions/pseudo-smarandache-table",
             "pseudo-Smarandache table, n = 4",
             "#4:3",
             "#4:7",
             "1 + 2 + 3 = 6 is not divisible by 4; 1 + ... + 7 = 28 is", true},
            {"arith-functions/smarandache-function",
             "Smarandache function list, n = 45",
             "n=45:5",
             "n=45:6",
             "45 = 9 * 5 and S(9) = 6", false},
            {"arith-functions/square-complements",
             "square complements list, from n = 13",
             "n=13:14; n=14:15; n=15:1; n=16:17; n=17:2; n=18:19; +53 more",
             "n=13:13; n=14:14; n=15:15; n=16:1; n=17:17; n=18:2; +53 more",
             "13 is missing and the rest of the list shifts by one", false},
            {"arith-functions/square-residues",
             "square residues list, from n = 55",
             "n=55:14; n=56:57; n=57:58; n=58:59; n=59:30; n=60:61; +2 more",
             "n=55:55; n=56:14; n=57:57; n=58:58; n=59:59; n=60:30; +2 more",
             "55 is missing and the rest of the list shifts by one", false},
            {"explorer/bad-numbers",
             "probable bad numbers list",
             "#3:7; #4:10; length 6",
             "#3:10; #4:14; length 4",
             "7 = |2^3 - 1^2| and 13 = |17^3 - 70^2| are representable", false},
            {"explorer/carpet-table",
             "numerical carpet table, row n = 3",
             "#10:504",
             "#10:540",
             "C(3,3) = 12 * 9 * 5 = 540", true},
            {"explorer/magic-triangle-index",
             "SGI(3) combination count",
             "#3:2",
             "#3:4",
             "side sums 9, 10, 11 and 12 all occur; 4 arrangements up to symmetry, 2 of them at the extremes", false},
            {"explorer/non-arithmetic",
             "non-arithmetic progression, 17th term",
             "n=17:64",
             "n=17:82",
             "64 closes 10, 37, 64; the greedy choice is 82", false},
            {"explorer/non-geometric",
             "non-geometric progression, 45 and 50",
             "n=35:45; n=36:46; n=37:47; n=38:48; n=39:50; n=40:51; +1 more",
             "n=35:46; n=36:47; n=37:48; n=38:51; n=39:53; n=40:54; +1 more",
             "5, 15, 45 and 2, 10, 50 are geometric; the list shifts after 43", false},
            {"explorer/partial-perfect",
             "partial perfect additive sequence, from n = 13",
             "n=13:1; n=14:1; n=15:3; n=16:5; n=17:-4; n=18:-2; +2 more",
             "n=13:0; n=14:2; n=15:2; n=16:4; n=17:-3; n=18:-1; +2 more",
             "the printed tail does not follow the stated recursion; the first 12 terms agree", false},
            {"explorer/prime-products",
             "prime product sequence, first term",
             "n=1:2",
             "n=1:3",
             "1 + 2 = 3; the printed 2 belongs to an empty product", false},
            {"explorer/square-products",
             "square product sequence, 10th term",
             "n=10:1316818940001",
             "n=10:13168189440001",
             "(10!)^2 + 1 = 13168189440001; the printed value drops a digit", false},
            {"explorer/vinogradov-a",
             "Vinogradov combination counts, m = 25, 57, 59, 61",
             "n=13:11; n=29:40; n=30:43; n=31:43",
             "n=13:12; n=29:41; n=30:45; n=31:45",
             "the documented plane convention reproduces the other 27 values; no convention tried fits all 31", false},
            {"numeric-core/proper-divisor-products",
             "proper divisor products list, n = 12",
             "n=12:14",
             "n=12:144",
             "1 * 2 * 3 * 4 * 6 = 144", true},
            {"radix-systems/square-base",
             "square base list, from n = 49",
             "#50:100110; #51:100111; #52:100112; #53:101000; #54:101001; #55:101002; +10 more",
             "#50:1000000; #51:1000001; #52:1000002; #53:1000003; #54:1000010; #55:1000011; +10 more",
             "the printed list leaves 49 out of the scale; 49 = 7^2 is 1000000 and 64 is 10000000", false},
            {"radix-systems/summant-7-9-2",
             "generalized summant S(7,9,2)",
             "-2",
             "-9",
             "the printed expansion 7 + 5 + 3 + 1 - 1 - 3 - 5 - 7 - 9 sums to -9", false},
            {"seq-digits/deconstructive-prefix",
             "deconstructive sequence list",
             "#4:789 1; #6:789 123; #7:456789 1; #10:123456789 1",
             "#4:7891; #6:789123; #7:4567891; #10:1234567891",
             "terms are broken across spaces and commas in the printed text", true},
            {"seq-digits/operation-sequence-prefix",
             "operation sequence, starts 1, 2, 3, 5",
             "#3:3; #4:5",
             "#3:5; #4:6",
             "left-to-right exact evaluation cannot reach 3 over 1, 2, 3; the printed 1, 2, 3, 5, 4 is not increasing either", false},
            {"seq-digits/uniform-7-ones",
             "uniform sequence, multiples of 7 made of 1s",
             "#2:1111111",
             "#2:111111111111",
             "only repunits of length 6k are multiples of 7", false},
            {"sieves/consecutive",
             "consecutive sieve list, 37th and 38th terms",
             "n=37:435; n=38:491",
             "n=37:453; n=38:497",
             "435 breaks monotonicity and is a known misprint; 491 (for 497) was found by this suite", true},
            {"sieves/k-ary-consecutive",
             "k-ary consecutive sieve list",
             "n=3:4; n=5:9; n=6:14; n=7:20; n=8:25; n=9:31; +2 more",
             "n=3:6; n=5:8; n=6:13; n=7:14; n=8:15; n=9:16; +2 more",
             "no reading of keep k, skip k + 1 reproduces the printed prefix", false},
            {"sieves/odd-sieve",
             "odd sieve list, from 89",
             "n=22:91; n=23:93; n=24:97",
             "n=22:89; n=23:91; n=24:93",
             "89 survives the stated sieve and is missing from the list", false},
            {"sieves/random-choices-6-19-35",
             "random sieve list with u = 6, 19, 35",
             "n=2:5; n=3:6; n=4:7; n=5:11; n=6:13; n=7:17; +9 more; length 19",
             "n=2:6; n=3:11; n=4:13; n=5:17; n=6:19; n=7:23; +9 more; length 16",
             "the printed list keeps 5, 7 and 25 although u3 = 35 deletes the multiples of its divisors 5 and 7", false},
        };
        std::sort(t.begin(), t.end(), [](const Misprint& a, const Misprint& b) { return a.check_id < b.check_id; });
        return t;
    }();
    return table;
}

const Misprint* find_misprint(const std::string& check_id) {
    auto& t = misprint_table();
    auto it = std::lower_bound(t.begin(), t.end(), check_id,
                               [](const Misprint& m, const std::string& id) { return m.check_id < id; });
    return (it != t.end() && it->check_id == check_id) ? &*it : nullptr;
}

}  // namespace numwb
