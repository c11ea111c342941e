#include "numwb/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace numwb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// cpp_int's msb() throws on zero
unsigned msb_or_zero(const Natural& n) { return n == 0 ? 0 : boost::multiprecision::msb(n); }

bool fits_u64(const Natural& n) { return n >= 0 && msb_or_zero(n) < 64; }

}  // namespace

std::string DigitString::str() const {
    std::string s;
    for (unsigned d : digits) s += static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
    return s;
}

DigitString digits_of(const Natural& n, unsigned base) {
    if (base < 2) throw std::invalid_argument("digits_of: base must be >= 2");
    if (n < 0) throw std::invalid_argument("digits_of: negative value");
    DigitString out;
    out.base = base;
    if (n == 0) return out;
    out.digits.clear();
    Natural x = n;
    while (x > 0) {
        out.digits.push_back(static_cast<unsigned>(x % base));
        x /= base;
    }
    std::reverse(out.digits.begin(), out.digits.end());
    return out;
}

Natural value_of(const DigitString& d) {
    Natural v = 0;
    for (unsigned x : d.digits) {
        if (x >= d.base) throw std::invalid_argument("value_of: digit out of range");
        v = v * d.base + x;
    }
    return v;
}

std::string to_string(const Natural& n) { return n.str(); }

Natural parse_natural(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a natural number: '" + s + "'");
    // a leading 0 would make the cpp_int constructor read octal
    auto nz = s.find_first_not_of('0');
    return nz == std::string::npos ? Natural(0) : Natural(s.substr(nz));
}

std::size_t digit_count(const Natural& n) {
    if (n == 0) return 1;
    return n.str().size() - (n < 0 ? 1 : 0);
}

Natural pow10(std::size_t k) { return ipow(Natural(10), static_cast<unsigned>(k)); }

Natural ipow(const Natural& b, unsigned e) { return boost::multiprecision::pow(b, e); }

Natural concat(const Natural& a, const Natural& b) { return a * pow10(digit_count(b)) + b; }

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these twelve bases are enough for every n < 2^64
    for (u64 a : small) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

bool is_prime(const Natural& n, unsigned rounds) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(static_cast<u64>(n));
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (n % p == 0) return false;
    std::mt19937_64 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, rounds, gen);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace {

u64 rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec_u64(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = rho_u64(n);
    factor_rec_u64(d, out);
    factor_rec_u64(n / d, out);
}

Natural rho_big(const Natural& n) {
    for (unsigned c = 1;; ++c) {
        Natural x = 2, y = 2, d = 1;
        auto f = [&](const Natural& v) { return Natural((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = boost::multiprecision::gcd(Natural(x > y ? x - y : y - x), n);
        }
        if (d != n) return d;
    }
}

void factor_rec_big(const Natural& n, std::vector<Natural>& out) {
    if (n == 1) return;
    if (fits_u64(n)) {
        std::vector<u64> v;
        factor_rec_u64(static_cast<u64>(n), v);
        for (u64 p : v) out.emplace_back(p);
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Natural d = rho_big(n);
    factor_rec_big(d, out);
    factor_rec_big(n / d, out);
}

template <class T>
std::vector<std::pair<T, unsigned>> group(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::pair<T, unsigned>> out;
    for (auto& p : v) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

}  // namespace

FactorMap64 factorize_u64(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::vector<u64> ps;
    for (u64 p = 2; p < 100 && p * p <= n; ++p) {
        while (n % p == 0) {
            ps.push_back(p);
            n /= p;
        }
    }
    factor_rec_u64(n, ps);
    return group(std::move(ps));
}

FactorMap factorize(const Natural& n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    if (fits_u64(n)) {
        FactorMap out;
        for (auto [p, e] : factorize_u64(static_cast<u64>(n))) out.emplace_back(Natural(p), e);
        return out;
    }
    std::vector<Natural> ps;
    Natural m = n;
    for (unsigned p = 2; p < 10000; ++p) {
        while (m % p == 0) {
            ps.emplace_back(p);
            m /= p;
        }
    }
    factor_rec_big(m, ps);
    return group(std::move(ps));
}

Natural integer_root(const Natural& n, unsigned m) {
    if (m < 2) throw std::invalid_argument("integer_root: m must be >= 2");
    if (n < 0) throw std::invalid_argument("integer_root: negative value");
    if (n < 2) return n;
    if (m == 2) return boost::multiprecision::sqrt(n);
    // Newton from an overestimate; decreases monotonically to the floor root
    Natural x = Natural(1) << (msb_or_zero(n) / m + 1);
    for (;;) {
        Natural y = ((m - 1) * x + n / ipow(x, m - 1)) / m;
        if (y >= x) return x;
        x = y;
    }
}

std::uint64_t integer_root_u64(std::uint64_t n, unsigned m) {
    return static_cast<u64>(integer_root(Natural(n), m));
}

std::optional<std::pair<Natural, unsigned>> is_perfect_power(const Natural& n) {
    if (n < 4) return std::nullopt;
    // find any prime exponent, then recurse on the root to reach the smallest base
    unsigned top = msb_or_zero(n);
    for (unsigned p = 2; p <= top; ++p) {
        if (!is_prime_u64(p)) continue;
        Natural r = integer_root(n, p);
        if (ipow(r, p) != n) continue;
        auto inner = is_perfect_power(r);
        if (inner) return std::make_pair(inner->first, inner->second * p);
        return std::make_pair(r, p);
    }
    return std::nullopt;
}

std::set<Natural> digit_permutations(const Natural& n, bool nontrivial_only) {
    std::string s = to_string(n);
    std::set<Natural> out;
    std::string t = s;
    std::sort(t.begin(), t.end());
    bool repeated = std::adjacent_find(t.begin(), t.end()) != t.end();
    do {
        if (nontrivial_only && t == s && !repeated) continue;
        out.insert(parse_natural(t));
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

bool gsp_check(const Natural& n) {
    if (n < 10) throw std::invalid_argument("gsp_check: n must be >= 10");
    const std::string s = to_string(n);
    const std::size_t len = s.size();
    auto ok_block = [&](std::size_t at, std::size_t l) { return l == 1 || s[at] != '0'; };
    // state: number of digits already peeled from each end (at least one pair peeled)
    std::vector<signed char> memo(len + 1, -1);
    std::function<bool(std::size_t)> rest = [&](std::size_t l) -> bool {
        std::size_t r = len - l;
        if (l == r) return true;
        if (memo[l] >= 0) return memo[l];
        bool res = ok_block(l, r - l);
        for (std::size_t b = 1; !res && 2 * b <= r - l; ++b) {
            if (ok_block(l, b) && ok_block(r - b, b) && s.compare(l, b, s, r - b, b) == 0) res = rest(l + b);
        }
        memo[l] = res;
        return res;
    };
    for (std::size_t b = 1; 2 * b <= len; ++b) {
        if (ok_block(0, b) && ok_block(len - b, b) && s.compare(0, b, s, len - b, b) == 0 && rest(b)) return true;
    }
    return false;
}

GeneralizedPeriod generalized_period(const Natural& n, unsigned base) {
    GeneralizedPeriod g;
    auto d = digits_of(n, base);
    g.digits.insert(d.digits.begin(), d.digits.end());
    g.length = g.digits.size();
    std::set<unsigned> seen;
    for (unsigned x : d.digits) {
        seen.insert(x);
        if (seen.size() == g.length) {
            ++g.groups;
            seen.clear();
        }
    }
    return g;
}

int digit_position(const Natural& n, unsigned k) {
    if (k > 9) throw std::invalid_argument("digit_position: k must be a decimal digit");
    std::string s = to_string(n);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (static_cast<unsigned>(s[i] - '0') == k) return static_cast<int>(s.size() - 1 - i);
    return -1;
}

std::size_t counter(unsigned digit, const Natural& b) {
    std::string s = to_string(b);
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), static_cast<char>('0' + digit)));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<u64> lo, hi;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

Natural divisor_product(std::uint64_t n) {
    Natural p = 1;
    for (u64 d : divisors(n)) p *= d;
    return p;
}

Natural proper_divisor_product(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("proper_divisor_product: n must be >= 1");
    return divisor_product(n) / n;
}

DivisorClass classify_by_proper_divisor_product(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("classify: n must be >= 2");
    Natural p = proper_divisor_product(n);
    return {p <= n, p < n};
}

bool wrong_number_check(const Natural& n) {
    if (n < 10) throw std::invalid_argument("wrong_number_check: n must be >= 10");
    auto d = digits_of(n);
    std::vector<Natural> w(d.digits.begin(), d.digits.end());
    const std::size_t k = w.size();
    for (;;) {
        bool zeros = std::all_of(w.end() - k, w.end(), [](const Natural& x) { return x == 0; });
        bool ones = std::all_of(w.end() - k, w.end(), [](const Natural& x) { return x == 1; });
        if (zeros || ones) return false;
        Natural p = 1;
        for (auto it = w.end() - k; it != w.end(); ++it) p *= *it;
        if (p == n) return true;
        if (p > n) return false;
        w.push_back(p);
    }
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<u64> out;
    u64 x = 1;
    while (out.size() < count) {
        x = next_prime(x);
        out.push_back(x);
    }
    return out;
}

std::uint64_t next_prime(std::uint64_t n) {
    u64 x = n + 1;
    while (!is_prime_u64(x)) ++x;
    return x;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    u64 r = n;
    for (auto [p, e] : factorize_u64(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t digit_sum(const Natural& n) {
    u64 s = 0;
    for (char c : to_string(n)) s += static_cast<u64>(c - '0');
    return s;
}

}  // namespace numwb
