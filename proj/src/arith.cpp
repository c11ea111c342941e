#include "numwb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace numwb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool fits_u64(const Natural& n) { return n >= 0 && n <= std::numeric_limits<u64>::max(); }

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// Exponent of p in m!, all in big integers.
Natural legendre_big(const Natural& m, const Natural& p) {
    Natural e = 0, q = m / p;
    while (q > 0) {
        e += q;
        q /= p;
    }
    return e;
}

std::uint64_t S_p_u64(u64 p, u64 k) {
    // the answer is j*p for the least j in [1, k] with legendre(j*p) >= k
    u64 lo = 1, hi = k;
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (legendre(mid * p, Natural(p)) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo * p;
}

struct SMemo {
    std::shared_mutex mu;
    std::unordered_map<u64, u64> values;
};

SMemo& s_memo() {
    static SMemo m;
    return m;
}

u64 largest_prime_factor(u64 n) {
    if (n < 2) return 1;
    return factorize_u64(n).back().first;
}

Natural divisor_count(const Natural& x) {
    if (x < 1) throw std::invalid_argument("d: argument must be >= 1");
    if (x == 1) return 1;
    Natural c = 1;
    for (auto& [p, e] : factorize(x)) c *= e + 1;
    return c;
}

Natural divisor_sum(const Natural& x) {
    if (x < 1) throw std::invalid_argument("sigma: argument must be >= 1");
    if (x == 1) return 1;
    Natural s = 1;
    for (auto& [p, e] : factorize(x)) s *= (ipow(p, e + 1) - 1) / (p - 1);
    return s;
}

}  // namespace

// ---- PrimeTable ----

PrimeTable& PrimeTable::shared() {
    static PrimeTable t;
    return t;
}

void PrimeTable::extend_to(u64 bound) {
    {
        std::shared_lock lk(mu_);
        if (bound <= bound_) return;
    }
    std::unique_lock lk(mu_);
    if (bound <= bound_) return;
    u64 target = std::max<u64>(bound, bound_ * 2);
    auto ps = primes_up_to(target);
    primes_.assign(ps.begin(), ps.end());
    bound_ = target;
}

void PrimeTable::extend_count(std::size_t count) {
    for (;;) {
        {
            std::shared_lock lk(mu_);
            if (primes_.size() >= count) return;
        }
        double n = static_cast<double>(std::max<std::size_t>(count, 6));
        u64 est = static_cast<u64>(n * (std::log(n) + std::log(std::log(n)))) + 16;
        extend_to(std::max(est, bound_ * 2));
    }
}

u64 PrimeTable::nth(std::size_t n) {
    if (n == 0) throw std::invalid_argument("PrimeTable::nth is 1-based");
    extend_count(n);
    std::shared_lock lk(mu_);
    return primes_[n - 1];
}

std::vector<u64> PrimeTable::up_to(u64 x) {
    extend_to(x);
    std::shared_lock lk(mu_);
    return {primes_.begin(), std::upper_bound(primes_.begin(), primes_.end(), x)};
}

std::size_t PrimeTable::pi(u64 x) {
    extend_to(x);
    std::shared_lock lk(mu_);
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::contains(u64 x) {
    extend_to(x);
    std::shared_lock lk(mu_);
    return std::binary_search(primes_.begin(), primes_.end(), x);
}

// ---- the S family ----

u64 legendre(u64 m, const Natural& p) {
    if (p < 2) throw std::invalid_argument("legendre: p must be >= 2");
    if (!fits_u64(p)) return 0;
    u64 pp = static_cast<u64>(p), e = 0;
    for (u64 q = m / pp; q > 0; q /= pp) e += q;
    return e;
}

Natural S_p(const Natural& p, u64 k) {
    if (!is_prime(p)) throw std::invalid_argument("S_p: " + to_string(p) + " is not prime");
    if (k == 0) return 1;
    if (fits_u64(p) && static_cast<u128>(static_cast<u64>(p)) * k <= std::numeric_limits<u64>::max())
        return S_p_u64(static_cast<u64>(p), k);
    u64 lo = 1, hi = k;
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (legendre_big(p * mid, p) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return p * lo;
}

u64 S_uncached(u64 n) {
    if (n == 0) throw std::invalid_argument("S: n must be >= 1");
    if (n == 1) return 1;
    u64 best = 0;
    for (auto [p, e] : factorize_u64(n)) best = std::max(best, S_p_u64(p, e));
    return best;
}

u64 S(u64 n) {
    auto& m = s_memo();
    {
        std::shared_lock lk(m.mu);
        auto it = m.values.find(n);
        if (it != m.values.end()) return it->second;
    }
    u64 v = S_uncached(n);
    std::unique_lock lk(m.mu);
    m.values.emplace(n, v);
    return v;
}

Natural S(const Natural& n) {
    if (n < 1) throw std::invalid_argument("S: n must be >= 1");
    if (fits_u64(n)) return S(static_cast<u64>(n));
    Natural best = 0;
    for (auto& [p, e] : factorize(n)) best = std::max(best, S_p(p, e));
    return best;
}

void preload_S_memo(const std::vector<std::pair<u64, u64>>& values) {
    auto& m = s_memo();
    std::unique_lock lk(m.mu);
    for (auto& [n, v] : values) m.values.insert_or_assign(n, v);
}

std::size_t S_memo_size() {
    auto& m = s_memo();
    std::shared_lock lk(m.mu);
    return m.values.size();
}

void clear_S_memo() {
    auto& m = s_memo();
    std::unique_lock lk(m.mu);
    m.values.clear();
}

Natural S_first_kind(u64 n, u64 a) {
    if (n == 0 || a == 0) throw std::invalid_argument("S_first_kind: n and a must be >= 1");
    if (n == 1) return 1;
    Natural best = 0;
    for (auto [p, r] : factorize_u64(n)) best = std::max(best, S_p(Natural(p), r * a));
    return best;
}

Natural S_second_kind(u64 k, u64 n) { return S_first_kind(n, k); }

Natural S_third_kind(const std::vector<u64>& a_seq, const std::vector<u64>& b_seq, u64 n) {
    if (n == 0 || n > a_seq.size() || n > b_seq.size())
        throw std::invalid_argument("S_third_kind: index outside the supplied sequences");
    bool a_ones = true, b_ident = true, a_ident = true, b_ones = true;
    std::size_t len = std::min(a_seq.size(), b_seq.size());
    for (std::size_t i = 0; i < len; ++i) {
        a_ones = a_ones && a_seq[i] == 1;
        b_ones = b_ones && b_seq[i] == 1;
        a_ident = a_ident && a_seq[i] == i + 1;
        b_ident = b_ident && b_seq[i] == i + 1;
    }
    if (a_ones && b_ident) throw std::invalid_argument("S_third_kind: a_n = 1, b_n = n is excluded");
    if (a_ident && b_ones) throw std::invalid_argument("S_third_kind: a_n = n, b_n = 1 is excluded");
    return S_first_kind(a_seq[n - 1], b_seq[n - 1]);
}

u64 Z(u64 n) {
    if (n == 0) throw std::invalid_argument("Z: n must be >= 1");
    // n | m(m+1)/2  <=>  2n | m(m+1); m = 2n - 1 always works
    u128 mod = static_cast<u128>(n) * 2;
    for (u64 m = 1;; ++m)
        if (static_cast<u128>(m) * (m + 1) % mod == 0) return m;
}

Natural quotient(u64 n) {
    if (n == 0) throw std::invalid_argument("quotient: n must be >= 1");
    Natural f = 1;
    for (u64 i = 2, s = S(n); i <= s; ++i) f *= i;
    return f / n;
}

u64 double_factorial_df(u64 n) {
    if (n == 0) throw std::invalid_argument("df: n must be >= 1");
    if (n == 1) return 1;
    u64 odd = 1, even = 1;
    for (u64 m = 1;; ++m) {
        u64& r = (m % 2) ? odd : even;
        r = mulmod(r, m % n, n);
        if (r == 0) return m;
    }
}

Natural double_factorial(u64 m) {
    Natural r = 1;
    for (u64 i = m; i >= 2; i -= 2) r *= i;
    return r;
}

Natural double_factorial_complement(u64 n) {
    // m!! increases with m, so the least multiple comes from the least m
    return double_factorial(double_factorial_df(n)) / n;
}

Natural power_complement(u64 n, unsigned m) {
    if (n == 0) throw std::invalid_argument("power_complement: n must be >= 1");
    if (m < 2) throw std::invalid_argument("power_complement: m must be >= 2");
    Natural k = 1;
    if (n == 1) return k;
    for (auto [p, e] : factorize_u64(n)) k *= ipow(Natural(p), (m - e % m) % m);
    return k;
}

u64 prime_additive_complement(u64 n) {
    for (u64 k = 0;; ++k)
        if (is_prime_u64(n + k)) return k;
}

Natural m_power_residue(u64 n, unsigned m) {
    if (n == 0) throw std::invalid_argument("m_power_residue: n must be >= 1");
    if (m < 2) throw std::invalid_argument("m_power_residue: m must be >= 2");
    Natural r = 1;
    if (n == 1) return r;
    for (auto [p, e] : factorize_u64(n)) r *= ipow(Natural(p), std::min(m - 1, e));
    return r;
}

u64 exponent(const Natural& n, const Natural& p) {
    if (n < 1) throw std::invalid_argument("exponent: n must be >= 1");
    if (p < 2) throw std::invalid_argument("exponent: p must be >= 2");
    u64 e = 0;
    Natural x = n;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

// ---- f-parts ----

Natural f_part(const FPartSpec& spec, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("f_part: x must be finite");
    bool inf = spec.dir == PartDir::inferior;
    switch (spec.f) {
        case FKind::primes: {
            if (inf) {
                if (x < 2) throw std::invalid_argument("f_part: no prime <= x");
                for (u64 c = static_cast<u64>(std::floor(x));; --c)
                    if (is_prime_u64(c)) return c;
            }
            if (x <= 2) return 2;
            for (u64 c = static_cast<u64>(std::ceil(x));; ++c)
                if (is_prime_u64(c)) return c;
        }
        case FKind::squares:
        case FKind::cubes: {
            unsigned m = spec.f == FKind::squares ? 2 : 3;
            if (x < 0) {
                if (inf) throw std::invalid_argument("f_part: x below f(0) = 0");
                return 0;
            }
            Natural r = integer_root(Natural(static_cast<u64>(std::floor(x))), m);
            Natural v = ipow(r, m);
            if (inf) return v;
            return static_cast<double>(v) >= x ? v : ipow(r + 1, m);
        }
        case FKind::factorials: {
            if (inf && x < 1) throw std::invalid_argument("f_part: x below 1!");
            Natural f = 1;
            for (u64 k = 2;; ++k) {
                Natural next = f * k;
                if (inf ? static_cast<double>(next) > x : static_cast<double>(f) >= x) return f;
                f = next;
            }
        }
        case FKind::custom: {
            if (!spec.custom) throw std::invalid_argument("f_part: custom f missing");
            Natural prev = spec.custom(0);
            if (static_cast<double>(prev) >= x) {
                if (inf && static_cast<double>(prev) > x) throw std::invalid_argument("f_part: x below f(0)");
                return prev;
            }
            for (u64 k = 1; k < 10000000; ++k) {
                Natural cur = spec.custom(k);
                if (cur <= prev) throw std::invalid_argument("f_part: custom f is not strictly increasing");
                if (static_cast<double>(cur) >= x) {
                    if (static_cast<double>(cur) == x) return cur;
                    return inf ? prev : cur;
                }
                prev = cur;
            }
            throw std::runtime_error("f_part: search bound exceeded");
        }
    }
    throw std::logic_error("f_part: bad kind");
}

double fractional_f_part(const FPartSpec& spec, double x) {
    double v = static_cast<double>(f_part(spec, x));
    return spec.dir == PartDir::inferior ? x - v : v - x;
}

Natural smarandacheian_complement(const std::function<Natural(u64)>& g,
                                  const std::function<Natural(const Natural&, const Natural&)>& law,
                                  const Natural& x, u64 k_min, u64 bound) {
    std::vector<Natural> range;
    auto in_range = [&](const Natural& v) {
        while ((range.empty() || range.back() < v) && range.size() <= bound) range.push_back(g(range.size()));
        return std::binary_search(range.begin(), range.end(), v);
    };
    for (u64 k = k_min; k <= bound; ++k)
        if (in_range(law(x, Natural(k)))) return k;
    throw std::runtime_error("smarandacheian_complement: no k <= " + std::to_string(bound));
}

u64 SP(u64 n) {
    if (n == 0) throw std::invalid_argument("SP: n must be >= 1");
    if (n == 1) return 1;
    auto f = factorize_u64(n);
    u64 rad = 1;
    for (auto [p, e] : f) rad *= p;
    for (u64 m = rad;; m += rad) {
        bool ok = true;
        for (auto [p, e] : f) {
            u64 v = 0;
            for (u64 y = m; y % p == 0; y /= p) ++v;
            if (static_cast<u128>(v) * m < e) ok = false;
        }
        if (ok) return m;
    }
}

u64 ceil_k(u64 n, unsigned k) {
    if (n == 0) throw std::invalid_argument("ceil_k: n must be >= 1");
    if (k < 1) throw std::invalid_argument("ceil_k: k must be >= 1");
    u64 m = 1;
    if (n == 1) return 1;
    for (auto [p, e] : factorize_u64(n))
        for (unsigned i = 0; i < (e + k - 1) / k; ++i) m *= p;
    return m;
}

std::optional<u64> SK(u64 p, u64 bound) {
    if (!is_prime_u64(p)) throw std::invalid_argument("SK: " + std::to_string(p) + " is not prime");
    // running value of 0! + ... + (m-1)! mod p; once m! = 0 mod p it stops moving
    u64 sum = 0, fact = 1 % p;
    for (u64 m = 1; m <= bound; ++m) {
        sum = (sum + fact) % p;  // adds (m-1)!
        if (sum == 0) return m;
        fact = mulmod(fact, m % p, p);
        if (fact == 0 && m >= p) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<u64> SW(u64 p, u64 bound) {
    if (!is_prime_u64(p)) throw std::invalid_argument("SW: " + std::to_string(p) + " is not prime");
    u64 sum = 0, fact = 1;
    for (u64 m = 1; m <= bound; ++m) {
        fact = mulmod(fact, m % p, p);
        sum = (sum + fact) % p;
        if (sum == 0) return m;
        if (fact == 0) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<u64> SNTP(u64 n, u64 search_bound) {
    if (n == 0) throw std::invalid_argument("SNTP: n must be >= 1");
    if (n == 1) return 2;
    u64 r = 1;
    for (u64 q : PrimeTable::shared().up_to(search_bound)) {
        r = mulmod(r, q % n, n);
        if (r == 0 || r == 1 || r == n - 1) return q;
    }
    return std::nullopt;
}

Integer residual_L(const Integer& x, u64 m) {
    if (m < 2) throw std::invalid_argument("residual_L: m must be >= 2");
    Integer r = 1;
    for (u64 c = 1; c < m; ++c)
        if (gcd_u64(c, m) == 1) r *= x + c;
    return r;
}

bool coprime_criterion(u64 a, u64 b) {
    if (a == 0 || b == 0 || gcd_u64(a, b) != 1)
        throw std::invalid_argument("coprime_criterion: a and b must be coprime and >= 1");
    Natural mod = Natural(a) * b;
    using boost::multiprecision::powm;
    Natural x = powm(Natural(a), Natural(euler_phi(b) + 1), mod);
    Natural y = powm(Natural(b), Natural(euler_phi(a) + 1), mod);
    Natural lhs = (x + y) % mod;
    return lhs == (Natural(a) + b) % mod;
}

EulerSplit generalized_euler(std::int64_t a, std::int64_t m) {
    if (m == 0) throw std::invalid_argument("generalized_euler: m must be nonzero");
    u64 mm = static_cast<u64>(m < 0 ? -(m + 1) + 1ULL : m);
    u64 am = a >= 0 ? static_cast<u64>(a) % mm : (mm - static_cast<u64>(-(a + 1) + 1ULL) % mm) % mm;
    EulerSplit r;
    // step i: d_i = gcd(d_{i-1}, m_{i-1}), m_i = m_{i-1} / d_i, until d_i = 1
    u64 d = gcd_u64(am, mm), cur = mm;
    while (d != 1) {
        cur /= d;
        ++r.s;
        d = gcd_u64(d, cur);
    }
    r.m_s = cur;
    r.verified = powmod_u64(am, euler_phi(cur) + r.s, mm) == powmod_u64(am, r.s, mm);
    return r;
}

// ---- iterations ----

Natural apply_self_map(const IterationSpec& spec, const Natural& x) {
    switch (spec.g) {
        case SelfMap::d:
            return divisor_count(x);
        case SelfMap::sigma:
            return divisor_sum(x);
        case SelfMap::gd: {
            if (x < 1) throw std::invalid_argument("gd: argument must be >= 1");
            if (x == 1) return 1;
            return x / factorize(x).front().first;
        }
        case SelfMap::pi: {
            if (x < 0 || !fits_u64(x)) throw std::invalid_argument("pi: argument out of range");
            return PrimeTable::shared().pi(static_cast<u64>(x));
        }
        case SelfMap::P: {
            if (x < 1) throw std::invalid_argument("P: argument must be >= 1");
            if (x == 1) return 1;
            return factorize(x).back().first;
        }
        case SelfMap::omega: {
            if (x < 0) throw std::invalid_argument("omega: argument must be >= 0");
            if (x < 2) return 0;
            return factorize(x).size();
        }
        case SelfMap::custom:
            if (!spec.custom) throw std::invalid_argument("iterate: custom map missing");
            return spec.custom(x);
    }
    throw std::logic_error("apply_self_map: bad map");
}

u64 iterate(const IterationSpec& spec, const Natural& x, std::optional<Natural> b, u64 max_steps) {
    Natural y = x;
    u64 k = 0;
    auto violated = [&](const char* what) {
        return std::invalid_argument(std::string("iterate: precondition ") + what + " fails at x = " + to_string(y));
    };
    switch (spec.kind) {
        case IterKind::SI1:
        case IterKind::f_g:
            for (;; ++k) {
                if (k > max_steps) throw std::runtime_error("iterate: step bound exceeded");
                Natural next = apply_self_map(spec, y);
                if (next > y) throw violated("g(x) <= x");
                if (next == y) return k;
                y = next;
            }
        case IterKind::SI2:
        case IterKind::F_g:
            if (!b) throw std::invalid_argument("iterate: this kind needs a bound b");
            for (; y < *b; ++k) {
                if (k > max_steps) throw std::runtime_error("iterate: step bound exceeded");
                Natural next = apply_self_map(spec, y);
                if (next <= y) throw violated("g(x) > x");
                y = next;
            }
            return k;
        case IterKind::SI3:
            if (!b) throw std::invalid_argument("iterate: SI3 needs a bound b");
            for (; y > *b; ++k) {
                if (k > max_steps) throw std::runtime_error("iterate: step bound exceeded");
                Natural next = apply_self_map(spec, y);
                if (next >= y) throw violated("h(x) < x");
                y = next;
            }
            return k;
    }
    throw std::logic_error("iterate: bad kind");
}

int anti_prime(const Natural& n) { return n >= 2 && is_prime(n) ? 0 : 1; }

int anti_coprime(const std::vector<Natural>& values, std::size_t k) {
    if (k < 2) throw std::invalid_argument("anti_coprime: k must be >= 2");
    if (values.size() != k) throw std::invalid_argument("anti_coprime: expected k values");
    Natural g = 0;
    for (auto& v : values) g = boost::multiprecision::gcd(g, v);
    return g == 1 ? 0 : 1;
}

std::optional<SRatio> s_ratio_from_name(const std::string& name) {
    static const std::pair<const char*, SRatio> t[] = {{"S1", SRatio::S1}, {"S2", SRatio::S2},
                                                       {"S3", SRatio::S3}, {"Fs", SRatio::Fs},
                                                       {"Theta", SRatio::Theta}, {"ThetaBar", SRatio::ThetaBar}};
    for (auto& [k, v] : t)
        if (name == k) return v;
    return std::nullopt;
}

Rational s_ratio_functions(SRatio which, u64 x) {
    switch (which) {
        case SRatio::S1:
            if (x < 2) throw std::invalid_argument("S1: x must be >= 2");
            return Rational(1, S(x));
        case SRatio::S2:
            if (x < 1) throw std::invalid_argument("S2: x must be >= 1");
            return Rational(S(x), x);
        case SRatio::S3:
            if (x < 2) throw std::invalid_argument("S3: x must be >= 2");
            return Rational(x, S(x));
        case SRatio::Fs:
        case SRatio::Theta:
        case SRatio::ThetaBar: {
            if (x < 2) throw std::invalid_argument("Fs/Theta: x must be >= 2");
            Natural sum = 0;
            for (u64 p : PrimeTable::shared().up_to(x)) {
                bool divides = x % p == 0;
                if (which == SRatio::Theta && !divides) continue;
                if (which == SRatio::ThetaBar && divides) continue;
                sum += S_p(Natural(p), x);
            }
            return Rational(sum);
        }
    }
    throw std::logic_error("s_ratio_functions: bad kind");
}

u64 analogue_a(const Natural& n) {
    if (n < 1) throw std::invalid_argument("analogue_a: n must be >= 1");
    Natural f = 1;
    for (u64 m = 1;; ++m) {
        f *= m;
        if (n <= f) return m;
    }
}

bool erdos_smarandache_test(u64 n) {
    if (n < 2) throw std::invalid_argument("erdos_smarandache_test: n must be >= 2");
    return largest_prime_factor(n) == S(n);
}

MetallicMean metallic_mean(u64 n, MetallicForm form, std::size_t j) {
    if (n < 1) throw std::invalid_argument("metallic_mean: n must be >= 1");
    MetallicMean r;
    // root = (P + sqrt(D)) / Q with Q | D - P^2
    Integer P = form == MetallicForm::n_plus_one ? Integer(n) : Integer(1);
    Integer D = form == MetallicForm::n_plus_one ? Integer(n) * n + 4 : Integer(4) * n + 1;
    Integer Q = 2;
    r.root = (static_cast<double>(P) + std::sqrt(static_cast<double>(D))) / 2.0;
    Integer s = boost::multiprecision::sqrt(D);
    if (s * s == D) {
        r.convergents.push_back({(P + s) / Q, 1});
        return r;
    }
    Natural p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p_{-1}, q_{-1}, p_{-2}, q_{-2}
    for (std::size_t i = 0; i < j; ++i) {
        Integer a;
        if (Q > 0)
            a = (P + s) / Q;
        else
            a = -((P + s) / (-Q) + 1);
        // floor division for a possibly negative numerator
        if (Q > 0 && P + s < 0 && (P + s) % Q != 0) a -= 1;
        Natural p = a * p0 + p1, q = a * q0 + q1;
        r.convergents.push_back({p, q});
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    return r;
}

bool inequality_check(u64 n, u64 k) {
    if (n < 1 || k < 1) throw std::invalid_argument("inequality_check: n, k must be >= 1");
    if (k > n + 1) throw std::invalid_argument("inequality_check: needs k <= n + 1");
    auto fact = [](u64 m) {
        Natural f = 1;
        for (u64 i = 2; i <= m; ++i) f *= i;
        return f;
    };
    Natural rhs = ipow(Natural(k), static_cast<unsigned>(n + 1 - k));
    for (u64 i = 0; i < k; ++i) rhs *= fact((n - i) / k);
    return fact(n) > rhs;
}

bool divisibility_check(const Integer& a, u64 m) {
    if (m == 0) throw std::invalid_argument("divisibility_check: m must be > 0");
    Integer v = ipow(a, static_cast<unsigned>(m)) - a;
    for (u64 i = 2; i < m; ++i) v *= i;
    return v % m == 0;
}

ProgressionCount prime_count_in_progression(ProgKind kind, std::int64_t a, std::int64_t b, u64 limit) {
    ProgressionCount r;
    auto gcd_ab = [&] {
        return boost::multiprecision::gcd(Integer(a), Integer(b));
    };
    auto take = [&](const Integer& t) {
        if (t >= 2 && is_prime(t)) {
            ++r.count;
            r.witnesses.push_back(t);
        }
    };
    switch (kind) {
        case ProgKind::linear_prime:
            if (gcd_ab() != 1) throw std::invalid_argument("progression: need gcd(a, b) = 1");
            for (u64 i = 1; i <= limit; ++i) take(Integer(a) * PrimeTable::shared().nth(i) + b);
            break;
        case ProgKind::geometric:
            if (gcd_ab() != 1) throw std::invalid_argument("progression: need gcd(a, b) = 1");
            if (a >= -1 && a <= 1) throw std::invalid_argument("progression: a must not be -1, 0 or 1");
            for (u64 i = 1; i <= limit; ++i) take(ipow(Integer(a), static_cast<unsigned>(i)) + b);
            break;
        case ProgKind::self_power_plus:
        case ProgKind::self_power_minus:
            for (u64 i = 1; i <= limit; ++i)
                take(ipow(Integer(i), static_cast<unsigned>(i)) + (kind == ProgKind::self_power_plus ? 1 : -1));
            break;
    }
    return r;
}

namespace {

struct ApSearch {
    std::size_t n, m, best = 0;
    std::vector<char> in;

    bool closes_ap(std::size_t x) const {
        // x as the last term of an m-term progression with difference d
        for (std::size_t d = 1; (m - 1) * d < x; ++d) {
            bool all = true;
            for (std::size_t t = 1; t < m && all; ++t) all = in[x - t * d];
            if (all) return true;
        }
        return false;
    }

    void go(std::size_t x, std::size_t size) {
        if (x > n) {
            best = std::max(best, size);
            return;
        }
        if (size + (n - x + 1) <= best) return;
        if (!closes_ap(x)) {
            in[x] = 1;
            go(x + 1, size + 1);
            in[x] = 0;
        }
        go(x + 1, size);
    }
};

}  // namespace

std::size_t cardinality_S(std::size_t n, std::size_t m, std::size_t max_n) {
    if (m < 3) throw std::invalid_argument("cardinality_S: m must be >= 3");
    if (n > max_n) throw std::invalid_argument("cardinality_S: n above the feasibility bound " + std::to_string(max_n));
    ApSearch s{n, m, 0, std::vector<char>(n + 1, 0)};
    s.go(1, 0);
    return s.best;
}

std::vector<std::pair<u64, u64>> s_multiplicative_check(const std::vector<Natural>& values) {
    std::vector<std::pair<u64, u64>> bad;
    u64 N = values.size();
    for (u64 a = 1; a <= N; ++a)
        for (u64 b = a + 1; a * b <= N; ++b)
            if (gcd_u64(a, b) == 1 && values[a * b - 1] != std::max(values[a - 1], values[b - 1]))
                bad.push_back({a, b});
    return bad;
}

}  // namespace numwb
