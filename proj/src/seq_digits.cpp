#include "numwb/seq_digits.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace numwb {

namespace {

using u64 = std::uint64_t;

std::string text(const Natural& n, unsigned base) { return digits_of(n, base).str(); }

u64 tri(u64 m) { return m * (m + 1) / 2; }

unsigned digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a' + 10);
    throw std::invalid_argument("bad digit character");
}

std::string strip_digits(u64 n, unsigned base, const std::function<bool(unsigned)>& drop) {
    std::string s = text(n, base), out;
    for (char c : s)
        if (!drop(digit_value(c))) out += c;
    return out;
}

bool is_square_u(u64 v) {
    u64 r = integer_root_u64(v, 2);
    return r * r == v;
}

const std::vector<std::pair<std::string, Family>>& family_table() {
    static const std::vector<std::pair<std::string, Family>> t = {
        {"consecutive", Family::consecutive},
        {"circular", Family::circular},
        {"symmetric", Family::symmetric},
        {"mirror", Family::mirror},
        {"deconstructive", Family::deconstructive},
        {"permutation", Family::permutation},
        {"reverse", Family::reverse},
        {"anti_symmetric", Family::anti_symmetric},
        {"concatenated_natural", Family::concatenated_natural},
        {"unary", Family::unary},
        {"no_prime_digit", Family::no_prime_digit},
        {"no_square_digit", Family::no_square_digit},
        {"pierced_chain", Family::pierced_chain},
        {"code_puzzle", Family::code_puzzle},
        {"threes_ones_simple", Family::threes_ones_simple},
        {"threes_ones_nested", Family::threes_ones_nested},
        {"generic_concat", Family::generic_concat},
    };
    return t;
}

std::string repeat(const std::string& s, u64 times) {
    std::string out;
    out.reserve(s.size() * times);
    for (u64 i = 0; i < times; ++i) out += s;
    return out;
}

}  // namespace

Natural Term::value() const {
    if (digits.empty()) throw std::logic_error("empty term has no value");
    Natural v = 0;
    for (char c : digits) v = v * base + digit_value(c);
    return v;
}

std::optional<Family> family_from_name(const std::string& name) {
    for (auto& [k, f] : family_table())
        if (k == name) return f;
    return std::nullopt;
}

std::string family_name(Family f) {
    for (auto& [k, g] : family_table())
        if (g == f) return k;
    return "?";
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (auto& [k, f] : family_table()) out.push_back(k);
    return out;
}

std::string english_words(std::uint64_t n) {
    static const char* ones[] = {"zero",    "one",     "two",       "three",    "four",     "five",    "six",
                                 "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
                                 "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
    static const char* tens[] = {"", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};
    static const std::pair<u64, const char*> scales[] = {
        {1000000000000000000ULL, "quintillion"}, {1000000000000000ULL, "quadrillion"},
        {1000000000000ULL, "trillion"},          {1000000000ULL, "billion"},
        {1000000ULL, "million"},                 {1000ULL, "thousand"}};
    if (n < 20) return ones[n];
    if (n < 100) return std::string(tens[n / 10]) + (n % 10 ? std::string(" ") + ones[n % 10] : "");
    if (n < 1000) return std::string(ones[n / 100]) + " hundred" + (n % 100 ? " " + english_words(n % 100) : "");
    for (auto [v, name] : scales) {
        if (n >= v) return english_words(n / v) + " " + name + (n % v ? " " + english_words(n % v) : "");
    }
    return "";
}

Term term(const FamilySpec& spec, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("term: index must be >= 1");
    const unsigned b = spec.base;
    if (b < 2 || b > 36) throw std::invalid_argument("term: base must be in 2..36");
    auto t = [&](u64 v) { return text(Natural(v), b); };
    Term out;
    out.base = b;
    std::string& s = out.digits;
    switch (spec.family) {
        case Family::consecutive:
            for (u64 i = 1; i <= n; ++i) s += t(i);
            break;
        case Family::circular: {
            u64 m = 1;
            while (tri(m) < n) ++m;
            u64 r = n - tri(m - 1) - 1;
            for (u64 i = 0; i < m; ++i) s += t((i + r) % m + 1);
            break;
        }
        case Family::symmetric: {
            u64 k = (n + 1) / 2;
            for (u64 i = 1; i <= k; ++i) s += t(i);
            for (u64 i = (n % 2 ? k - 1 : k); i >= 1; --i) s += t(i);
            break;
        }
        case Family::mirror:
            for (u64 i = n; i >= 2; --i) s += t(i);
            s += "1";
            for (u64 i = 2; i <= n; ++i) s += t(i);
            break;
        case Family::deconstructive: {
            // slices of the endless stream 1 2 ... (base-1) 1 2 ...
            u64 start = tri(n - 1);
            for (u64 i = 0; i < n; ++i) s += t((start + i) % (b - 1) + 1);
            break;
        }
        case Family::permutation:
            for (u64 i = 1; i <= 2 * n - 1; i += 2) s += t(i);
            for (u64 i = 2 * n; i >= 2; i -= 2) s += t(i);
            break;
        case Family::reverse:
            for (u64 i = n; i >= 1; --i) s += t(i);
            break;
        case Family::anti_symmetric:
            for (u64 i = 1; i <= n; ++i) s += t(i);
            s += s;
            break;
        case Family::concatenated_natural:
            s = repeat(t(n), n);
            break;
        case Family::unary:
            s = std::string(first_primes(n).back(), '1');
            break;
        case Family::no_prime_digit:
            s = strip_digits(n, b, [](unsigned d) { return is_prime_u64(d); });
            break;
        case Family::no_square_digit:
            s = strip_digits(n, b, [](unsigned d) { return is_square_u(d); });
            break;
        case Family::pierced_chain:
            s = repeat("10", 2 * n - 1) + "1";
            break;
        case Family::code_puzzle:
            for (char c : english_words(n)) {
                if (c < 'a' || c > 'z') continue;
                int code = c - 'a' + 1;
                s += static_cast<char>('0' + code / 10);
                s += static_cast<char>('0' + code % 10);
            }
            break;
        case Family::threes_ones_simple:
            s = std::string(n, '3') + "1";
            break;
        case Family::threes_ones_nested:
            for (u64 k = 1; k <= n; ++k) s += std::string(k, '3') + "1";
            break;
        case Family::generic_concat:
            if (spec.parts.empty()) throw std::invalid_argument("generic_concat needs at least one function");
            for (auto& f : spec.parts)
                if (auto v = f(n)) s += text(*v, b);
            break;
    }
    return out;
}

std::optional<Source> source_from_name(const std::string& name) {
    static const std::map<std::string, Source> m = {{"naturals", Source::naturals}, {"odds", Source::odds},
                                                    {"evens", Source::evens},       {"primes", Source::primes},
                                                    {"squares", Source::squares},   {"cubes", Source::cubes},
                                                    {"fibonacci", Source::fibonacci}};
    auto it = m.find(name);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::vector<Natural> source_prefix(const BaseSeqSpec& s, std::size_t n) {
    std::vector<Natural> out;
    out.reserve(n);
    switch (s.source) {
        case Source::naturals:
            for (std::size_t i = 1; i <= n; ++i) out.emplace_back(i);
            break;
        case Source::odds:
            for (std::size_t i = 1; i <= n; ++i) out.emplace_back(2 * i - 1);
            break;
        case Source::evens:
            for (std::size_t i = 1; i <= n; ++i) out.emplace_back(2 * i);
            break;
        case Source::primes:
            for (u64 p : first_primes(n)) out.emplace_back(p);
            break;
        case Source::squares:
            for (std::size_t i = 1; i <= n; ++i) out.emplace_back(Natural(i) * i);
            break;
        case Source::cubes:
            for (std::size_t i = 1; i <= n; ++i) out.emplace_back(Natural(i) * i * i);
            break;
        case Source::fibonacci: {
            Natural a = 1, b = 1;
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(a);
                Natural c = a + b;
                a = b;
                b = c;
            }
            break;
        }
        case Source::custom:
            if (s.custom.size() < n) throw std::out_of_range("custom source list exhausted");
            out.assign(s.custom.begin(), s.custom.begin() + static_cast<std::ptrdiff_t>(n));
            break;
    }
    return out;
}

Natural concatenated_term(const BaseSeqSpec& s, std::size_t n) {
    if (n < 1) throw std::invalid_argument("concatenated_term: index must be >= 1");
    auto v = source_prefix(s, n);
    if (s.direction == Direction::backward) std::reverse(v.begin(), v.end());
    std::string out;
    for (auto& x : v) out += to_string(x);
    return Natural(out);
}

std::vector<Natural> constructive_terms(const std::vector<std::string>& atoms, std::size_t count) {
    if (atoms.empty()) throw std::invalid_argument("constructive_terms: no atoms");
    for (auto& a : atoms)
        if (a.empty()) throw std::invalid_argument("constructive_terms: empty atom");
    std::set<Natural> found;
    // grow by length; everything of length <= L is final once every string of
    // length <= L has been produced
    std::map<std::size_t, std::set<std::string>> by_len;
    for (auto& a : atoms) by_len[a.size()].insert(a);
    std::size_t L = 1;
    for (;;) {
        // strings of length L: atom + string of length L - |atom|
        for (auto& a : atoms) {
            if (a.size() >= L) continue;
            for (auto& rest : by_len[L - a.size()]) by_len[L].insert(a + rest);
        }
        for (auto& s : by_len[L]) found.insert(parse_natural(s));
        // values with at most L digits are complete when atoms have no leading zeros
        std::vector<Natural> ready;
        for (auto& v : found)
            if (digit_count(v) <= L) ready.push_back(v);
        if (ready.size() >= count) {
            ready.resize(count);
            return ready;
        }
        ++L;
        if (L > 4096) return ready;
    }
}

bool satisfies(const PseudoProperty& p, const Natural& n) {
    switch (p.kind) {
        case PseudoProperty::prime:
            return is_prime(n);
        case PseudoProperty::square:
            return integer_root(n, 2) * integer_root(n, 2) == n;
        case PseudoProperty::cube:
            return ipow(integer_root(n, 3), 3) == n;
        case PseudoProperty::m_power:
            if (p.param < 2) throw std::invalid_argument("m_power needs m >= 2");
            return ipow(integer_root(n, static_cast<unsigned>(p.param)), static_cast<unsigned>(p.param)) == n;
        case PseudoProperty::factorial: {
            Natural f = 1;
            for (unsigned k = 2; f < n; ++k) f *= k;
            return f == n;
        }
        case PseudoProperty::odd:
            return n % 2 == 1;
        case PseudoProperty::even:
            return n % 2 == 0;
        case PseudoProperty::triangular: {
            Natural r = integer_root(8 * n + 1, 2);
            return r * r == 8 * n + 1;
        }
        case PseudoProperty::multiple_of:
            if (p.param < 2) throw std::invalid_argument("multiple_of needs p >= 2");
            return n % p.param == 0;
        case PseudoProperty::divisor_of:
            if (p.param < 1) throw std::invalid_argument("divisor_of needs m >= 1");
            return n != 0 && Natural(p.param) % n == 0;
    }
    return false;
}

PseudoFlags pseudo_classify(const PseudoProperty& p, const Natural& n) {
    PseudoFlags f;
    for (auto& v : digit_permutations(n, false))
        if (satisfies(p, v)) {
            f.first = true;
            break;
        }
    f.second = f.first && !satisfies(p, n);
    for (auto& v : digit_permutations(n, true))
        if (satisfies(p, v)) {
            f.third = true;
            break;
        }
    return f;
}

std::vector<std::uint64_t> almost_primes(AlmostKind kind, std::uint64_t a1, std::size_t count) {
    if (a1 < 2) throw std::invalid_argument("almost_primes: a1 must be >= 2");
    std::vector<u64> out;
    if (count == 0) return out;
    out.push_back(a1);
    for (u64 x = a1 + 1; out.size() < count; ++x) {
        bool ok = true;
        for (u64 t : out) {
            if (kind == AlmostKind::first ? x % t == 0 : std::gcd(x, t) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

std::size_t digit_count_sequence(CountSource s, unsigned digit, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("digit_count_sequence: index must be >= 1");
    Natural v;
    switch (s) {
        case CountSource::primes:
            v = first_primes(n).back();
            break;
        case CountSource::factorials:
            v = 1;
            for (u64 k = 2; k <= n; ++k) v *= k;
            break;
        case CountSource::self_powers:
            v = ipow(Natural(n), static_cast<unsigned>(n));
            break;
    }
    return counter(digit, v);
}

std::vector<Natural> digit_only_subsequence(const std::function<bool(const Natural&)>& pred,
                                            const std::vector<unsigned>& digits, std::size_t count,
                                            std::size_t max_digits) {
    if (digits.empty()) throw std::invalid_argument("digit_only_subsequence: empty digit set");
    std::vector<unsigned> ds(digits);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    for (unsigned d : ds)
        if (d > 9) throw std::invalid_argument("digit_only_subsequence: not a decimal digit");
    const unsigned full = (1u << ds.size()) - 1;
    std::vector<Natural> out;
    std::string cur;
    // lexicographic DFS per length gives increasing order
    std::function<void(std::size_t, unsigned)> dfs = [&](std::size_t left, unsigned mask) {
        if (out.size() >= count) return;
        if (left == 0) {
            if (mask == full) {
                Natural v = parse_natural(cur);
                if (pred(v)) out.push_back(v);
            }
            return;
        }
        // not enough positions left to use every digit
        if (static_cast<std::size_t>(__builtin_popcount(full & ~mask)) > left) return;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (cur.empty() && ds[i] == 0 && left > 1) continue;
            cur.push_back(static_cast<char>('0' + ds[i]));
            dfs(left - 1, mask | (1u << i));
            cur.pop_back();
        }
    };
    for (std::size_t L = 1; L <= max_digits && out.size() < count; ++L) dfs(L, 0);
    return out;
}

bool full_digital_filter(const PseudoProperty& p, const Natural& n) {
    std::function<bool(unsigned)> digit_ok;
    switch (p.kind) {
        case PseudoProperty::square:
            digit_ok = [](unsigned d) { return d == 0 || d == 1 || d == 4 || d == 9; };
            break;
        case PseudoProperty::cube:
            digit_ok = [](unsigned d) { return d == 0 || d == 1 || d == 8; };
            break;
        case PseudoProperty::prime:
            digit_ok = [](unsigned d) { return d == 2 || d == 3 || d == 5 || d == 7; };
            break;
        default:
            throw std::invalid_argument("full_digital_filter: property has no digit-level form");
    }
    if (!satisfies(p, n)) return false;
    for (char c : to_string(n))
        if (!digit_ok(static_cast<unsigned>(c - '0'))) return false;
    return true;
}

namespace {

bool in_recurrence(const Natural& v, Natural a, Natural b) {
    // a, b seeds of an additive recurrence (Fibonacci 0,1 / Lucas 2,1)
    if (v == a || v == b) return true;
    while (b <= v) {
        Natural c = a + b;
        a = b;
        b = c;
        if (b == v) return true;
    }
    return false;
}

bool partial_ok(PartialKind p, const Natural& v) {
    switch (p) {
        case PartialKind::square:
            return integer_root(v, 2) * integer_root(v, 2) == v;
        case PartialKind::cube:
            return ipow(integer_root(v, 3), 3) == v;
        case PartialKind::prime:
            return is_prime(v);
        case PartialKind::lucas:
            return in_recurrence(v, 2, 1);
        case PartialKind::fibonacci:
            return in_recurrence(v, 0, 1);
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::string>> partial_digital_filter(PartialKind p, const Natural& n) {
    const std::string s = to_string(n);
    std::vector<std::string> parts;
    std::function<bool(std::size_t)> go = [&](std::size_t at) -> bool {
        if (at == s.size()) return parts.size() >= 2;
        for (std::size_t len = 1; at + len <= s.size(); ++len) {
            if (len > 1 && s[at] == '0') break;
            if (at == 0 && len == s.size()) break;  // at least two groups
            std::string g = s.substr(at, len);
            if (!partial_ok(p, Natural(g))) continue;
            parts.push_back(g);
            if (go(at + len)) return true;
            parts.pop_back();
        }
        return false;
    };
    if (go(0)) return parts;
    return std::nullopt;
}

std::vector<std::uint64_t> lucky_numbers(std::uint64_t limit) {
    std::vector<u64> v;
    for (u64 i = 1; i <= limit; i += 2) v.push_back(i);
    for (std::size_t k = 1; k < v.size(); ++k) {
        u64 step = v[k];
        if (step > v.size()) break;
        std::vector<u64> keep;
        keep.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((i + 1) % step != 0) keep.push_back(v[i]);
        v.swap(keep);
    }
    return v;
}

std::optional<std::pair<Natural, Natural>> f_digital_filter(
    const std::function<std::optional<Natural>(const Natural&)>& f, const Natural& n) {
    const std::string s = to_string(n);
    for (std::size_t cut = 1; cut < s.size(); ++cut) {
        if (s[cut] == '0' && cut + 1 < s.size()) continue;
        Natural g1(s.substr(0, cut)), g2(s.substr(cut));
        auto v = f(g1);
        if (v && *v == g2) return std::make_pair(g1, g2);
    }
    return std::nullopt;
}

std::optional<std::pair<Natural, Natural>> f_digital_filter(DigitalFn f, const Natural& n) {
    if (f == DigitalFn::double_it) return f_digital_filter([](const Natural& x) { return std::optional<Natural>(2 * x); }, n);
    return f_digital_filter(
        [](const Natural& x) -> std::optional<Natural> {
            if (x < 1 || x > 100000) return std::nullopt;
            u64 i = static_cast<u64>(x);
            u64 lim = 16 * i + 64;
            auto lk = lucky_numbers(lim);
            while (lk.size() < i) {
                lim *= 2;
                lk = lucky_numbers(lim);
            }
            return Natural(lk[i - 1]);
        },
        n);
}

std::uint64_t subsequence_closed_form(SubKind k, std::uint64_t i) {
    if (i < 1) throw std::invalid_argument("subsequence_closed_form: index must be >= 1");
    switch (k) {
        case SubKind::crescendo:
        case SubKind::decrescendo: {
            u64 n = 1;
            while (tri(n) < i) ++n;
            u64 back = tri(n) - i;
            return k == SubKind::crescendo ? n - back : 1 + back;
        }
        case SubKind::cresc_pyramidal:
        case SubKind::decresc_pyramidal: {
            u64 n = integer_root_u64(i, 2);
            if (n * n < i) ++n;
            u64 back = n * n - i;
            if (back <= n - 1) return k == SubKind::cresc_pyramidal ? 1 + back : n - back;
            u64 j = back - n;
            return k == SubKind::cresc_pyramidal ? n - j - 1 : 2 + j;
        }
        case SubKind::cresc_symmetric:
        case SubKind::decresc_symmetric:
        case SubKind::permutation_sub: {
            u64 n = 1;
            while (n * (n + 1) < i) ++n;
            u64 back = n * (n + 1) - i;
            bool tail = back <= n - 1;
            u64 j = tail ? back : back - n;
            if (k == SubKind::cresc_symmetric) return tail ? 1 + j : n - j;
            if (k == SubKind::decresc_symmetric) return tail ? n - j : 1 + j;
            return tail ? 2 + 2 * j : 2 * n - 1 - 2 * j;
        }
    }
    return 0;
}

std::vector<std::uint64_t> subsequence_stream(SubKind k, std::size_t count) {
    std::vector<u64> out;
    for (u64 n = 1; out.size() < count; ++n) {
        std::vector<u64> b;
        switch (k) {
            case SubKind::crescendo:
                for (u64 x = 1; x <= n; ++x) b.push_back(x);
                break;
            case SubKind::decrescendo:
                for (u64 x = n; x >= 1; --x) b.push_back(x);
                break;
            case SubKind::cresc_pyramidal:
                for (u64 x = 1; x <= n; ++x) b.push_back(x);
                for (u64 x = n - 1; x >= 1; --x) b.push_back(x);
                break;
            case SubKind::decresc_pyramidal:
                for (u64 x = n; x >= 1; --x) b.push_back(x);
                for (u64 x = 2; x <= n; ++x) b.push_back(x);
                break;
            case SubKind::cresc_symmetric:
                for (u64 x = 1; x <= n; ++x) b.push_back(x);
                for (u64 x = n; x >= 1; --x) b.push_back(x);
                break;
            case SubKind::decresc_symmetric:
                for (u64 x = n; x >= 1; --x) b.push_back(x);
                for (u64 x = 1; x <= n; ++x) b.push_back(x);
                break;
            case SubKind::permutation_sub:
                for (u64 x = 1; x <= 2 * n - 1; x += 2) b.push_back(x);
                for (u64 x = 2 * n; x >= 2; x -= 2) b.push_back(x);
                break;
        }
        for (u64 x : b) {
            if (out.size() == count) break;
            out.push_back(x);
        }
    }
    return out;
}

UniformResult uniform_sequence(std::uint64_t n, std::vector<unsigned> digits, unsigned base, std::size_t count,
                               std::size_t max_length) {
    if (n < 1) throw std::invalid_argument("uniform_sequence: n must be >= 1");
    if (base < 2) throw std::invalid_argument("uniform_sequence: base must be >= 2");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.empty()) throw std::invalid_argument("uniform_sequence: empty digit set");
    for (unsigned d : digits)
        if (d >= base) throw std::invalid_argument("uniform_sequence: digit not below base");
    const std::size_t D = digits.size();
    if (D > 16) throw std::invalid_argument("uniform_sequence: too many digits");
    const std::size_t M = std::size_t{1} << D;
    const unsigned full = static_cast<unsigned>(M - 1);
    auto idx = [&](u64 r, unsigned mask) { return static_cast<std::size_t>(r) * M + mask; };
    auto step = [&](u64 r, std::size_t i) { return (r * base + digits[i]) % n; };

    UniformResult res;
    // forward reachability of (residue, used-digit mask) from a nonzero leading digit
    std::vector<char> seen(static_cast<std::size_t>(n) * M, 0);
    std::vector<std::pair<u64, unsigned>> queue;
    for (std::size_t i = 0; i < D; ++i) {
        if (digits[i] == 0) continue;
        auto s = std::make_pair(static_cast<u64>(digits[i] % n), 1u << i);
        if (!seen[idx(s.first, s.second)]) {
            seen[idx(s.first, s.second)] = 1;
            queue.push_back(s);
        }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [r, m] = queue[q];
        for (std::size_t i = 0; i < D; ++i) {
            u64 r2 = step(r, i);
            unsigned m2 = m | (1u << i);
            if (!seen[idx(r2, m2)]) {
                seen[idx(r2, m2)] = 1;
                queue.emplace_back(r2, m2);
            }
        }
    }
    if (!seen[idx(0, full)]) {
        res.empty = true;
        return res;
    }
    // good[k][state]: k more digits can finish at residue 0 with every digit used
    std::vector<std::vector<char>> good;
    good.emplace_back(static_cast<std::size_t>(n) * M, 0);
    good[0][idx(0, full)] = 1;
    std::string cur;
    std::function<void(std::size_t, u64, unsigned)> emit = [&](std::size_t left, u64 r, unsigned m) {
        if (res.terms.size() >= count) return;
        if (left == 0) {
            Natural v = 0;
            for (char c : cur) v = v * base + static_cast<unsigned>(c);
            res.terms.push_back(v);
            return;
        }
        for (std::size_t i = 0; i < D; ++i) {
            if (cur.empty() && digits[i] == 0) continue;
            u64 r2 = step(r, i);
            unsigned m2 = m | (1u << i);
            if (!good[left - 1][idx(r2, m2)]) continue;
            cur.push_back(static_cast<char>(digits[i]));
            emit(left - 1, r2, m2);
            cur.pop_back();
        }
    };
    for (std::size_t L = 1; L <= max_length && res.terms.size() < count; ++L) {
        std::vector<char> g(static_cast<std::size_t>(n) * M, 0);
        for (u64 r = 0; r < n; ++r)
            for (unsigned m = 0; m < M; ++m)
                for (std::size_t i = 0; i < D; ++i)
                    if (good[L - 1][idx(step(r, i), m | (1u << i))]) {
                        g[idx(r, m)] = 1;
                        break;
                    }
        good.push_back(std::move(g));
        emit(L, 0, 0);
    }
    return res;
}

namespace {

std::optional<Rational> exact_root(const Rational& x, const Rational& y) {
    // y-th root of x, only for positive integer y and exact results
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(y) != 1 || numerator(y) < 1 || numerator(y) > 64) return std::nullopt;
    unsigned k = static_cast<unsigned>(numerator(y));
    if (x < 0) return std::nullopt;
    Natural a = numerator(x), b = denominator(x);
    Natural ra = integer_root(a, k < 2 ? 2 : k), rb = integer_root(b, k < 2 ? 2 : k);
    if (k == 1) return x;
    if (ipow(ra, k) != a || ipow(rb, k) != b) return std::nullopt;
    return Rational(ra, rb);
}

std::optional<Rational> apply(Op op, const Rational& a, const Rational& b) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    switch (op) {
        case Op::add:
            return a + b;
        case Op::sub:
            return a - b;
        case Op::mul:
            return a * b;
        case Op::div:
            if (b == 0) return std::nullopt;
            return a / b;
        case Op::pow: {
            if (denominator(b) != 1) return std::nullopt;
            Integer e = numerator(b);
            if (e > 64 || e < -64) return std::nullopt;  // keeps values printable
            if (e < 0 && a == 0) return std::nullopt;
            unsigned ue = static_cast<unsigned>(e < 0 ? -e : e);
            Rational p(ipow(numerator(a), ue), ipow(denominator(a), ue));
            if (e < 0) p = 1 / p;
            return p;
        }
        case Op::root:
            return exact_root(a, b);
    }
    return std::nullopt;
}

}  // namespace

OperationResult operation_sequence(const std::vector<Op>& ops, std::size_t count, std::optional<std::uint64_t> seed) {
    if (count < 1) throw std::invalid_argument("operation_sequence: count must be >= 1");
    if (ops.empty()) throw std::invalid_argument("operation_sequence: no operations");
    OperationResult res;
    res.terms.push_back(1);
    std::set<Rational> values{Rational(1)};
    std::mt19937_64 gen(seed.value_or(0));
    for (std::size_t n = 1; res.terms.size() < count; ++n) {
        std::set<Rational> next;
        Rational e(static_cast<long long>(n + 1));
        for (auto& v : values)
            for (Op op : ops)
                if (auto r = apply(op, v, e)) next.insert(*r);
        values.swap(next);
        std::vector<Natural> admissible;
        for (auto& v : values)
            if (boost::multiprecision::denominator(v) == 1 && boost::multiprecision::numerator(v) > res.terms.back())
                admissible.push_back(boost::multiprecision::numerator(v));
        if (admissible.empty()) {
            res.truncated = true;
            res.note = "no admissible value over 1.." + std::to_string(n + 1);
            break;
        }
        if (!seed)
            res.terms.push_back(admissible.front());
        else
            res.terms.push_back(admissible[std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(gen)]);
        if (values.size() > 2000000) {
            res.truncated = true;
            res.note = "expression set too large";
            break;
        }
    }
    return res;
}

}  // namespace numwb
