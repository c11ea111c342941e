#include "numwb/sieves.hpp"

#include "numwb/numeric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace numwb {

namespace {

using u64 = std::uint64_t;

const std::vector<std::pair<std::string, SieveKind::Tag>>& tag_table() {
    static const std::vector<std::pair<std::string, SieveKind::Tag>> t = {
        {"cube_free", SieveKind::cube_free},
        {"m_power_free", SieveKind::m_power_free},
        {"square_free", SieveKind::square_free},
        {"irrational_root", SieveKind::irrational_root},
        {"odd_sieve", SieveKind::odd_sieve},
        {"binary", SieveKind::binary},
        {"trinary", SieveKind::trinary},
        {"n_ary", SieveKind::n_ary},
        {"k_ary_consecutive", SieveKind::k_ary_consecutive},
        {"consecutive", SieveKind::consecutive},
        {"general", SieveKind::general},
        {"more_general", SieveKind::more_general},
        {"random", SieveKind::random},
    };
    return t;
}

u64 power_free_exponent(const SieveKind& k) {
    switch (k.tag) {
        case SieveKind::cube_free:
            return 3;
        case SieveKind::square_free:
            return 2;
        case SieveKind::m_power_free:
            if (k.param < 2) throw std::invalid_argument("m_power_free needs m >= 2");
            return k.param;
        default:
            return 0;
    }
}

// Passes over the remaining list; pass i deletes every step_i-th element.
void power_passes(std::vector<u64>& list, u64 base, std::vector<u64>& log) {
    for (u64 step = base; step <= list.size(); step *= base) {
        std::vector<u64> keep;
        keep.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i)
            if ((i + 1) % step != 0) keep.push_back(list[i]);
        log.push_back(list.size() - keep.size());
        list.swap(keep);
    }
}

// Step i: elements before `frozen` are settled. Counting from the first
// unsettled element as position 1, every u_i-th is deleted; the v_i-th is
// kept and everything up to it becomes settled.
void generator_passes(std::vector<u64>& list, const std::vector<u64>& u, const std::vector<u64>& v,
                      std::vector<u64>& log) {
    std::size_t frozen = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (frozen + u[i] > list.size()) break;
        std::vector<u64> keep(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(frozen));
        for (std::size_t j = frozen; j < list.size(); ++j)
            if ((j - frozen + 1) % u[i] != 0) keep.push_back(list[j]);
        log.push_back(list.size() - keep.size());
        list.swap(keep);
        frozen += v[i];
    }
}

void check_generators(const std::vector<u64>& u, const std::vector<u64>& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 2) throw std::invalid_argument("sieve generator u_i must be > 1");
        if (i && u[i] <= u[i - 1]) throw std::invalid_argument("sieve generator u must be strictly increasing");
        if (v[i] < 1 || v[i] >= u[i]) throw std::invalid_argument("sieve generator v_i must satisfy 1 <= v_i < u_i");
    }
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> ps;
    if (n < 2) return ps;
    for (auto [p, e] : factorize_u64(n)) ps.push_back(p);
    return ps;
}

}  // namespace

std::optional<SieveKind::Tag> sieve_tag_from_name(const std::string& name) {
    for (auto& [k, t] : tag_table())
        if (k == name) return t;
    return std::nullopt;
}

std::string sieve_tag_name(SieveKind::Tag t) {
    for (auto& [k, g] : tag_table())
        if (g == t) return k;
    return "?";
}

std::vector<std::string> sieve_tag_names() {
    std::vector<std::string> out;
    for (auto& [k, t] : tag_table()) out.push_back(k);
    return out;
}

bool is_value_sieve(SieveKind::Tag t) {
    return t == SieveKind::cube_free || t == SieveKind::m_power_free || t == SieveKind::square_free ||
           t == SieveKind::irrational_root || t == SieveKind::odd_sieve;
}

bool survivor_predicate(const SieveKind& kind, std::uint64_t n) {
    if (!is_value_sieve(kind.tag)) throw std::invalid_argument("positional sieves have no survivor predicate");
    if (kind.tag == SieveKind::odd_sieve) return n % 2 == 1 && !is_prime_u64(n + 2);
    if (n < 2) return false;
    if (kind.tag == SieveKind::irrational_root) return !is_perfect_power(Natural(n));
    u64 m = power_free_exponent(kind);
    for (auto [p, e] : factorize_u64(n))
        if (e >= m) return false;
    return true;
}

SieveRun run_sieve(const SieveKind& kind, std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("run_sieve: limit must be >= 1");
    SieveRun run;
    run.kind = kind;
    run.limit = limit;
    auto& out = run.survivors;
    switch (kind.tag) {
        case SieveKind::cube_free:
        case SieveKind::m_power_free:
        case SieveKind::square_free: {
            // strike multiples of p^m for every prime p
            u64 m = power_free_exponent(kind);
            std::vector<bool> dead(limit + 1, false);
            for (u64 p : primes_up_to(integer_root_u64(limit, static_cast<unsigned>(m)))) {
                u64 pm = static_cast<u64>(ipow(Natural(p), static_cast<unsigned>(m)));
                for (u64 x = pm; x <= limit; x += pm) dead[x] = true;
            }
            for (u64 x = 2; x <= limit; ++x)
                if (!dead[x]) out.push_back(x);
            break;
        }
        case SieveKind::irrational_root: {
            // strike every k-th power (k >= 2) of every base >= 2
            std::vector<bool> dead(limit + 1, false);
            for (u64 b = 2; b * b <= limit; ++b)
                for (u64 x = b * b; x <= limit; x *= b) {
                    dead[x] = true;
                    if (x > limit / b) break;
                }
            for (u64 x = 2; x <= limit; ++x)
                if (!dead[x]) out.push_back(x);
            break;
        }
        case SieveKind::odd_sieve: {
            // odd numbers, minus p - 2 for every prime p
            std::vector<bool> dead(limit + 1, false);
            for (u64 p : primes_up_to(limit + 2))
                if (p >= 3) dead[p - 2] = true;
            for (u64 x = 1; x <= limit; x += 2)
                if (!dead[x]) out.push_back(x);
            break;
        }
        case SieveKind::binary:
        case SieveKind::trinary:
        case SieveKind::n_ary: {
            u64 base = kind.tag == SieveKind::binary ? 2 : kind.tag == SieveKind::trinary ? 3 : kind.param;
            if (base < 2) throw std::invalid_argument("n_ary sieve needs n >= 2");
            for (u64 x = 1; x <= limit; ++x) out.push_back(x);
            power_passes(out, base, run.deletion_log);
            break;
        }
        case SieveKind::k_ary_consecutive: {
            // one pass over 1, 2, 3, ...: keep the next k, drop the following k+1, k = 2, 3, ...
            u64 x = 1;
            for (u64 k = 2; x <= limit; ++k) {
                for (u64 i = 0; i < k && x <= limit; ++i) out.push_back(x++);
                run.deletion_log.push_back(std::min<u64>(k + 1, limit + 1 - std::min(x, limit + 1)));
                x += k + 1;
            }
            break;
        }
        case SieveKind::consecutive:
        case SieveKind::general:
        case SieveKind::more_general: {
            std::vector<u64> u = kind.u, v = kind.v;
            if (kind.tag == SieveKind::consecutive) {
                u.clear();
                for (u64 k = 2; k <= limit + 1; ++k) u.push_back(k);
            }
            if (kind.tag != SieveKind::more_general) v.assign(u.size(), 1);
            if (v.size() != u.size()) throw std::invalid_argument("more_general sieve needs |v| = |u|");
            check_generators(u, v);
            for (u64 x = 1; x <= limit; ++x) out.push_back(x);
            generator_passes(out, u, v, run.deletion_log);
            break;
        }
        case SieveKind::random: {
            std::vector<bool> alive(limit + 1, true);
            alive[0] = false;
            std::mt19937_64 gen(kind.seed);
            u64 last = 1;
            std::size_t next_choice = 0;
            for (;;) {
                u64 u = 0;
                if (next_choice < kind.choices.size()) {
                    u = kind.choices[next_choice++];
                    if (u <= last || u > limit || !alive[u])
                        throw std::invalid_argument("random sieve: choice " + std::to_string(u) +
                                                    " is not a remaining number above the previous one");
                } else {
                    std::vector<u64> cand;
                    for (u64 x = last + 1; x <= limit; ++x)
                        if (alive[x]) cand.push_back(x);
                    if (cand.empty()) break;
                    u = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(gen)];
                }
                u64 removed = 0;
                for (u64 p : prime_divisors(u))
                    for (u64 x = p; x <= limit; x += p)
                        if (x != u && alive[x]) {
                            alive[x] = false;
                            ++removed;
                        }
                run.chosen.push_back(u);
                run.deletion_log.push_back(removed);
                last = u;
            }
            for (u64 x = 1; x <= limit; ++x)
                if (alive[x]) out.push_back(x);
            break;
        }
    }
    return run;
}

}  // namespace numwb
