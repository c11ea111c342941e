#include "numwb/explorer.hpp"

#include "numwb/arith.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace numwb {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

std::vector<u64> odd_primes(std::size_t n) {
    auto p = first_primes(n + 1);
    return {p.begin() + 1, p.end()};
}

u64 saturate(u128 v, u64 cap) { return v > cap ? cap : static_cast<u64>(v); }

}  // namespace

u64 goldbach_t(std::size_t n) {
    if (n < 1) throw std::invalid_argument("goldbach_t: n must be >= 1");
    auto p = odd_primes(n);
    std::unordered_set<u64> sums;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) sums.insert(p[i] + p[j]);
    u64 e = 6;
    while (sums.count(e + 2)) e += 2;
    return e;
}

u64 vinogradov_v(std::size_t n) {
    if (n < 1) throw std::invalid_argument("vinogradov_v: n must be >= 1");
    auto p = odd_primes(n);
    std::unordered_set<u64> sums;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) sums.insert(p[i] + p[j] + p[k]);
    u64 v = 9;
    while (sums.count(v + 2)) v += 2;
    return v;
}

TableReport goldbach_table(std::size_t n) {
    TableReport t;
    auto p = odd_primes(n);
    t.row_labels = t.col_labels = p;
    t.cells.assign(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) t.cells[i][j] = p[i] + p[j];
    t.scalar = goldbach_t(n);
    return t;
}

TableReport vinogradov_plane(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw std::invalid_argument("vinogradov_plane: plane out of range");
    TableReport t;
    auto p = odd_primes(n);
    t.row_labels = t.col_labels = p;
    t.cells.assign(n, std::vector<u64>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) t.cells[j][k] = p[i - 1] + p[j] + p[k];
    t.scalar = vinogradov_v(n);
    return t;
}

u64 vinogradov_a(u64 m) {
    if (m % 2 == 0) throw std::invalid_argument("vinogradov_a: m must be odd");
    u64 count = 0;
    auto primes = primes_up_to(m);
    std::vector<u64> odd;
    for (auto q : primes)
        if (q > 2) odd.push_back(q);
    for (auto pi : odd) {
        if (pi + 6 > m) break;
        u64 rest = m - pi;
        for (auto pj : odd) {
            if (2 * pj > rest) break;
            if (rest - pj > 2 && is_prime_u64(rest - pj)) ++count;
        }
    }
    return count;
}

ProductTerm product_sequence(ProductKind kind, std::size_t n, const std::function<Natural(u64)>& custom) {
    if (n < 1) throw std::invalid_argument("product_sequence: n must be >= 1");
    Natural prod = 1;
    std::vector<u64> primes;
    if (kind == ProductKind::prime) primes = first_primes(n);
    Natural fact = 1;
    for (u64 k = 1; k <= n; ++k) {
        switch (kind) {
        case ProductKind::prime: prod *= primes[k - 1]; break;
        case ProductKind::square: prod *= Natural(k) * k; break;
        case ProductKind::cubic: prod *= Natural(k) * k * k; break;
        case ProductKind::factorial:
            fact *= k;
            prod *= fact;
            break;
        case ProductKind::custom:
            if (!custom) throw std::invalid_argument("product_sequence: custom kind needs a function");
            prod *= custom(k);
            break;
        }
    }
    ProductTerm t;
    t.value = prod + 1;
    t.prime = is_prime(t.value);
    return t;
}

namespace {

u64 power_of(u64 x, unsigned e, u64 cap) {
    u128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= x;
        if (v > cap) return cap;
    }
    return static_cast<u64>(v);
}

// The relation over a tuple, saturated just above the limit.
u64 relate(const RecurrenceSetSpec& spec, const std::vector<u64>& xs, u64 cap) {
    if (spec.relation == Relation::custom) return std::min(spec.custom(xs), cap);
    unsigned e = spec.relation == Relation::sum_of_squares ? 2 : 3;
    u128 s = 0;
    for (auto x : xs) s += power_of(x, e, cap);
    return saturate(s, cap);
}

// Calls f on every j-subset of indices [0, n) that contains at least one index >= from.
void for_each_combination(std::size_t n, std::size_t j, std::size_t from,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (j == 0 || j > n) return;
    std::vector<std::size_t> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (idx.back() >= from) f(idx);
        std::size_t i = j;
        while (i > 0 && idx[i - 1] == n - j + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t k = i; k < j; ++k) idx[k] = idx[k - 1] + 1;
    }
}

std::vector<u64> positive_tuples(const RecurrenceSetSpec& spec, u64 limit) {
    const u64 cap = limit + 1;
    std::vector<u64> all = spec.seeds;  // terms by index; seeds may repeat
    std::set<u64> members(all.begin(), all.end());
    std::size_t level_start = 0;
    std::vector<u64> xs(spec.arity);
    while (level_start < all.size()) {
        std::set<u64> fresh;
        for_each_combination(all.size(), spec.arity, level_start, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t i = 0; i < idx.size(); ++i) xs[i] = all[idx[i]];
            u64 v = relate(spec, xs, cap);
            if (v <= limit && !members.count(v)) fresh.insert(v);
        });
        level_start = all.size();
        for (auto v : fresh) {
            members.insert(v);
            all.push_back(v);
        }
    }
    return {members.begin(), members.end()};
}

std::vector<u64> negative_tuples(const RecurrenceSetSpec& spec, u64 limit) {
    const u64 cap = limit + 1;
    std::vector<u64> all = spec.seeds;
    std::unordered_set<u64> excluded;
    std::vector<u64> xs(spec.arity);
    auto exclude_from = [&](std::size_t from) {
        for_each_combination(all.size(), spec.arity, from, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t i = 0; i < idx.size(); ++i) xs[i] = all[idx[i]];
            u64 v = relate(spec, xs, cap);
            if (v <= limit) excluded.insert(v);
        });
    };
    exclude_from(0);
    u64 x = *std::max_element(all.begin(), all.end());
    for (;;) {
        do {
            ++x;
        } while (x <= limit && excluded.count(x));
        if (x > limit) break;
        all.push_back(x);
        exclude_from(all.size() - 1);
    }
    std::sort(all.begin(), all.end());
    return all;
}

// Sums over non-empty index subsets, as a reachability table up to the limit.
struct SubsetSums {
    std::vector<char> hit;
    explicit SubsetSums(u64 limit) : hit(limit + 1, 0) {}
    void add(u64 w) {
        if (w >= hit.size()) return;
        for (u64 s = hit.size() - 1; s > w; --s)
            if (hit[s - w]) hit[s] = 1;
        hit[w] = 1;
    }
    bool has(u64 v) const { return v < hit.size() && hit[v]; }
};

std::vector<u64> subset_builder(const RecurrenceSetSpec& spec, u64 limit) {
    if (spec.relation == Relation::custom)
        throw std::invalid_argument("recurrence_set: subset sums need a power relation");
    unsigned e = spec.relation == Relation::sum_of_squares ? 2 : 3;
    const u64 cap = limit + 1;
    SubsetSums sums(limit);
    std::vector<u64> out = spec.seeds;
    for (auto s : out) sums.add(power_of(s, e, cap));
    bool positive = spec.polarity == Polarity::positive;
    // the first generated term may repeat the last seed, later ones must grow
    u64 x = out.back() - (positive ? 1 : 0);
    for (;;) {
        do {
            ++x;
        } while (x <= limit && sums.has(x) != positive);
        if (x > limit) break;
        out.push_back(x);
        sums.add(power_of(x, e, cap));
    }
    return out;
}

}  // namespace

std::vector<u64> recurrence_set(const RecurrenceSetSpec& spec, u64 limit) {
    if (spec.seeds.empty()) throw std::invalid_argument("recurrence_set: no seeds");
    if (spec.relation == Relation::custom && !spec.custom)
        throw std::invalid_argument("recurrence_set: custom relation without a function");
    if (limit < *std::max_element(spec.seeds.begin(), spec.seeds.end()))
        throw std::invalid_argument("recurrence_set: limit below the seeds");
    if (spec.combine == Combine::subsets) return subset_builder(spec, limit);
    if (spec.arity < 1) throw std::invalid_argument("recurrence_set: arity must be >= 1");
    return spec.polarity == Polarity::positive ? positive_tuples(spec, limit) : negative_tuples(spec, limit);
}

std::vector<u64> progression_avoider(ProgressionKind kind, unsigned t, std::vector<u64> seeds, std::size_t count) {
    if (t < 3) throw std::invalid_argument("progression_avoider: t must be >= 3");
    if (seeds.empty()) throw std::invalid_argument("progression_avoider: no seeds");
    if (seeds.size() >= count) {
        seeds.resize(count);
        return seeds;
    }
    std::unordered_set<u64> in(seeds.begin(), seeds.end());
    auto closes_ap = [&](u64 x) {
        for (auto y : seeds) {
            if (y >= x) continue;
            u64 d = x - y;
            bool all = true;
            for (unsigned i = 2; i < t && all; ++i) all = d * i <= x && in.count(x - d * i);
            if (all) return true;
        }
        return false;
    };
    auto closes_gp = [&](u64 x) {
        for (auto y : seeds) {
            if (y == 0 || y >= x) continue;
            u64 g = gcd_u64(x, y), a = y / g, b = x / g;  // ratio a / b
            u128 cur = y;
            bool all = true;
            for (unsigned i = 2; i < t && all; ++i) {
                all = (cur * a) % b == 0;
                if (all) {
                    cur = cur * a / b;
                    all = in.count(static_cast<u64>(cur)) > 0;
                }
            }
            if (all) return true;
        }
        return false;
    };
    u64 x = *std::max_element(seeds.begin(), seeds.end());
    while (seeds.size() < count) {
        ++x;
        bool bad = kind == ProgressionKind::arithmetic ? closes_ap(x) : closes_gp(x);
        if (bad) continue;
        seeds.push_back(x);
        in.insert(x);
    }
    return seeds;
}

namespace {

// products[r] = products of r distinct terms, kept up to cap
struct ProductSets {
    std::vector<std::set<u64>> by_size;
    u64 cap;
    ProductSets(unsigned k, u64 cap_) : by_size(k + 1), cap(cap_) { by_size[0].insert(1); }
    void add(u64 t) {
        for (std::size_t r = by_size.size() - 1; r >= 1; --r)
            for (auto v : by_size[r - 1]) {
                u128 p = static_cast<u128>(v) * t;
                if (p > cap) break;
                by_size[r].insert(static_cast<u64>(p));
            }
    }
};

}  // namespace

std::vector<u64> multiplicative_builder(BuilderKind kind, unsigned k, std::vector<u64> seeds, std::size_t count) {
    if (kind == BuilderKind::multiplicative) {
        if (seeds.size() < 2) throw std::invalid_argument("multiplicative_builder: needs two seeds");
        while (seeds.size() < count) {
            u64 last = seeds.back(), best = UINT64_MAX;
            for (std::size_t i = 0; i < seeds.size(); ++i)
                for (std::size_t j = i + 1; j < seeds.size(); ++j) {
                    u128 p = static_cast<u128>(seeds[i]) * seeds[j];
                    if (p > last && p < best) best = static_cast<u64>(p);
                }
            if (best == UINT64_MAX) throw std::overflow_error("multiplicative_builder: no larger product");
            seeds.push_back(best);
        }
        return seeds;
    }
    if (k < 1 || seeds.size() < k) throw std::invalid_argument("multiplicative_builder: needs k seeds");
    u64 cap = 64;
    for (;;) {
        // rebuild with a larger cap whenever the candidates outrun it
        ProductSets prods(k, cap);
        std::vector<u64> out;
        bool overflowed = false;
        for (auto s : seeds) {
            out.push_back(s);
            prods.add(s);
        }
        u64 x = out.back();
        while (out.size() < count) {
            do {
                ++x;
            } while (x <= cap && prods.by_size[k].count(x));
            if (x > cap) {
                overflowed = true;
                break;
            }
            out.push_back(x);
            prods.add(x);
        }
        if (!overflowed) {
            out.resize(std::min(out.size(), std::max(count, seeds.size())));
            return out;
        }
        cap *= 4;
    }
}

std::vector<u64> relationship_search(const std::function<Integer(u64)>& f, unsigned p, unsigned q, Law law, u64 lo,
                                     u64 hi) {
    if (p < 1 || q < 1) throw std::invalid_argument("relationship_search: p and q must be >= 1");
    if (lo < 1) throw std::invalid_argument("relationship_search: indexes start at 1");
    std::vector<Integer> v;  // v[i] = f(lo + i)
    for (u64 i = lo; i <= hi + p + q - 1; ++i) v.push_back(f(i));
    auto fold = [&](std::size_t from, unsigned len) {
        Integer acc = v[from];
        for (unsigned i = 1; i < len; ++i) {
            const Integer& x = v[from + i];
            if (law == Law::add) acc += x;
            else if (law == Law::sub) acc -= x;
            else acc *= x;
        }
        return acc;
    };
    std::vector<u64> hits;
    for (u64 first = lo; first <= hi; ++first) {
        std::size_t at = first - lo;
        if (fold(at, p) == fold(at + p, q)) hits.push_back(first - 1);
    }
    return hits;
}

std::vector<std::int64_t> partial_perfect_additive(std::size_t count) {
    if (count < 2) throw std::invalid_argument("partial_perfect_additive: count must be >= 2");
    std::vector<std::int64_t> a{0, 1, 1};  // 1-based
    for (std::size_t n = 3; n <= count; ++n) {
        a.push_back(n % 2 == 1 ? a[(n - 1) / 2 + 1] - 1 : a[n / 2] + 1);
    }
    return {a.begin() + 1, a.end()};
}

namespace {

std::vector<unsigned> padded_digits(u64 n, unsigned width) {
    std::vector<unsigned> d(width, 0);  // most significant first
    for (unsigned i = width; i-- > 0 && n;) {
        d[i] = n % 10;
        n /= 10;
    }
    return d;
}

u64 from_digits(const std::vector<unsigned>& d) {
    u64 v = 0;
    for (auto x : d) v = v * 10 + x;
    return v;
}

u64 reversed(u64 n, unsigned width) {
    auto d = padded_digits(n, width);
    std::reverse(d.begin(), d.end());
    return from_digits(d);
}

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }

}  // namespace

u64 loop_step(const LoopSpec& spec, unsigned width, u64 n) {
    switch (spec.kind) {
    case LoopKind::reverse_subtract: return abs_diff(n, reversed(n, width));
    case LoopKind::subtraction: return abs_diff(reversed(n, width), spec.c);
    case LoopKind::multiplication: {
        auto d = padded_digits(n, width);
        for (auto& x : d) x = static_cast<unsigned>((spec.c * x) % 10);
        return from_digits(d);
    }
    case LoopKind::mixed: {
        u64 a = n / 10 % 10, b = n % 10, s = a + b;
        while (s > 9) s = s / 10 + s % 10;
        return s * 10 + abs_diff(a, b);
    }
    case LoopKind::generic:
        if (!spec.map) throw std::invalid_argument("periodic_loop: generic kind needs a map");
        return spec.map(n);
    }
    return n;
}

LoopReport periodic_loop(const LoopSpec& spec, u64 start) {
    unsigned width = spec.width ? spec.width : static_cast<unsigned>(digit_count(start));
    if (spec.kind == LoopKind::mixed) width = 2;
    if (spec.kind != LoopKind::generic && digit_count(start) > width)
        throw std::invalid_argument("periodic_loop: start wider than the loop width");
    std::vector<u64> path;
    std::unordered_map<u64, std::size_t> seen;
    u64 x = start;
    while (!seen.count(x)) {
        seen.emplace(x, path.size());
        path.push_back(x);
        x = loop_step(spec, width, x);
    }
    LoopReport r;
    r.start = start;
    r.tail = seen[x];
    r.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(r.tail), path.end());
    r.period = r.cycle.size();
    r.invariant_hit = r.period == 1;
    return r;
}

Natural carpet_C(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("carpet_C: k must be <= n");
    if (k == 0) return 1;
    Natural c = 4 * Natural(n);
    for (unsigned i = 1; i < k; ++i) c *= 4 * Natural(n) - 4 * i + 1;
    return c;
}

std::vector<std::vector<Natural>> carpet(unsigned n) {
    if (n < 1) throw std::invalid_argument("carpet: n must be >= 1");
    const int N = static_cast<int>(n);
    // rows y = -n..n, each holding x = -(n - |y|)..(n - |y|)
    std::vector<std::vector<Natural>> rows(2 * n + 1);
    for (int y = -N; y <= N; ++y) rows[y + N].assign(2 * (N - std::abs(y)) + 1, 0);
    Natural total = 0;
    for (int level = 0; level <= N; ++level) {
        Natural value = level == 0 ? Natural(1) : total;
        int dist = N - level;
        for (int y = -N; y <= N; ++y) {
            int half = N - std::abs(y);
            for (int x = -half; x <= half; ++x)
                if (std::abs(x) + std::abs(y) == dist) {
                    rows[y + N][x + half] = value;
                    total += value;
                }
        }
    }
    return rows;
}

std::vector<Natural> carpet_levels(unsigned n) {
    auto rows = carpet(n);
    // level k lies on the middle row at offset k from the left edge
    const auto& mid = rows[n];
    return {mid.begin(), mid.begin() + n + 1};
}

MagicIndex magic_index(unsigned n) {
    if (n != 3) throw std::invalid_argument("magic_index: only the triangle (n = 3) is searched");
    // slots: vertices v0 v1 v2, then the middles of sides v0v1, v1v2, v2v0
    std::vector<int> perm{1, 2, 3, 4, 5, 6};
    std::set<std::vector<int>> seen;
    MagicIndex r;
    r.min_sum = UINT64_MAX;
    std::vector<std::pair<std::vector<int>, u64>> found;
    do {
        int s0 = perm[0] + perm[3] + perm[1], s1 = perm[1] + perm[4] + perm[2], s2 = perm[2] + perm[5] + perm[0];
        if (s0 != s1 || s1 != s2) continue;
        // canonical form over the six symmetries of the triangle
        std::vector<int> best;
        const int rot[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        for (auto& rv : rot)
            for (int flip = 0; flip < 2; ++flip) {
                int v[3] = {rv[0], rv[1], rv[2]};
                if (flip) std::swap(v[1], v[2]);
                auto mid = [&](int a, int b) {
                    if ((a + 1) % 3 == b) return perm[3 + a];
                    return perm[3 + b];
                };
                std::vector<int> img{perm[v[0]], perm[v[1]], perm[v[2]], mid(v[0], v[1]), mid(v[1], v[2]),
                                     mid(v[2], v[0])};
                if (best.empty() || img < best) best = img;
            }
        if (seen.insert(best).second) found.emplace_back(best, static_cast<u64>(s0));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& [g, s] : found) {
        r.min_sum = std::min(r.min_sum, s);
        r.max_sum = std::max(r.max_sum, s);
    }
    r.combinations = found.size();
    for (auto& [g, s] : found)
        if (s == r.min_sum || s == r.max_sum) ++r.extreme_combinations;
    return r;
}

bool magic_square_check(const std::vector<std::vector<std::int64_t>>& grid) {
    const std::size_t n = grid.size();
    if (n == 0) return false;
    for (auto& row : grid)
        if (row.size() != n) return false;
    std::int64_t target = std::accumulate(grid[0].begin(), grid[0].end(), std::int64_t{0});
    std::int64_t d1 = 0, d2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t r = 0, c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            r += grid[i][j];
            c += grid[j][i];
        }
        if (r != target || c != target) return false;
        d1 += grid[i][i];
        d2 += grid[i][n - 1 - i];
    }
    return d1 == target && d2 == target;
}

BadNumberScan bad_number_scan(u64 a_limit, u64 x_limit, u64 y_limit) {
    if (a_limit < 1 || x_limit < 1 || y_limit < 1) throw std::invalid_argument("bad_number_scan: bounds must be >= 1");
    BadNumberScan r;
    for (u64 x = 1; x <= x_limit; ++x) {
        u128 c = static_cast<u128>(x) * x * x;
        u64 lo_sq = c > a_limit ? static_cast<u64>(c - a_limit) : 0;
        u64 y_lo = integer_root_u64(lo_sq, 2);
        if (y_lo == 0) y_lo = 1;
        for (u64 y = y_lo; y <= y_limit; ++y) {
            u128 y2 = static_cast<u128>(y) * y;
            if (y2 > c + a_limit) break;
            u128 a = y2 > c ? y2 - c : c - y2;
            if (a >= 1 && a <= a_limit) r.witnesses.emplace(static_cast<u64>(a), std::make_pair(x, y));
        }
    }
    for (u64 a = 1; a <= a_limit; ++a)
        if (!r.witnesses.count(a)) r.unrepresented.push_back(a);
    return r;
}

std::vector<PrimeTriple> prime_conjecture_count(std::int64_t m, u64 prime_bound) {
    if (m % 2 == 0) throw std::invalid_argument("prime_conjecture_count: m must be odd");
    auto ps = primes_up_to(prime_bound);
    std::vector<PrimeTriple> out;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            std::int64_t r = static_cast<std::int64_t>(ps[i]) + ps[j] - m;
            if (r < 2 || static_cast<u64>(r) > prime_bound || !is_prime_u64(static_cast<u64>(r))) continue;
            if (static_cast<u64>(r) == ps[i] || static_cast<u64>(r) == ps[j]) continue;
            out.push_back({ps[i], ps[j], static_cast<u64>(r)});
        }
    return out;
}

Natural partition_count(u64 n, unsigned power) {
    if (n < 1) throw std::invalid_argument("partition_count: n must be >= 1");
    if (power < 1) throw std::invalid_argument("partition_count: power must be >= 1");
    std::vector<Natural> ways(n + 1, 0);
    ways[0] = 1;
    for (u64 b = 1;; ++b) {
        u64 part = power_of(b, power, n + 1);
        if (part > n) break;
        for (u64 s = part; s <= n; ++s) ways[s] += ways[s - part];
    }
    return ways[n];
}

namespace {

unsigned worker_count(unsigned workers) {
    if (workers) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// S over [lo, hi], split across workers; chunk order keeps the merge stable.
std::vector<u64> s_values(u64 lo, u64 hi, unsigned workers) {
    std::vector<u64> out(hi - lo + 1);
    unsigned w = worker_count(workers);
    u64 span = (hi - lo + 1 + w - 1) / w;
    std::vector<std::future<void>> jobs;
    for (u64 a = lo; a <= hi; a += span) {
        u64 b = std::min(hi, a + span - 1);
        jobs.push_back(std::async(std::launch::async, [&out, lo, a, b] {
            for (u64 n = a; n <= b; ++n) out[n - lo] = S_uncached(n);
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

}  // namespace

std::vector<u64> triplet_search(u64 limit, unsigned workers, u64 from) {
    if (limit < 3) throw std::invalid_argument("triplet_search: limit must be >= 3");
    from = std::max<u64>(from, 4);
    if (from > limit) return {};
    u64 base = from - 2;
    auto s = s_values(base, limit, workers);  // s[n - base] = S(n)
    std::vector<u64> hits;
    for (u64 n = from; n <= limit; ++n)
        if (s[n - base] == s[n - base - 1] + s[n - base - 2]) hits.push_back(n);
    return hits;
}

std::vector<u64> duplet_search(u64 limit, unsigned workers, u64 from) {
    if (limit < 3) throw std::invalid_argument("duplet_search: limit must be >= 3");
    from = std::max<u64>(from, 1);
    if (from > limit) return {};
    auto s = s_values(from, limit + 1, workers);  // s[n - from] = S(n)
    u64 top = *std::max_element(s.begin(), s.end());
    auto ps = primes_up_to(top);
    std::vector<u64> pi(top + 1, 0);  // primes <= i
    std::size_t at = 0;
    for (u64 i = 0; i <= top; ++i) {
        while (at < ps.size() && ps[at] <= i) ++at;
        pi[i] = at;
    }
    std::vector<u64> hits;
    for (u64 n = from; n <= limit; ++n) {
        u64 a = std::min(s[n - from], s[n - from + 1]), b = std::max(s[n - from], s[n - from + 1]);
        if (pi[b] - pi[a - 1] == 0) hits.push_back(n);
    }
    return hits;
}

Natural cyclic_power_sum(const std::vector<u64>& xs) {
    if (xs.size() < 2) throw std::invalid_argument("cyclic_power_sum: needs two or more terms");
    Natural s = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) s += ipow(Natural(xs[i]), static_cast<unsigned>(xs[(i + 1) % xs.size()]));
    return s;
}

std::vector<ExpressionHit> expression_prime_search(unsigned n, u64 bound) {
    if (n < 2) throw std::invalid_argument("expression_prime_search: n must be >= 2");
    if (bound < 2) return {};
    std::vector<ExpressionHit> hits;
    std::vector<u64> xs(n, 2);
    for (;;) {
        u64 g = 0;
        for (auto x : xs) g = gcd_u64(g, x);
        bool canonical = true;
        for (unsigned r = 1; r < n && canonical; ++r) {
            std::vector<u64> rot(xs.begin() + r, xs.end());
            rot.insert(rot.end(), xs.begin(), xs.begin() + r);
            canonical = !(rot < xs);
        }
        if (g == 1 && canonical) {
            Natural v = cyclic_power_sum(xs);
            if (is_prime(v)) hits.push_back({xs, v});
        }
        unsigned i = n;
        while (i > 0 && xs[i - 1] == bound) xs[--i] = 2;
        if (i == 0) break;
        ++xs[i - 1];
    }
    return hits;
}

Natural wilson_witness(const std::vector<Natural>& members) {
    Natural P = 1;
    for (auto& p : members) P *= p;
    Natural c = 0;
    for (auto& p : members) {
        Natural f = 1;
        for (Natural i = 2; i < p; ++i) f *= i;
        c += (f + 1) * (P / p);
    }
    return c;
}

CharacterizationResult simultaneous_prime_check(const std::vector<CharacterizationGroup>& groups) {
    if (groups.empty()) throw std::invalid_argument("simultaneous_prime_check: no groups");
    std::vector<Natural> all;
    for (auto& g : groups) {
        if (g.members.empty()) throw std::invalid_argument("simultaneous_prime_check: empty group");
        for (auto& m : g.members) {
            if (m < 2) throw std::invalid_argument("simultaneous_prime_check: members must be >= 2");
            all.push_back(m);
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (boost::multiprecision::gcd(all[i], all[j]) != 1)
                throw std::invalid_argument("simultaneous_prime_check: members must be pairwise coprime");
    Rational sum = 0;
    for (auto& g : groups) {
        Natural P = 1;
        for (auto& m : g.members) P *= m;
        Natural c = g.c ? *g.c : wilson_witness(g.members);
        sum += Rational(g.a * c, P);
    }
    CharacterizationResult r;
    r.condition_e = denominator(sum) == 1;
    r.direct = std::all_of(all.begin(), all.end(), [](const Natural& m) { return is_prime(m); });
    return r;
}

std::optional<std::function<Natural(u64)>> series_from_name(const std::string& name) {
    if (name == "ones") return [](u64) { return Natural(1); };
    if (name == "powers_of_two") return [](u64 n) { return ipow(Natural(2), static_cast<unsigned>(n)); };
    if (name == "divisor_products") return [](u64 n) { return divisor_product(n); };
    if (name == "factorials")
        return [](u64 n) {
            Natural f = 1;
            for (u64 i = 2; i <= n; ++i) f *= i;
            return f;
        };
    if (name == "primes") return [](u64 n) { return Natural(PrimeTable::shared().nth(n)); };
    if (name == "smarandache") return [](u64 n) { return Natural(S(n)); };
    return std::nullopt;
}

PartialProduct infinite_product_partial(const std::function<Natural(u64)>& a, u64 N) {
    PartialProduct r;
    r.product = 1;
    Natural last = 1;
    for (u64 n = 1; n <= N; ++n) {
        last = a(n);
        if (last == 0) throw std::domain_error("infinite_product_partial: a(" + std::to_string(n) + ") is zero");
        r.product /= Rational(last);
    }
    r.last_term_magnitude = (Rational(1) / Rational(abs(last))).convert_to<double>();
    return r;
}

Natural gadd_on(const BaseSeqSpec& g, std::size_t n) { return concatenated_term(g, n); }

GAddOnReport gadd_on_report(const BaseSeqSpec& g, std::size_t count, bool check_powers) {
    GAddOnReport r;
    for (std::size_t k = 1; k <= count; ++k) {
        Natural v = gadd_on(g, k);
        if (is_prime(v, 25)) {
            r.prime_ranks.push_back(k);
            r.prime_digit_counts.push_back(digit_count(v));
        }
        if (check_powers && is_perfect_power(v)) r.perfect_power_ranks.push_back(k);
    }
    return r;
}

}  // namespace numwb
