// numwb: command line front end for the workbench library.

#include "numwb/arith.hpp"
#include "numwb/cache.hpp"
#include "numwb/cli_support.hpp"
#include "numwb/explorer.hpp"
#include "numwb/radix.hpp"
#include "numwb/seq_digits.hpp"
#include "numwb/sieves.hpp"
#include "numwb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace numwb;
using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

namespace {

struct Globals {
    std::string format = "table";
    std::optional<u64> seed;
    std::optional<double> timeout;
    std::string out;
    bool with_runtime = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << text;
}

std::vector<IndexedValue> indexed(const std::vector<std::string>& values, u64 first) {
    std::vector<IndexedValue> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back({first + i, values[i]});
    return out;
}

template <class V>
std::vector<std::string> to_strings(const V& v) {
    std::vector<std::string> out;
    for (auto& x : v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Natural>)
            out.push_back(to_string(x));
        else
            out.push_back(std::to_string(x));
    }
    return out;
}

u64 require_seed(const Globals& g, const std::string& what) {
    if (!g.seed) throw UsageError(what + " needs --seed");
    return *g.seed;
}

// ---- seq -------------------------------------------------------------------

struct SeqArgs {
    std::string family;
    u64 count = 10;
    unsigned base = 10;
    std::string source = "naturals", direction = "forward";
    std::string ops = "add,sub,mul,div";
    u64 n = 7;
    std::string digits = "1";
    u64 a1 = 2;
    std::string atoms = "1,2";
};

std::optional<Op> op_from_name(const std::string& s) {
    static const std::map<std::string, Op> m{{"add", Op::add}, {"sub", Op::sub}, {"mul", Op::mul},
                                             {"div", Op::div}, {"pow", Op::pow}, {"root", Op::root}};
    auto it = m.find(s);
    return it == m.end() ? std::nullopt : std::optional<Op>(it->second);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int cmd_seq(const Globals& g, const SeqArgs& a) {
    auto fmt = parse_format(g.format);
    std::vector<IndexedValue> terms;
    const std::string& f = a.family;
    if (auto fam = family_from_name(f)) {
        for (u64 n = 1; n <= a.count; ++n) {
            Term t = term(FamilySpec{*fam, a.base, {}}, n);
            terms.push_back({n, t.empty() ? std::nullopt : std::optional<std::string>(t.digits)});
        }
    } else if (f == "concatenated") {
        auto src = source_from_name(a.source);
        if (!src || *src == Source::custom) throw UsageError("unknown source: " + a.source);
        if (a.direction != "forward" && a.direction != "backward") throw UsageError("direction is forward or backward");
        BaseSeqSpec spec{*src, a.direction == "forward" ? Direction::forward : Direction::backward, {}};
        for (u64 n = 1; n <= a.count; ++n) terms.push_back({n, to_string(concatenated_term(spec, n))});
    } else if (f == "operation") {
        if (a.count == 0) return emit(g, render_sequence({}, fmt, f)), exit_ok;
        std::vector<Op> ops;
        for (auto& s : split_commas(a.ops)) {
            auto op = op_from_name(s);
            if (!op) throw UsageError("unknown operation: " + s);
            ops.push_back(*op);
        }
        auto r = operation_sequence(ops, a.count, g.seed);
        terms = indexed(to_strings(r.terms), 1);
        if (r.truncated) std::cerr << "truncated: " << r.note << "\n";
    } else if (f == "uniform") {
        std::vector<unsigned> ds;
        for (auto d : parse_u64_list(a.digits)) ds.push_back(static_cast<unsigned>(d));
        auto r = uniform_sequence(a.n, ds, a.base, a.count);
        if (r.empty) std::cerr << "empty: no multiple of " << a.n << " uses exactly these digits\n";
        terms = indexed(to_strings(r.terms), 1);
    } else if (f == "almost_first" || f == "almost_second") {
        auto r = almost_primes(f == "almost_first" ? AlmostKind::first : AlmostKind::second, a.a1, a.count);
        terms = indexed(to_strings(r), 1);
    } else if (f == "constructive") {
        terms = indexed(to_strings(constructive_terms(split_commas(a.atoms), a.count)), 1);
    } else {
        static const std::map<std::string, SubKind> subs{
            {"crescendo", SubKind::crescendo},
            {"decrescendo", SubKind::decrescendo},
            {"cresc_pyramidal", SubKind::cresc_pyramidal},
            {"decresc_pyramidal", SubKind::decresc_pyramidal},
            {"cresc_symmetric", SubKind::cresc_symmetric},
            {"decresc_symmetric", SubKind::decresc_symmetric},
            {"permutation_sub", SubKind::permutation_sub},
        };
        auto it = subs.find(f);
        if (it == subs.end()) {
            std::string known;
            for (auto& n : family_names()) known += " " + n;
            throw UsageError("unknown family: " + f + "\nfamilies:" + known +
                             " concatenated operation uniform almost_first almost_second constructive crescendo "
                             "decrescendo cresc_pyramidal decresc_pyramidal cresc_symmetric decresc_symmetric "
                             "permutation_sub");
        }
        for (u64 i = 1; i <= a.count; ++i) terms.push_back({i, std::to_string(subsequence_closed_form(it->second, i))});
    }
    emit(g, render_sequence(terms, fmt, f));
    return exit_ok;
}

// ---- sieve -----------------------------------------------------------------

struct SieveArgs {
    std::string kind;
    u64 limit = 100;
    u64 param = 0;
    std::string u, v, choices;
};

int cmd_sieve(const Globals& g, const SieveArgs& a) {
    auto tag = sieve_tag_from_name(a.kind);
    if (!tag) {
        std::string known;
        for (auto& n : sieve_tag_names()) known += " " + n;
        throw UsageError("unknown sieve: " + a.kind + "\nsieves:" + known);
    }
    SieveKind k;
    k.tag = *tag;
    k.param = a.param;
    if (!a.u.empty()) k.u = parse_u64_list(a.u);
    if (!a.v.empty()) k.v = parse_u64_list(a.v);
    if (!a.choices.empty()) k.choices = parse_u64_list(a.choices);
    if (k.tag == SieveKind::random) k.seed = require_seed(g, "the random sieve");
    auto run = run_sieve(k, a.limit);
    if (k.tag == SieveKind::random) {
        std::cerr << "choices:";
        for (auto c : run.chosen) std::cerr << ' ' << c;
        std::cerr << '\n';
    }
    emit(g, render_sequence(indexed(to_strings(run.survivors), 1), parse_format(g.format), a.kind));
    return exit_ok;
}

// ---- fn --------------------------------------------------------------------

struct FnArgs {
    std::string name;
    std::string range = "1..20";
    u64 param = 2;
};

int cmd_fn(const Globals& g, const FnArgs& a) {
    auto r = parse_range(a.range);
    if (r.lo == 0) throw UsageError("ranges start at 1");
    auto fmt = parse_format(g.format);
    unsigned p = static_cast<unsigned>(a.param);
    std::vector<std::string> values;
    std::string cache_id = a.name == "S_p" ? "S_p:" + std::to_string(a.param) : a.name;
    if (is_cacheable(cache_id)) {
        auto cv = cached_values(cache_directory(), cache_id, r.lo, r.hi);
        values = to_strings(cv.values);
    } else {
        auto opt = [](std::optional<u64> v) { return v ? std::to_string(*v) : std::string("unknown"); };
        static const std::map<std::string, std::function<std::string(u64, unsigned)>> fns{
            {"quotient", [](u64 n, unsigned) { return to_string(quotient(n)); }},
            {"df", [](u64 n, unsigned) { return std::to_string(double_factorial_df(n)); }},
            {"df_complement", [](u64 n, unsigned) { return to_string(double_factorial_complement(n)); }},
            {"power_complement", [](u64 n, unsigned m) { return to_string(power_complement(n, m)); }},
            {"prime_additive_complement", [](u64 n, unsigned) { return std::to_string(prime_additive_complement(n)); }},
            {"power_residue", [](u64 n, unsigned m) { return to_string(m_power_residue(n, m)); }},
            {"exponent", [](u64 n, unsigned q) { return std::to_string(exponent(n, q)); }},
            {"SP", [](u64 n, unsigned) { return std::to_string(SP(n)); }},
            {"ceil", [](u64 n, unsigned k) { return std::to_string(ceil_k(n, k)); }},
            {"SK", [opt](u64 n, unsigned) { return opt(SK(n)); }},
            {"SW", [opt](u64 n, unsigned) { return opt(SW(n)); }},
            {"SNTP", [opt](u64 n, unsigned) { return opt(SNTP(n)); }},
            {"analogue", [](u64 n, unsigned) { return std::to_string(analogue_a(n)); }},
            {"residual", [](u64 n, unsigned) { return to_string(residual_L(0, n)); }},
            {"divisor_product", [](u64 n, unsigned) { return to_string(divisor_product(n)); }},
            {"proper_divisor_product", [](u64 n, unsigned) { return to_string(proper_divisor_product(n)); }},
        };
        auto it = fns.find(a.name);
        if (it == fns.end()) {
            std::string known = " S Z S_p";
            for (auto& [k, v] : fns) known += " " + k;
            throw UsageError("unknown function: " + a.name + "\nfunctions:" + known);
        }
        for (u64 n = r.lo; n <= r.hi; ++n) values.push_back(it->second(n, p));
    }
    emit(g, render_sequence(indexed(values, r.lo), fmt, a.name));
    return exit_ok;
}

// ---- base ------------------------------------------------------------------

struct BaseArgs {
    std::string action;
    std::vector<std::string> operands;
    std::string base = "factorial";
    unsigned param = 0;
    std::string range = "0..20";
};

int cmd_base(const Globals& g, const BaseArgs& a) {
    auto b = base_from_name(a.base, a.param);
    if (!b) throw UsageError("unknown base: " + a.base);
    auto need = [&](std::size_t k) {
        if (a.operands.size() != k) throw UsageError("base " + a.action + " takes " + std::to_string(k) + " operand(s)");
    };
    if (a.action == "encode") {
        need(1);
        emit(g, encode(parse_natural(a.operands[0]), *b).str() + "\n");
    } else if (a.action == "decode") {
        need(1);
        emit(g, to_string(decode(parse_numeral(a.operands[0]), *b)) + "\n");
    } else if (a.action == "add" || a.action == "sub") {
        need(2);
        auto x = parse_numeral(a.operands[0]), y = parse_numeral(a.operands[1]);
        emit(g, (a.action == "add" ? factorial_add(x, y) : factorial_sub(x, y)).str() + "\n");
    } else if (a.action == "list") {
        auto r = parse_range(a.range);
        std::vector<std::string> v;
        for (u64 n = r.lo; n <= r.hi; ++n) v.push_back(encode(n, *b).str());
        emit(g, render_sequence(indexed(v, r.lo), parse_format(g.format), b->name()));
    } else {
        throw UsageError("base actions: encode, decode, add, sub, list");
    }
    return exit_ok;
}

// ---- arith -----------------------------------------------------------------

struct ArithArgs {
    std::string action;
    std::vector<std::string> operands;
    unsigned k = 2;
    std::optional<std::int64_t> m;
    std::string mode = "product";
    bool show_table = false;
};

int cmd_arith(const Globals& g, const ArithArgs& a) {
    auto need = [&](std::size_t k) {
        if (a.operands.size() != k)
            throw UsageError("arith " + a.action + " takes " + std::to_string(k) + " operand(s)");
    };
    std::ostringstream os;
    if (a.action == "romanian") {
        need(2);
        auto r = romanian_multiply(parse_natural(a.operands[0]), parse_natural(a.operands[1]), a.k);
        if (a.show_table)
            os << r.table.render(false, a.k);
        else
            os << to_string(r.product) << "\n";
    } else if (a.action == "divpow") {
        need(3);
        auto k = static_cast<unsigned>(std::stoul(a.operands[1]));
        auto n = static_cast<unsigned>(std::stoul(a.operands[2]));
        auto r = divide_by_power(parse_natural(a.operands[0]), k, n);
        if (a.show_table) os << r.table.render(true, k);
        os << "quotient " << to_string(r.quotient) << " rest " << to_string(r.remainder) << "\n";
    } else if (a.action == "fold") {
        need(2);
        FoldSpec f{std::stoll(a.operands[0]), std::stoll(a.operands[1]), a.m, FoldMode::product};
        if (a.mode == "product") {
            os << to_string(smarandacheial(f)) << "\n";
        } else if (a.mode == "signed" || a.mode == "absolute") {
            f.mode = a.mode == "signed" ? FoldMode::signed_sum : FoldMode::absolute_sum;
            os << to_string(summant(f)) << "\n";
        } else {
            throw UsageError("fold modes: product, signed, absolute");
        }
    } else {
        throw UsageError("arith actions: romanian, divpow, fold");
    }
    emit(g, os.str());
    return exit_ok;
}

// ---- explore ---------------------------------------------------------------

struct ExploreArgs {
    std::string experiment;
    u64 limit = 1000, count = 20, n = 14, start = 52, bound = 100, a_limit = 20, x_limit = 10000,
        y_limit = 1000000;
    std::int64_t m = 1;
    unsigned width = 0, power = 2, p = 2, q = 2, t = 3, k = 2, workers = 0;
    u64 c = 0;
    std::string kind, set = "ss2", seeds, law = "add", range = "1..100", source = "odds", series = "primes";
    bool powers = false;
};

struct ExperimentResult {
    json params = json::object();
    std::vector<std::string> hits;
    json bounds = json::object();
    bool incomplete = false;
};

RecurrenceSetSpec recurrence_from_name(const std::string& name) {
    RecurrenceSetSpec s;
    std::string rest = name;
    if (rest.rfind("n", 0) == 0) {
        s.polarity = Polarity::negative;
        rest = rest.substr(1);
    }
    if (rest == "ss2" || rest == "cs2") {
        s.combine = Combine::tuples;
    } else if (rest == "ss1" || rest == "cs1") {
        s.combine = Combine::subsets;
        s.seeds = {1};
    } else {
        throw UsageError("recurrence sets: ss2 ss1 nss2 nss1 cs2 cs1 ncs2 ncs1");
    }
    s.relation = rest[0] == 's' ? Relation::sum_of_squares : Relation::sum_of_cubes;
    return s;
}

LoopKind loop_kind(const std::string& s) {
    if (s == "reverse_subtract" || s.empty()) return LoopKind::reverse_subtract;
    if (s == "subtraction") return LoopKind::subtraction;
    if (s == "multiplication") return LoopKind::multiplication;
    if (s == "mixed") return LoopKind::mixed;
    throw UsageError("loop kinds: reverse_subtract, subtraction, multiplication, mixed");
}

// Searches run in chunks so a timeout can stop between them.
template <class F>
void chunked(ExperimentResult& r, const Deadline& d, u64 first, u64 limit, F search) {
    const u64 step = 1 << 16;
    u64 done = first - 1;
    for (u64 lo = first; lo <= limit; lo += step) {
        if (d.expired()) {
            r.incomplete = true;
            break;
        }
        u64 hi = std::min(limit, lo + step - 1);
        for (auto h : search(lo, hi)) r.hits.push_back(std::to_string(h));
        done = hi;
    }
    r.bounds["searched_to"] = done;
    r.bounds["limit"] = limit;
}

ExperimentResult run_experiment(const ExploreArgs& a, const Globals& g) {
    Deadline d(g.timeout);
    ExperimentResult r;
    const std::string& e = a.experiment;
    auto as_str = [](auto&& v) { return to_strings(v); };
    if (e == "triplets") {
        r.params["limit"] = a.limit;
        if (a.limit < 3) throw UsageError("triplets need --limit >= 3");
        chunked(r, d, 4, a.limit, [&](u64 lo, u64 hi) { return triplet_search(std::max<u64>(hi, 3), a.workers, lo); });
    } else if (e == "duplets") {
        r.params["limit"] = a.limit;
        if (a.limit < 3) throw UsageError("duplets need --limit >= 3");
        chunked(r, d, 1, a.limit, [&](u64 lo, u64 hi) { return duplet_search(std::max<u64>(hi, 3), a.workers, lo); });
    } else if (e == "goldbach" || e == "vinogradov") {
        r.params["n"] = a.n;
        for (u64 i = 1; i <= a.n; ++i)
            r.hits.push_back(std::to_string(e == "goldbach" ? goldbach_t(i) : vinogradov_v(i)));
    } else if (e == "vinogradov_a") {
        r.params["limit"] = a.limit;
        for (u64 m = 1; m <= a.limit; m += 2) r.hits.push_back(std::to_string(vinogradov_a(m)));
    } else if (e == "products") {
        static const std::map<std::string, ProductKind> kinds{{"prime", ProductKind::prime},
                                                              {"square", ProductKind::square},
                                                              {"cubic", ProductKind::cubic},
                                                              {"factorial", ProductKind::factorial}};
        auto it = kinds.find(a.kind.empty() ? "prime" : a.kind);
        if (it == kinds.end()) throw UsageError("product kinds: prime, square, cubic, factorial");
        r.params["kind"] = it->first;
        r.params["count"] = a.count;
        json primes = json::array();
        for (u64 i = 1; i <= a.count; ++i) {
            auto t = product_sequence(it->second, i);
            r.hits.push_back(to_string(t.value));
            if (t.prime) primes.push_back(i);
        }
        r.bounds["prime_ranks"] = primes;
    } else if (e == "recurrence") {
        auto spec = recurrence_from_name(a.set);
        if (!a.seeds.empty()) spec.seeds = parse_u64_list(a.seeds);
        r.params["set"] = a.set;
        r.params["limit"] = a.limit;
        r.hits = as_str(recurrence_set(spec, a.limit));
    } else if (e == "non_ap" || e == "non_gp") {
        auto seeds = a.seeds.empty() ? std::vector<u64>{1, 2} : parse_u64_list(a.seeds);
        r.params["t"] = a.t;
        r.params["count"] = a.count;
        r.hits = as_str(progression_avoider(e == "non_ap" ? ProgressionKind::arithmetic : ProgressionKind::geometric,
                                            a.t, seeds, a.count));
    } else if (e == "multiplicative" || e == "non_multiplicative") {
        auto seeds = a.seeds.empty() ? std::vector<u64>{2, 3} : parse_u64_list(a.seeds);
        r.params["k"] = a.k;
        r.params["count"] = a.count;
        r.hits = as_str(multiplicative_builder(
            e == "multiplicative" ? BuilderKind::multiplicative : BuilderKind::non_multiplicative, a.k, seeds, a.count));
    } else if (e == "relationships") {
        static const std::map<std::string, Law> laws{{"add", Law::add}, {"sub", Law::sub}, {"mul", Law::mul}};
        auto law = laws.find(a.law);
        if (law == laws.end()) throw UsageError("laws: add, sub, mul");
        auto rg = parse_range(a.range);
        r.params["p"] = a.p;
        r.params["q"] = a.q;
        r.params["law"] = a.law;
        r.hits = as_str(relationship_search([](u64 n) { return Integer(S(n)); }, a.p, a.q, law->second, rg.lo, rg.hi));
        r.bounds["range"] = a.range;
    } else if (e == "partial_perfect") {
        r.params["count"] = a.count;
        r.hits = as_str(partial_perfect_additive(a.count));
    } else if (e == "loop") {
        LoopSpec spec{loop_kind(a.kind), a.width, a.c, {}};
        auto rep = periodic_loop(spec, a.start);
        r.params["kind"] = a.kind.empty() ? "reverse_subtract" : a.kind;
        r.params["start"] = a.start;
        r.hits = as_str(rep.cycle);
        r.bounds["tail"] = rep.tail;
        r.bounds["period"] = rep.period;
        r.bounds["closing_index"] = rep.closing_index();
        r.bounds["invariant"] = rep.invariant_hit;
    } else if (e == "loop_domain") {
        // Every start of the given width; hits are the distinct cycles.
        if (a.width == 0) throw UsageError("loop_domain needs --width");
        LoopSpec spec{loop_kind(a.kind), a.width, a.c, {}};
        u64 lo = 1;
        for (unsigned i = 1; i < a.width; ++i) lo *= 10;
        std::map<std::vector<u64>, u64> cycles;
        u64 longest_start = lo, longest = 0, done = lo - 1;
        for (u64 n = lo; n < lo * 10; ++n) {
            if ((n & 1023) == 0 && d.expired()) {
                r.incomplete = true;
                break;
            }
            auto rep = periodic_loop(spec, n);
            auto cyc = rep.cycle;
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            ++cycles[cyc];
            if (rep.closing_index() > longest) longest = rep.closing_index(), longest_start = n;
            done = n;
        }
        for (auto& [cyc, cnt] : cycles) {
            std::string s;
            for (auto x : cyc) s += (s.empty() ? "" : " ") + std::to_string(x);
            r.hits.push_back(s + " x" + std::to_string(cnt));
        }
        r.params["width"] = a.width;
        r.bounds["searched_to"] = done;
        r.bounds["longest_start"] = longest_start;
        r.bounds["longest_closing_index"] = longest;
    } else if (e == "carpet") {
        r.params["n"] = a.n;
        for (unsigned k = 0; k <= a.n; ++k) r.hits.push_back(to_string(carpet_C(static_cast<unsigned>(a.n), k)));
    } else if (e == "magic") {
        auto mi = magic_index(3);
        r.params["n"] = 3;
        r.hits = {std::to_string(mi.min_sum), std::to_string(mi.max_sum), std::to_string(mi.combinations)};
        r.bounds["extreme_combinations"] = mi.extreme_combinations;
    } else if (e == "bad_numbers") {
        auto scan = bad_number_scan(a.a_limit, a.x_limit, a.y_limit);
        r.params["a_limit"] = a.a_limit;
        r.params["x_limit"] = a.x_limit;
        r.params["y_limit"] = a.y_limit;
        r.hits = as_str(scan.unrepresented);
    } else if (e == "prime_conjecture") {
        r.params["m"] = a.m;
        r.params["bound"] = a.bound;
        for (auto& t : prime_conjecture_count(a.m, a.bound))
            r.hits.push_back(std::to_string(t.p) + "+" + std::to_string(t.q) + "-" + std::to_string(t.r));
    } else if (e == "partitions") {
        r.params["n"] = a.n;
        r.params["power"] = a.power;
        r.hits = {to_string(partition_count(a.n, a.power))};
    } else if (e == "expressions") {
        r.params["n"] = a.n;
        r.params["bound"] = a.bound;
        for (auto& h : expression_prime_search(static_cast<unsigned>(a.n), a.bound)) {
            std::string s;
            for (auto x : h.xs) s += (s.empty() ? "" : ",") + std::to_string(x);
            r.hits.push_back(s + ":" + to_string(h.value));
        }
    } else if (e == "gadd_on") {
        auto src = source_from_name(a.source);
        if (!src || *src == Source::custom) throw UsageError("unknown source: " + a.source);
        BaseSeqSpec spec{*src, Direction::forward, {}};
        r.params["source"] = a.source;
        r.params["count"] = a.count;
        json lengths = json::array(), powers = json::array();
        u64 done = 0;
        for (u64 i = 1; i <= a.count; ++i) {
            if (d.expired()) {
                r.incomplete = true;
                break;
            }
            auto v = gadd_on(spec, i);
            if (is_prime(v, 25)) {
                r.hits.push_back(std::to_string(i));
                lengths.push_back(digit_count(v));
            }
            if (a.powers && is_perfect_power(v)) powers.push_back(i);
            done = i;
        }
        r.bounds["searched_to"] = done;
        r.bounds["prime_digit_counts"] = lengths;
        if (a.powers) r.bounds["perfect_power_ranks"] = powers;
    } else if (e == "infinite_product") {
        auto f = series_from_name(a.series);
        if (!f) throw UsageError("series: ones, powers_of_two, divisor_products, factorials, primes, smarandache");
        auto pp = infinite_product_partial(*f, a.count);
        r.params["series"] = a.series;
        r.params["count"] = a.count;
        std::ostringstream num;
        num << pp.product;
        r.hits = {num.str()};
        r.bounds["last_term_magnitude"] = pp.last_term_magnitude;
    } else {
        throw UsageError(
            "unknown experiment: " + e +
            "\nexperiments: triplets duplets goldbach vinogradov vinogradov_a products recurrence non_ap non_gp "
            "multiplicative non_multiplicative relationships partial_perfect loop loop_domain carpet magic "
            "bad_numbers prime_conjecture partitions expressions gadd_on infinite_product");
    }
    return r;
}

int cmd_explore(const Globals& g, const ExploreArgs& a) {
    auto fmt = parse_format(g.format);
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_experiment(a, g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (fmt == OutputFormat::jsonl) {
        json j;
        j["experiment"] = a.experiment;
        j["params"] = r.params;
        j["hits"] = r.hits;
        j["bounds"] = r.bounds;
        j["incomplete"] = r.incomplete;
        if (g.with_runtime) j["runtime"] = secs;
        emit(g, j.dump() + "\n");
    } else {
        emit(g, render_sequence(indexed(r.hits, 1), fmt, a.experiment));
    }
    if (r.incomplete) {
        std::cerr << "timeout: partial result";
        if (r.bounds.contains("searched_to")) std::cerr << ", searched to " << r.bounds["searched_to"].dump();
        std::cerr << "\n";
        return exit_timeout;
    }
    return exit_ok;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& scope, const std::string& report, unsigned workers) {
    auto fmt = parse_format(g.format);
    warm_S_from_cache(cache_directory());
    auto rep = run_verification(scope, workers);
    emit(g, render_report(rep, fmt));
    if (!report.empty()) {
        std::ofstream f(report, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + report);
        f << render_report(rep, OutputFormat::jsonl);
    }
    return rep.count(CheckStatus::mismatch_new) ? exit_mismatch : exit_ok;
}

// ---- cache -----------------------------------------------------------------

int cmd_cache(const Globals& g, const std::string& action, const std::string& function, const std::string& range,
              const std::string& dir_opt) {
    auto dir = dir_opt.empty() ? cache_directory() : std::filesystem::path(dir_opt);
    if (!is_cacheable(function)) throw UsageError("cacheable functions: S, Z, S_p:<prime>");
    std::ostringstream os;
    if (action == "build") {
        auto r = parse_range(range);
        auto h = build_cache(dir, function, r.lo, r.hi);
        os << "built " << cache_file(dir, function).string() << " (" << h.records << " records)\n";
    } else if (action == "inspect") {
        auto file = cache_file(dir, function);
        auto c = load_cache(file);
        if (!c) {
            os << file.string() << ": missing or corrupt\n";
        } else {
            auto& h = c->header;
            os << "file " << file.string() << "\nversion " << h.version << "\nfunction " << h.function << "\nrange "
               << h.lo << ".." << h.hi << "\nrecords " << h.records << "\n";
            std::size_t n = c->records.size();
            for (std::size_t i : {std::size_t(0), n / 2, n - 1})
                os << "  " << function << "(" << c->records[i].first << ") = " << c->records[i].second << "\n";
        }
    } else if (action == "clear") {
        os << (clear_cache(dir, function) ? "removed " : "nothing to remove at ")
           << cache_file(dir, function).string() << "\n";
    } else {
        throw UsageError("cache actions: build, inspect, clear");
    }
    emit(g, os.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numwb: digit sequences, arithmetic functions, sieves, numeral bases and searches"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::string timeout_text;
    app.add_option("--format", g.format, "bfile, csv, jsonl (or json), table")
        ->check(CLI::IsMember({"bfile", "csv", "jsonl", "json", "table"}));
    app.add_option("--seed", g.seed, "seed for random modes (required by them)");
    app.add_option("--timeout", g.timeout, "seconds; searches stop and report partial results");
    app.add_option("--out", g.out, "write output to this file");
    app.add_flag("--with-runtime", g.with_runtime, "add the wall time to jsonl experiment records");

    SeqArgs sa;
    auto* seq = app.add_subcommand("seq", "print terms of a sequence family");
    seq->add_option("--family", sa.family, "family name")->required();
    seq->add_option("--count", sa.count, "number of terms");
    seq->add_option("--base", sa.base, "numeral base");
    seq->add_option("--source", sa.source, "concatenated: naturals, odds, evens, primes, squares, cubes, fibonacci");
    seq->add_option("--direction", sa.direction, "concatenated: forward or backward");
    seq->add_option("--ops", sa.ops, "operation: comma list of add, sub, mul, div, pow, root");
    seq->add_option("--n", sa.n, "uniform: the divisor");
    seq->add_option("--digits", sa.digits, "uniform: comma list of digits");
    seq->add_option("--a1", sa.a1, "almost primes: first term");
    seq->add_option("--atoms", sa.atoms, "constructive: comma list of digit strings");

    SieveArgs sv;
    auto* sieve = app.add_subcommand("sieve", "run a sieve");
    sieve->add_option("--kind", sv.kind, "sieve name")->required();
    sieve->add_option("--limit", sv.limit, "upper bound");
    sieve->add_option("--param", sv.param, "m for m_power_free, n for n_ary");
    sieve->add_option("--u", sv.u, "general sieves: comma list");
    sieve->add_option("--v", sv.v, "more general sieve: comma list");
    sieve->add_option("--choices", sv.choices, "random sieve: leading choices");

    FnArgs fa;
    auto* fn = app.add_subcommand("fn", "tabulate an arithmetic function");
    fn->add_option("--name", fa.name, "function name")->required();
    fn->add_option("--range", fa.range, "a..b");
    fn->add_option("--param", fa.param, "m, k or p where the function takes one");

    BaseArgs ba;
    auto* base = app.add_subcommand("base", "numeral bases: encode, decode, add, sub, list");
    base->add_option("action", ba.action)->required();
    base->add_option("operands", ba.operands);
    base->add_option("--base", ba.base, "prime, square, m_power, factorial, double_factorial, triangular, geometric");
    base->add_option("--param", ba.param, "m for m_power, p for geometric");
    base->add_option("--range", ba.range, "list: a..b");

    ArithArgs aa;
    auto* arith = app.add_subcommand("arith", "romanian A B, divpow A K N, fold N K");
    arith->add_option("action", aa.action)->required();
    arith->add_option("operands", aa.operands);
    arith->add_option("--k", aa.k, "romanian: the base k");
    arith->add_option("--m", aa.m, "fold: extension bound");
    arith->add_option("--mode", aa.mode, "fold: product, signed, absolute");
    arith->add_flag("--show-table", aa.show_table, "print the work table");

    ExploreArgs ea;
    auto* explore = app.add_subcommand("explore", "run an experiment or bounded search");
    explore->add_option("--experiment", ea.experiment, "experiment name")->required();
    explore->add_option("--limit", ea.limit);
    explore->add_option("--count", ea.count);
    explore->add_option("--n", ea.n);
    explore->add_option("--m", ea.m);
    explore->add_option("--start", ea.start);
    explore->add_option("--width", ea.width);
    explore->add_option("--c", ea.c);
    explore->add_option("--kind", ea.kind);
    explore->add_option("--set", ea.set);
    explore->add_option("--seeds", ea.seeds);
    explore->add_option("--t", ea.t);
    explore->add_option("--k", ea.k);
    explore->add_option("--p", ea.p);
    explore->add_option("--q", ea.q);
    explore->add_option("--law", ea.law);
    explore->add_option("--range", ea.range);
    explore->add_option("--power", ea.power);
    explore->add_option("--bound", ea.bound);
    explore->add_option("--a-limit", ea.a_limit);
    explore->add_option("--x-limit", ea.x_limit);
    explore->add_option("--y-limit", ea.y_limit);
    explore->add_option("--source", ea.source);
    explore->add_option("--series", ea.series);
    explore->add_option("--workers", ea.workers);
    explore->add_flag("--powers", ea.powers);

    std::string scope = "all", report;
    unsigned vworkers = 0;
    auto* verify = app.add_subcommand("verify", "check computed values against the published lists");
    verify->add_option("--scope", scope, "all or a module id")->check(CLI::IsMember(verify_scopes()));
    verify->add_option("--report", report, "also write the jsonl report here");
    verify->add_option("--workers", vworkers);

    std::string caction, cfunction = "S", crange = "1..1000", cdir;
    auto* cache = app.add_subcommand("cache", "build, inspect or clear an on-disk table");
    cache->add_option("action", caction)->required();
    cache->add_option("--function", cfunction, "S, Z or S_p:<prime>");
    cache->add_option("--range", crange, "build: a..b");
    cache->add_option("--dir", cdir, std::string("default: $") + kCacheDirEnv + " or ./.numwb-cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*seq) return cmd_seq(g, sa);
        if (*sieve) return cmd_sieve(g, sv);
        if (*fn) return cmd_fn(g, fa);
        if (*base) return cmd_base(g, ba);
        if (*arith) return cmd_arith(g, aa);
        if (*explore) return cmd_explore(g, ea);
        if (*verify) return cmd_verify(g, scope, report, vworkers);
        if (*cache) return cmd_cache(g, caction, cfunction, crange, cdir);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
