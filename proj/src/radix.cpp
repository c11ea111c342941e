#include "numwb/radix.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace numwb {

GeneralizedBase GeneralizedBase::primes() { return {prime, 0}; }
GeneralizedBase GeneralizedBase::squares() { return {square, 2}; }
GeneralizedBase GeneralizedBase::factorials() { return {factorial, 0}; }
GeneralizedBase GeneralizedBase::double_factorials() { return {double_factorial, 0}; }
GeneralizedBase GeneralizedBase::triangulars() { return {triangular, 0}; }

GeneralizedBase GeneralizedBase::m_powers(unsigned m) {
    if (m < 2) throw std::invalid_argument("m-power base needs m >= 2");
    return {m_power, m};
}

GeneralizedBase GeneralizedBase::geometric_base(unsigned p) {
    if (p < 2) throw std::invalid_argument("geometric base needs p >= 2");
    return {geometric, p};
}

GeneralizedBase GeneralizedBase::custom_list(std::vector<Natural> scale) {
    if (scale.empty() || scale[0] != 1) throw std::invalid_argument("custom base must start with 1");
    for (std::size_t i = 1; i < scale.size(); ++i)
        if (scale[i] <= scale[i - 1]) throw std::invalid_argument("custom base must increase strictly");
    GeneralizedBase b(custom, 0);
    b.cache_->values = std::move(scale);
    return b;
}

std::string GeneralizedBase::name() const {
    switch (kind_) {
        case prime: return "prime";
        case square: return "square";
        case m_power: return "m_power(" + std::to_string(param_) + ")";
        case factorial: return "factorial";
        case double_factorial: return "double_factorial";
        case triangular: return "triangular";
        case geometric: return "geometric(" + std::to_string(param_) + ")";
        case custom: return "custom";
    }
    return "?";
}

Natural GeneralizedBase::generate(std::size_t i) const {
    // i-th entry given all earlier ones are cached
    auto& v = cache_->values;
    if (i == 0) return 1;
    switch (kind_) {
        case prime:
            return next_prime(static_cast<std::uint64_t>(v[i - 1]));
        case square:
        case m_power:
            return ipow(Natural(i + 1), param_);
        case factorial:
            return v[i - 1] * (i + 1);
        case double_factorial: {
            // 1!!, 2!!, 3!!, ...: g_i = (i+1)!! = (i+1) * g_{i-2}
            Natural prev2 = i >= 2 ? v[i - 2] : Natural(1);
            return prev2 * (i + 1);
        }
        case triangular:
            return Natural(i + 1) * (i + 2) / 2;
        case geometric:
            return v[i - 1] * param_;
        case custom:
            break;
    }
    throw std::out_of_range("custom base has no entry " + std::to_string(i));
}

Natural GeneralizedBase::scale(std::size_t i) const {
    std::lock_guard lk(cache_->mu);
    auto& v = cache_->values;
    while (v.size() <= i) v.push_back(generate(v.size()));
    return v[i];
}

std::size_t GeneralizedBase::position_of(const Natural& a) const {
    if (a < 1) throw std::invalid_argument("position_of: a must be >= 1");
    std::size_t i = 0;
    for (;;) {
        if (kind_ == custom) {
            std::lock_guard lk(cache_->mu);
            if (i + 1 >= cache_->values.size()) return i;
        }
        if (scale(i + 1) > a) return i;
        ++i;
    }
}

Natural GeneralizedBase::digit_bound(std::size_t i) const {
    if (kind_ == custom) {
        std::lock_guard lk(cache_->mu);
        if (i + 1 >= cache_->values.size()) throw std::out_of_range("custom base: last position is unbounded");
    }
    return (scale(i + 1) - 1) / scale(i);
}

std::optional<GeneralizedBase> base_from_name(const std::string& name, unsigned param) {
    if (name == "prime") return GeneralizedBase::primes();
    if (name == "square") return GeneralizedBase::squares();
    if (name == "m_power") return GeneralizedBase::m_powers(param ? param : 2);
    if (name == "factorial") return GeneralizedBase::factorials();
    if (name == "double_factorial") return GeneralizedBase::double_factorials();
    if (name == "triangular") return GeneralizedBase::triangulars();
    if (name == "geometric") return GeneralizedBase::geometric_base(param ? param : 10);
    return std::nullopt;
}

std::string RadixNumeral::str() const {
    if (digits.empty()) return "0";
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it < 10)
            s += static_cast<char>('0' + static_cast<int>(*it));
        else
            s += "[" + to_string(*it) + "]";
    }
    return s;
}

RadixNumeral parse_numeral(const std::string& text) {
    RadixNumeral x;
    std::vector<Natural> msb_first;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            msb_first.push_back(c - '0');
        } else if (c == '[') {
            auto j = text.find(']', i);
            if (j == std::string::npos) throw std::invalid_argument("numeral: unclosed [");
            msb_first.push_back(parse_natural(text.substr(i + 1, j - i - 1)));
            i = j;
        } else {
            throw std::invalid_argument(std::string("numeral: bad character '") + c + "'");
        }
    }
    x.digits.assign(msb_first.rbegin(), msb_first.rend());
    while (!x.digits.empty() && x.digits.back() == 0) x.digits.pop_back();
    return x;
}

RadixNumeral encode(const Natural& a, const GeneralizedBase& base) {
    if (a < 0) throw std::invalid_argument("encode: a must be >= 0");
    RadixNumeral x;
    if (a == 0) return x;
    Natural rest = a;
    std::size_t top = base.position_of(rest);
    x.digits.assign(top + 1, 0);
    for (std::size_t i = top + 1; i-- > 0 && rest > 0;) {
        Natural g = base.scale(i);
        x.digits[i] = rest / g;
        rest %= g;
    }
    return x;
}

Natural decode(const RadixNumeral& x, const GeneralizedBase& base) {
    Natural v = 0;
    for (std::size_t i = 0; i < x.digits.size(); ++i) {
        if (x.digits[i] < 0) throw std::invalid_argument("decode: negative digit");
        if (x.digits[i] == 0) continue;
        bool last_custom = false;
        if (base.kind() == GeneralizedBase::custom) {
            try {
                base.scale(i + 1);
            } catch (const std::out_of_range&) {
                last_custom = true;
            }
        }
        if (!last_custom && x.digits[i] > base.digit_bound(i))
            throw std::invalid_argument("decode: digit " + to_string(x.digits[i]) + " at position " +
                                        std::to_string(i) + " exceeds bound " + to_string(base.digit_bound(i)));
        v += x.digits[i] * base.scale(i);
    }
    return v;
}

std::vector<Natural> superior_part_summands(const Natural& a, const GeneralizedBase& base) {
    if (a < 1) throw std::invalid_argument("superior_part_summands: a must be >= 1");
    std::vector<Natural> out;
    Natural rest = a;
    while (rest > 0) {
        Natural g = base.scale(base.position_of(rest));
        out.push_back(g);
        rest -= g;
    }
    return out;
}

RadixNumeral factorial_add(const RadixNumeral& x, const RadixNumeral& y) {
    RadixNumeral r;
    std::size_t n = std::max(x.digits.size(), y.digits.size());
    Natural carry = 0;
    for (std::size_t i = 0; i < n || carry > 0; ++i) {
        Natural s = carry;
        if (i < x.digits.size()) s += x.digits[i];
        if (i < y.digits.size()) s += y.digits[i];
        Natural radix = i + 2;
        r.digits.push_back(s % radix);
        carry = s / radix;
    }
    while (!r.digits.empty() && r.digits.back() == 0) r.digits.pop_back();
    return r;
}

RadixNumeral factorial_sub(const RadixNumeral& x, const RadixNumeral& y) {
    RadixNumeral r;
    std::size_t n = std::max(x.digits.size(), y.digits.size());
    Natural borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Natural d = (i < x.digits.size() ? x.digits[i] : Natural(0)) - borrow;
        Natural e = i < y.digits.size() ? y.digits[i] : Natural(0);
        if (d < e) {
            d += i + 2;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.digits.push_back(d - e);
    }
    if (borrow > 0) throw std::invalid_argument("factorial_sub: negative result");
    while (!r.digits.empty() && r.digits.back() == 0) r.digits.pop_back();
    return r;
}

MultiplyResult romanian_multiply(const Natural& a, const Natural& b, unsigned k) {
    if (k < 2) throw std::invalid_argument("romanian_multiply: k must be >= 2");
    if (a < 0 || b < 0) throw std::invalid_argument("romanian_multiply: operands must be >= 0");
    MultiplyResult res;
    Natural A = a, B = b;
    for (;;) {
        Natural r = B % k;
        res.table.rows.push_back({A, B, r, A * r});
        res.table.total += A * r;
        if (B < k) break;
        A *= k;
        B /= k;
    }
    res.product = res.table.total;
    return res;
}

DivideResult divide_by_power(const Natural& a, unsigned k, unsigned n) {
    if (k < 2) throw std::invalid_argument("divide_by_power: k must be >= 2");
    if (n < 1) throw std::invalid_argument("divide_by_power: n must be >= 1");
    if (a < 0) throw std::invalid_argument("divide_by_power: a must be >= 0");
    DivideResult res;
    Natural A = a, P = 1;
    for (unsigned i = 0; i < n; ++i) {
        Natural r = A % k;
        // row i: c(R) = r * k^i, c(P) = k^i, c(r), c(A), c(k^n) exponent n - i
        res.table.rows.push_back({A, Natural(n - i), r, r * P});
        res.table.total += r * P;
        A /= k;
        P *= k;
    }
    res.table.last_a = A;
    res.quotient = A;
    res.remainder = res.table.total;
    return res;
}

std::string WorkTable::render(bool division, unsigned k) const {
    std::ostringstream os;
    if (!division) {
        os << std::setw(12) << "A" << " | " << std::setw(12) << "B" << " | " << std::setw(4) << "r"
           << " | " << std::setw(14) << "P" << "\n";
        for (auto& w : rows)
            os << std::setw(12) << to_string(w.a) << " | " << std::setw(12) << to_string(w.b) << " | " << std::setw(4)
               << to_string(w.r) << " | " << std::setw(14) << to_string(w.p) << "\n";
        os << "total " << to_string(total) << "\n";
        return os.str();
    }
    os << std::setw(12) << "R" << " | " << std::setw(8) << "P" << " | " << std::setw(4) << "r" << " | "
       << std::setw(12) << "A" << " | " << std::setw(8) << "k^n" << "\n";
    std::size_t i = 0;
    for (auto& w : rows) {
        std::string pk = std::to_string(k) + "^" + std::to_string(i++);
        std::string kn = std::to_string(k) + "^" + to_string(w.b);
        os << std::setw(12) << to_string(w.p) << " | " << std::setw(8) << pk << " | " << std::setw(4) << to_string(w.r)
           << " | " << std::setw(12) << to_string(w.a) << " | " << std::setw(8) << kn << "\n";
    }
    os << std::setw(12) << "" << " | " << std::setw(8) << "" << " | " << std::setw(4) << "" << " | " << std::setw(12)
       << to_string(last_a) << " | " << std::setw(8) << (std::to_string(k) + "^0") << "\n";
    os << "total " << to_string(total) << "\n";
    return os.str();
}

std::vector<std::int64_t> fold_factors(std::int64_t n, std::int64_t k, std::int64_t bound) {
    if (k < 1 || n <= k) throw std::invalid_argument("fold: needs n > k >= 1");
    if (bound < 1) throw std::invalid_argument("fold: bound must be >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0;; ++i) {
        std::int64_t t = n - k * i;
        if (t < -bound) break;
        if (t != 0 && (t < 0 ? -t : t) <= bound) out.push_back(t);
    }
    return out;
}

Integer smarandacheial(const FoldSpec& spec) {
    Integer r = 1;
    for (auto t : fold_factors(spec.n, spec.k, spec.m.value_or(spec.n))) r *= t;
    return r;
}

Integer summant(const FoldSpec& spec) {
    if (spec.mode == FoldMode::product) return smarandacheial(spec);
    bool absolute = spec.mode == FoldMode::absolute_sum;
    Integer s = 0;
    if (!spec.m) {
        for (auto t : fold_factors(spec.n, spec.k, spec.n)) s += absolute && t < 0 ? -t : t;
        return s;
    }
    if (spec.k < 1 || spec.n <= spec.k) throw std::invalid_argument("summant: needs n > k >= 1");
    if (*spec.m < 0) throw std::invalid_argument("summant: m must be >= 0");
    for (std::int64_t i = 0; i <= (spec.n + *spec.m) / spec.k; ++i) {
        std::int64_t t = spec.n - spec.k * i;
        s += absolute && t < 0 ? -t : t;
    }
    return s;
}

}  // namespace numwb
