#include "hallq/ring.hpp"

#include <algorithm>

#include "hallq/rational.hpp"

namespace hallq {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

Ring::Ring(RingParams params) : params_(params) {
    if (!is_prime(params_.q)) throw std::invalid_argument("q must be prime");
    if (params_.n < 1) throw std::invalid_argument("n must be >= 1");
    size_ = 1;
    for (int i = 0; i < params_.n; ++i) {
        size_ *= static_cast<std::uint64_t>(params_.q);
        if (size_ > (1ull << 31)) throw std::invalid_argument("q^n too large");
    }
    inv_mod_q_.assign(params_.q, 0);
    for (int r = 1; r < params_.q; ++r)
        for (int s = 1; s < params_.q; ++s)
            if (r * s % params_.q == 1) inv_mod_q_[r] = s;
}

std::uint64_t Ring::unit_count() const {
    return size_ - size_ / static_cast<std::uint64_t>(params_.q);
}

int Ring::inv_mod_q(int r) const {
    r %= params_.q;
    if (r < 0) r += params_.q;
    if (r == 0) throw std::domain_error("0 has no inverse mod q");
    return inv_mod_q_[r];
}

RingElem Ring::t_pow(int a) const {
    if (a < 0) throw std::invalid_argument("t_pow: negative exponent");
    if (a >= params_.n) return zero();
    std::uint32_t code = 1;
    for (int i = 0; i < a; ++i) code *= static_cast<std::uint32_t>(params_.q);
    return make(code);
}

RingElem Ring::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > params_.n)
        throw std::invalid_argument("from_coeffs: too many coefficients");
    std::uint64_t code = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        int c = coeffs[i] % params_.q;
        if (c < 0) c += params_.q;
        code = code * params_.q + c;
    }
    return make(static_cast<std::uint32_t>(code));
}

std::vector<int> Ring::coeffs(RingElem a) const {
    check(a);
    std::vector<int> out(params_.n);
    std::uint32_t c = a.code;
    for (int i = 0; i < params_.n; ++i) {
        out[i] = static_cast<int>(c % params_.q);
        c /= params_.q;
    }
    return out;
}

RingElem Ring::from_code(std::uint64_t code) const {
    if (code >= size_) throw std::invalid_argument("from_code: out of range");
    return make(static_cast<std::uint32_t>(code));
}

RingElem Ring::add(RingElem a, RingElem b) const {
    check(a); check(b);
    std::uint32_t out = 0, pw = 1;
    std::uint32_t ca = a.code, cb = b.code;
    for (int i = 0; i < params_.n; ++i) {
        out += pw * ((ca % params_.q + cb % params_.q) % params_.q);
        ca /= params_.q; cb /= params_.q;
        pw *= params_.q;
    }
    return make(out);
}

RingElem Ring::neg(RingElem a) const {
    check(a);
    std::uint32_t out = 0, pw = 1;
    std::uint32_t ca = a.code;
    for (int i = 0; i < params_.n; ++i) {
        int c = static_cast<int>(ca % params_.q);
        out += pw * static_cast<std::uint32_t>((params_.q - c) % params_.q);
        ca /= params_.q;
        pw *= params_.q;
    }
    return make(out);
}

RingElem Ring::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem Ring::mul(RingElem a, RingElem b) const {
    check(a); check(b);
    // Truncated convolution of digit sequences.
    int da[32], db[32];
    std::uint32_t ca = a.code, cb = b.code;
    for (int i = 0; i < params_.n; ++i) {
        da[i] = static_cast<int>(ca % params_.q); ca /= params_.q;
        db[i] = static_cast<int>(cb % params_.q); cb /= params_.q;
    }
    std::uint32_t out = 0, pw = 1;
    for (int k = 0; k < params_.n; ++k) {
        int s = 0;
        for (int i = 0; i <= k; ++i) s += da[i] * db[k - i];
        out += pw * static_cast<std::uint32_t>(s % params_.q);
        pw *= params_.q;
    }
    return make(out);
}

int Ring::valuation(RingElem a) const {
    check(a);
    if (a.code == 0) return params_.n;
    int v = 0;
    std::uint32_t c = a.code;
    while (c % params_.q == 0) { c /= params_.q; ++v; }
    return v;
}

RingElem Ring::inverse(RingElem a) const {
    check(a);
    if (!is_unit(a)) throw std::domain_error("not invertible: " + str(a));
    // Newton lifting x <- x(2 - a x), starting from the residue inverse;
    // precision doubles each step.
    RingElem x = lift(inv_mod_q(residue(a)));
    RingElem two = add(one(), one());
    for (int prec = 1; prec < params_.n; prec *= 2)
        x = mul(x, sub(two, mul(a, x)));
    return x;
}

RingElem Ring::inverse_by_search(RingElem a) const {
    check(a);
    for (std::uint64_t c = 0; c < size_; ++c) {
        RingElem x = make(static_cast<std::uint32_t>(c));
        if (mul(a, x) == one()) return x;
    }
    throw std::domain_error("not invertible: " + str(a));
}

RingElem Ring::lift(int residue) const {
    residue %= params_.q;
    if (residue < 0) residue += params_.q;
    return make(static_cast<std::uint32_t>(residue));
}

std::vector<RingElem> Ring::elements() const {
    std::vector<RingElem> out;
    out.reserve(size_);
    for (std::uint64_t c = 0; c < size_; ++c) out.push_back(make(static_cast<std::uint32_t>(c)));
    return out;
}

std::vector<RingElem> Ring::units() const {
    std::vector<RingElem> out;
    out.reserve(unit_count());
    for (std::uint64_t c = 0; c < size_; ++c)
        if (c % params_.q != 0) out.push_back(make(static_cast<std::uint32_t>(c)));
    return out;
}

std::string Ring::str(RingElem a) const {
    check(a);
    if (a.code == 0) return "0";
    std::string out;
    auto cs = coeffs(a);
    for (int i = 0; i < params_.n; ++i) {
        if (cs[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (i == 0) out += std::to_string(cs[i]);
        else if (cs[i] == 1) out += mono;
        else out += std::to_string(cs[i]) + "*" + mono;
    }
    return out;
}

RingElem Ring::parse_elem(const std::string& s) const {
    if (s.empty()) throw std::invalid_argument("empty ring element");
    std::vector<int> cs(params_.n, 0);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw std::invalid_argument("bad ring element: " + s);
        int coef = 1;
        int expo = 0;
        size_t star = term.find('*');
        std::string mono = term;
        if (star != std::string::npos) {
            coef = std::stoi(term.substr(0, star));
            mono = term.substr(star + 1);
        }
        if (mono == "t") {
            expo = 1;
        } else if (mono.rfind("t^", 0) == 0) {
            expo = std::stoi(mono.substr(2));
        } else {
            // bare integer term
            coef = std::stoi(mono);
            expo = 0;
        }
        if (expo < 0 || expo >= params_.n) {
            if (expo >= params_.n) continue;  // t^a = 0 beyond truncation
            throw std::invalid_argument("bad ring element: " + s);
        }
        cs[expo] = (cs[expo] + coef) % params_.q;
        if (cs[expo] < 0) cs[expo] += params_.q;
    }
    return from_coeffs(cs);
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational{std::stoll(s)};
        return Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

}  // namespace hallq
