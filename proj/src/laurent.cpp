#include "hallq/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hallq/ring.hpp"

namespace hallq {

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, c] : b.terms_) out.set(e, out.coeff(e) + c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, c] : b.terms_) out.set(e, out.coeff(e) - c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto& [e, c] : terms_) out.set(e, -c);
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        bool neg = c.num < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
        if (mono.empty()) out += mag.str();
        else if (mag == Rational{1}) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

LaurentPoly parse_laurent(const std::string& s) {
    LaurentPoly out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty Laurent polynomial");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw std::invalid_argument("bad Laurent polynomial: " + s);
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        Rational coeff{1};
        bool have_coeff = false;
        size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i > start) {
            coeff = parse_rational(s.substr(start, i - start));
            have_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
        int expo = 0;
        if (i < s.size() && s[i] == 'v') {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t es = i;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) throw std::invalid_argument("bad exponent in: " + s);
                expo = std::stoi(s.substr(es, i - es));
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("bad Laurent polynomial: " + s);
        }
        if (sign < 0) coeff = -coeff;
        out.set(expo, out.coeff(expo) + coeff);
        skip_ws();
    }
    return out;
}

SqrtQ SqrtQ::v_pow(int e, long long q) {
    SqrtQ out{Rational{0}, Rational{0}, q};
    // even e: q^{e/2}; odd e: q^{(e-1)/2} * v (the division is exact)
    if (e % 2 == 0) out.a = Rational::int_pow(q, e / 2);
    else out.b = Rational::int_pow(q, (e - 1) / 2);
    return out;
}

static void check_same_q(const SqrtQ& x, const SqrtQ& y) {
    if (x.q != y.q) throw std::invalid_argument("SqrtQ values over different primes");
}

SqrtQ operator+(const SqrtQ& x, const SqrtQ& y) {
    check_same_q(x, y);
    return SqrtQ{x.a + y.a, x.b + y.b, x.q};
}
SqrtQ operator-(const SqrtQ& x, const SqrtQ& y) {
    check_same_q(x, y);
    return SqrtQ{x.a - y.a, x.b - y.b, x.q};
}
SqrtQ operator*(const SqrtQ& x, const SqrtQ& y) {
    check_same_q(x, y);
    return SqrtQ{x.a * y.a + Rational{x.q} * x.b * y.b, x.a * y.b + x.b * y.a, x.q};
}
SqrtQ operator/(const SqrtQ& x, const SqrtQ& y) {
    check_same_q(x, y);
    // (a + bv)^{-1} = (a - bv)/(a^2 - q b^2); the norm is nonzero for a, b
    // rational and not both zero because sqrt(q) is irrational
    Rational norm = y.a * y.a - Rational{y.q} * y.b * y.b;
    if (norm.is_zero()) throw std::domain_error("SqrtQ division by zero");
    SqrtQ prod = x * SqrtQ{y.a, -y.b, y.q};
    return SqrtQ{prod.a / norm, prod.b / norm, x.q};
}

SqrtQ eval_at_prime(const LaurentPoly& f, long long q) {
    if (!is_prime(q)) throw std::invalid_argument("eval_at_prime: q must be prime");
    SqrtQ out{Rational{0}, Rational{0}, q};
    for (auto& [e, c] : f.terms()) {
        SqrtQ term = SqrtQ::v_pow(e, q);
        out = out + SqrtQ{term.a * c, term.b * c, q};
    }
    return out;
}

LaurentPoly interpolate_in_q(const std::vector<std::pair<long long, SqrtQ>>& samples,
                             Parity parity, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    if (samples.size() < static_cast<size_t>(degree_bound) + 2)
        throw std::invalid_argument("interpolate_in_q: need degree_bound + 2 samples");
    std::vector<long long> primes;
    std::vector<Rational> values;
    for (auto& [q, val] : samples) {
        if (!is_prime(q)) throw std::invalid_argument("interpolate_in_q: q must be prime");
        for (long long seen : primes)
            if (seen == q) throw std::invalid_argument("interpolate_in_q: repeated prime");
        if (val.q != q) throw std::invalid_argument("interpolate_in_q: sample q mismatch");
        const Rational& cross = parity == Parity::even ? val.b : val.a;
        if (!cross.is_zero())
            throw interpolation_error("sample at q=" + std::to_string(q) +
                                      " has a cross-parity component");
        primes.push_back(q);
        values.push_back(parity == Parity::even ? val.a : val.b);
    }
    // Lagrange through the first degree_bound+1 samples, exact rationals.
    int k = degree_bound + 1;
    std::vector<Rational> poly(static_cast<size_t>(k), Rational{0});
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> basis{Rational{1}};  // prod_{j!=i} (x - q_j)
        Rational denom{1};
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational{0});
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * Rational{primes[j]};
            }
            basis = std::move(next);
            denom *= Rational{primes[i]} - Rational{primes[j]};
        }
        for (size_t d = 0; d < basis.size(); ++d) poly[d] += basis[d] * values[i] / denom;
    }
    // validate on every sample; the ones past the fit window are held out
    for (size_t s = 0; s < primes.size(); ++s) {
        Rational acc{0};
        Rational x{1};
        for (int d = 0; d < k; ++d) {
            acc += poly[static_cast<size_t>(d)] * x;
            x *= Rational{primes[s]};
        }
        if (acc != values[s])
            throw interpolation_error("not polynomial in q at degree " +
                                      std::to_string(degree_bound) + ": prime " +
                                      std::to_string(primes[s]) + " disagrees");
    }
    LaurentPoly out;
    int offset = parity == Parity::even ? 0 : 1;
    for (int d = 0; d < k; ++d) out.set(2 * d + offset, poly[static_cast<size_t>(d)]);
    return out;
}

}  // namespace hallq
