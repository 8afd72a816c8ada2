#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hallq {

// Exact rational arithmetic on int64 with __int128 intermediates. All
// quantities in this project (Hall numbers, automorphism counts, Lagrange
// weights over single-digit primes) stay far below the overflow guard; the
// guard turns a silent wrap into a hard error if that ever changes.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational overflow");
        return static_cast<std::int64_t>(v);
    }
    static Rational make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        Rational r;
        r.num = narrow(n);
        r.den = narrow(d);
        r.normalize();
        return r;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.num,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return make(static_cast<__int128>(a.num) * b.den,
                    static_cast<__int128>(a.den) * b.num);
    }
    Rational operator-() const { Rational r = *this; r.num = -r.num; return r; }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    // q^e for integer e (negative allowed).
    static Rational int_pow(std::int64_t base, int e) {
        Rational r{1};
        Rational b = e >= 0 ? Rational{base} : Rational{1} / Rational{base};
        for (int i = 0, m = e >= 0 ? e : -e; i < m; ++i) r *= b;
        return r;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "a" or "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace hallq
