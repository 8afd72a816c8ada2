#pragma once

// Coefficient arithmetic for Hall algebras at a fixed prime: Laurent
// polynomials in v with v^2 = q understood symbolically, and the numeric
// field Q[v]/(v^2 - q). Structure constants polynomial in q are recovered
// from several primes by exact Lagrange interpolation with a held-out
// validation prime.

#include <map>
#include <string>
#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rational constant) { set(0, constant); }
    static LaurentPoly v_pow(int e, Rational coeff = Rational{1}) {
        LaurentPoly p;
        p.set(e, coeff);
        return p;
    }

    void set(int exponent, Rational coeff) {
        if (coeff.is_zero()) terms_.erase(exponent);
        else terms_[exponent] = coeff;
    }
    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational{0} : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // terms in decreasing exponent, e.g. "v^4 + v^2"; "0" when empty
    std::string str() const;

private:
    std::map<int, Rational> terms_;  // exponent of v -> coefficient, no zeros
};

LaurentPoly parse_laurent(const std::string& s);

// An element a + b*v of Q[v]/(v^2 - q) for a fixed prime q.
struct SqrtQ {
    Rational a, b;
    long long q = 2;

    SqrtQ() = default;
    SqrtQ(Rational a_, Rational b_, long long q_) : a(a_), b(b_), q(q_) {}
    static SqrtQ of(long long value, long long q) { return SqrtQ{Rational{value}, Rational{0}, q}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    // v^e exactly, negative exponents included
    static SqrtQ v_pow(int e, long long q);

    friend SqrtQ operator+(const SqrtQ& x, const SqrtQ& y);
    friend SqrtQ operator-(const SqrtQ& x, const SqrtQ& y);
    friend SqrtQ operator*(const SqrtQ& x, const SqrtQ& y);
    friend SqrtQ operator/(const SqrtQ& x, const SqrtQ& y);
    SqrtQ operator-() const { return SqrtQ{-a, -b, q}; }
    friend bool operator==(const SqrtQ&, const SqrtQ&) = default;

    std::string str() const { return "(" + a.str() + ", " + b.str() + ")"; }
};

// v^2 -> q; splits even and odd exponents into the two components.
SqrtQ eval_at_prime(const LaurentPoly& f, long long q);

// Fits the designated component of the samples as a polynomial in q of
// degree <= degree_bound (exact Lagrange through the first degree_bound+1
// primes), validates on every remaining sample -- at least the final one
// is held out of the fit -- and re-expresses the result in v with the
// parity offset (even: v^{2k}, odd: v^{2k+1}).
enum class Parity { even, odd };

class interpolation_error : public std::runtime_error {
public:
    explicit interpolation_error(const std::string& what) : std::runtime_error(what) {}
};

LaurentPoly interpolate_in_q(const std::vector<std::pair<long long, SqrtQ>>& samples,
                             Parity parity, int degree_bound);

}  // namespace hallq
