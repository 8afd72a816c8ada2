#pragma once

// Exact arithmetic in the finite chain ring R = F_q[t]/(t^n), q prime.
// Elements are truncated polynomials in t; an element is a unit iff its
// constant term is nonzero, and (t) is the unique maximal ideal.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hallq {

struct RingParams {
    int q = 2;  // prime residue characteristic
    int n = 1;  // nilpotency degree, t^n = 0

    friend bool operator==(const RingParams&, const RingParams&) = default;
};

bool is_prime(long long v);

// An element of R. `code` packs the coefficient sequence (c_0,...,c_{n-1})
// of 1, t, ..., t^{n-1} as sum c_i q^i; this doubles as the fixed
// enumeration order of R.
struct RingElem {
    std::uint16_t q = 2;
    std::uint16_t n = 1;
    std::uint32_t code = 0;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;

    bool is_zero() const { return code == 0; }
};

class Ring {
public:
    explicit Ring(RingParams params);

    const RingParams& params() const { return params_; }
    int q() const { return params_.q; }
    int n() const { return params_.n; }
    std::uint64_t size() const { return size_; }          // q^n
    std::uint64_t unit_count() const;                     // q^n - q^{n-1}

    RingElem zero() const { return make(0); }
    RingElem one() const { return make(1); }
    // t^a (zero element once a >= n).
    RingElem t_pow(int a) const;
    RingElem from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(RingElem a) const;
    RingElem from_code(std::uint64_t code) const;

    RingElem add(RingElem a, RingElem b) const;
    RingElem sub(RingElem a, RingElem b) const;
    RingElem mul(RingElem a, RingElem b) const;
    RingElem neg(RingElem a) const;

    bool is_unit(RingElem a) const { return check(a), a.code % params_.q != 0; }
    // t-adic valuation; n for the zero element.
    int valuation(RingElem a) const;

    // Inverse of a unit by t-adic Newton lifting. Throws std::domain_error
    // on non-units.
    RingElem inverse(RingElem a) const;
    // Same contract, by scanning all of R. Test oracle for `inverse`.
    RingElem inverse_by_search(RingElem a) const;

    // Reduction mod t and canonical lift.
    int residue(RingElem a) const { return check(a), static_cast<int>(a.code % params_.q); }
    RingElem lift(int residue) const;

    // Every element of R in enumeration (code) order.
    std::vector<RingElem> elements() const;
    std::vector<RingElem> units() const;

    // "0", "1", "t", "1+t", "t^2", "2*t", ... Parses back via parse_elem.
    std::string str(RingElem a) const;
    RingElem parse_elem(const std::string& s) const;

    int inv_mod_q(int r) const;

private:
    RingParams params_;
    std::uint64_t size_;
    std::vector<int> inv_mod_q_;  // inverses of 1..q-1

    RingElem make(std::uint32_t code) const {
        return RingElem{static_cast<std::uint16_t>(params_.q),
                        static_cast<std::uint16_t>(params_.n), code};
    }
    void check(RingElem a) const {
        if (a.q != params_.q || a.n != params_.n)
            throw std::invalid_argument("RingElem from a different ring");
    }
};

}  // namespace hallq
