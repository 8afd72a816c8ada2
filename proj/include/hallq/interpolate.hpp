#pragma once

// Reconstruction of word-product structure constants as polynomials in q.
// A word w of simples carries the fixed twist monomial v^{n*T(w)},
// T(w) = sum_{k<l} <e_{i_k}, e_{i_l}>; dividing it out leaves plain
// Hall-number combinations, which are fitted across primes by exact
// Lagrange interpolation (last prime held out) and re-expressed in v.
// Supported on quivers whose canonical representatives have pure t-power
// entries (so classes match up across primes by their valuation profile).

#include <cstdint>
#include <vector>

#include "hallq/hall.hpp"

namespace hallq {

struct InterpolatedTerm {
    FreeRep rep;        // representative over the first prime's ring
    LaurentPoly poly;   // the detwisted polynomial part, in v^2 = q
    LaurentPoly coeff;  // poly * v^{n T(w)}: the full structure constant
};

struct WordInterpolation {
    std::vector<int> word;        // vertex indices
    long long twist_exponent = 0; // n * T(w)
    std::vector<InterpolatedTerm> terms;
};

long long word_twist_pairing(const Quiver& quiver, const std::vector<int>& word);

WordInterpolation interpolate_word(const Quiver& quiver, int n,
                                   const std::vector<long long>& primes,
                                   const std::vector<int>& word,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace hallq
