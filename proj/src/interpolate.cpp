#include "hallq/interpolate.hpp"

#include <map>
#include <stdexcept>

namespace hallq {

long long word_twist_pairing(const Quiver& quiver, const std::vector<int>& word) {
    long long out = 0;
    int nv = quiver.vertex_count();
    for (size_t k = 0; k < word.size(); ++k)
        for (size_t l = k + 1; l < word.size(); ++l) {
            DimVec a(nv, 0), b(nv, 0);
            a[word[k]] = 1;
            b[word[l]] = 1;
            out += euler_form(quiver, a, b);
        }
    return out;
}

// prime-independent class label: dims plus the valuation profile of the
// arrow matrices; requires every entry to be a pure power of t (or 0)
static std::vector<int> symbolic_key(const Ring& R, const FreeRep& rep) {
    std::vector<int> key(rep.dim.begin(), rep.dim.end());
    for (const RMatrix& m : rep.maps)
        for (const RingElem& x : m.e) {
            if (!(x.is_zero() || x == R.t_pow(R.valuation(x))))
                throw std::invalid_argument(
                    "interpolation needs pure t-power canonical entries; "
                    "unsupported quiver");
            key.push_back(R.valuation(x));
        }
    return key;
}

WordInterpolation interpolate_word(const Quiver& quiver, int n,
                                   const std::vector<long long>& primes,
                                   const std::vector<int>& word, std::uint64_t budget) {
    if (primes.size() < 2)
        throw std::invalid_argument("interpolate_word: need at least two primes");
    WordInterpolation out;
    out.word = word;
    out.twist_exponent = static_cast<long long>(n) * word_twist_pairing(quiver, word);

    // per prime: compute the word product and divide out the twist monomial
    std::map<std::vector<int>, std::map<long long, SqrtQ>> samples;
    std::map<std::vector<int>, FreeRep> reps_first;
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        long long q = primes[pi];
        Context ctx(quiver, RingParams{static_cast<int>(q), n}, TwistMode::half, budget);
        SqrtQ detwist = SqrtQ::v_pow(static_cast<int>(-out.twist_exponent), q);
        for (auto& [rep, c] : ctx.word_product(word).terms) {
            auto key = symbolic_key(ctx.ring(), rep);
            samples[key][q] = c * detwist;
            if (pi == 0) reps_first.emplace(key, rep);
        }
    }
    // a class may be missing at some prime (vanishing coefficient): fill 0
    int degree_bound = static_cast<int>(primes.size()) - 2;
    for (auto& [key, by_prime] : samples) {
        std::vector<std::pair<long long, SqrtQ>> points;
        for (long long q : primes) {
            auto it = by_prime.find(q);
            points.emplace_back(q, it == by_prime.end() ? SqrtQ::of(0, q) : it->second);
        }
        LaurentPoly poly = interpolate_in_q(points, Parity::even, degree_bound);
        InterpolatedTerm term;
        auto rit = reps_first.find(key);
        if (rit == reps_first.end()) {
            // class absent at the first prime: rebuild it over that ring
            Ring R0(RingParams{static_cast<int>(primes[0]), n});
            FreeRep rep = zero_rep(quiver, R0, DimVec(key.begin(), key.begin() + quiver.vertex_count()));
            size_t pos = static_cast<size_t>(quiver.vertex_count());
            for (RMatrix& m : rep.maps)
                for (RingElem& x : m.e) x = R0.t_pow(key[pos++]);
            term.rep = std::move(rep);
        } else {
            term.rep = rit->second;
        }
        term.poly = poly;
        term.coeff = poly * LaurentPoly::v_pow(static_cast<int>(out.twist_exponent));
        out.terms.push_back(std::move(term));
    }
    return out;
}

}  // namespace hallq
