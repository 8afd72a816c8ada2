#pragma once

// The Ringel-Hall algebra of free quiver representations over
// R = F_q[t]/(t^n), at a fixed prime. The Hall number F^L_{XY} counts the
// x-stable free direct summands of L isomorphic to Y with quotient
// isomorphic to X; the deformed product is
//     X * Y = v^{n<|X|,|Y|>} sum_L F^L_{XY} L        (half twist, v^2 = q)
// or the same with q^{n<|X|,|Y|>} (integer twist). The coproduct sums
// v^{n<|M|,|N|>} F^E_{MN} (a_M a_N / a_E) M (x) N over the conflations of
// E, and H (x) H carries the twisted multiplication
//     (A (x) B)(C (x) D) = v^{n(<|B|,|C|> + <|C|,|B|>)} AC (x) BD.
// Coefficients live in Q[v]/(v^2 - q) throughout; the a_M a_N / a_E factor
// need not be integral.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallq/freerep.hpp"
#include "hallq/laurent.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

enum class TwistMode { half, integer };

struct RepOrder {
    bool operator()(const FreeRep& a, const FreeRep& b) const { return rep_less(a, b); }
};
struct RepPairOrder {
    bool operator()(const std::pair<FreeRep, FreeRep>& a,
                    const std::pair<FreeRep, FreeRep>& b) const {
        if (rep_less(a.first, b.first)) return true;
        if (rep_less(b.first, a.first)) return false;
        return rep_less(a.second, b.second);
    }
};

// Finite linear combination of canonical representatives; no zero terms.
struct HallElement {
    std::map<FreeRep, SqrtQ, RepOrder> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const FreeRep& rep, const SqrtQ& c);
    friend bool operator==(const HallElement&, const HallElement&) = default;
};

struct TensorElement {
    std::map<std::pair<FreeRep, FreeRep>, SqrtQ, RepPairOrder> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const FreeRep& left, const FreeRep& right, const SqrtQ& c);
    std::vector<std::pair<FreeRep, FreeRep>> support() const;
    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

// An element of the graded dual: finitely many values on the canonical
// representatives of one dimension vector.
struct DualFunction {
    DimVec grade;
    std::map<FreeRep, SqrtQ, RepOrder> values;

    SqrtQ at(const FreeRep& rep, long long q) const;
    friend bool operator==(const DualFunction&, const DualFunction&) = default;
};

struct DeltaReport {
    bool homomorphism = false;
    TensorElement lhs;  // Delta(M * N)
    TensorElement rhs;  // Delta(M) * Delta(N)
    std::vector<std::pair<FreeRep, FreeRep>> lhs_only;  // support difference
    std::vector<std::pair<FreeRep, FreeRep>> rhs_only;
};

// Owns the quiver, the ring, the twist convention and the enumeration
// caches. All values handed out are immutable; the caches are fill-once
// memo tables keyed by canonical representatives.
class Context {
public:
    Context(Quiver quiver, RingParams params, TwistMode twist = TwistMode::half,
            std::uint64_t budget = kDefaultBudget);

    const Quiver& quiver() const { return quiver_; }
    const Ring& ring() const { return ring_; }
    TwistMode twist() const { return twist_; }
    std::uint64_t budget() const { return budget_; }
    long long q() const { return ring_.q(); }
    int n() const { return ring_.n(); }

    SqrtQ scalar(long long value) const { return SqrtQ::of(value, q()); }
    // v^e under the half twist, q^e under the integer twist
    SqrtQ twist_pow(long long e) const;

    FreeRep canonical(const FreeRep& rep);
    std::uint64_t aut(const FreeRep& rep);
    const std::vector<FreeRep>& classes(const DimVec& dim);
    FreeRep simple(int vertex) const { return simple_rep(quiver_, ring_, vertex); }
    FreeRep unit_rep() const { return zero_rep(quiver_, ring_, DimVec(quiver_.vertex_count(), 0)); }

    // spec-facing subobject enumeration: canonicalized (sub, quot) pairs
    std::vector<std::pair<FreeRep, FreeRep>> enumerate_free_subreps(const FreeRep& L,
                                                                    const DimVec& w);

    // F^L_{XY}; 0 on a grading mismatch
    long long hall_number(const FreeRep& L, const FreeRep& X, const FreeRep& Y);
    HallElement circ_product(const FreeRep& X, const FreeRep& Y);

    HallElement element(const FreeRep& rep);  // single term, coefficient 1
    HallElement unit() { return element(unit_rep()); }
    HallElement scale(const HallElement& a, const SqrtQ& c);
    HallElement sum(const HallElement& a, const HallElement& b);
    HallElement twisted_product(const HallElement& a, const HallElement& b);
    // product over a word of vertex indices; empty word gives the unit
    HallElement word_product(const std::vector<int>& word);
    std::vector<HallElement> composition_span(const std::vector<std::vector<int>>& words);

    TensorElement delta(const FreeRep& E);
    TensorElement delta_linear(const HallElement& a);
    TensorElement tensor_scale(const TensorElement& u, const SqrtQ& c);
    TensorElement tensor_twisted_product(const TensorElement& u, const TensorElement& w);

    DeltaReport check_delta_homomorphism(const FreeRep& M, const FreeRep& N);

    DualFunction characteristic_function(const FreeRep& rep);
    DualFunction dual_product(const DualFunction& f1, const DualFunction& f2);

private:
    Quiver quiver_;
    Ring ring_;
    TwistMode twist_;
    std::uint64_t budget_;

    using Code = std::vector<std::uint32_t>;
    std::map<Code, FreeRep> canonical_cache_;
    std::map<Code, std::uint64_t> aut_cache_;
    std::map<DimVec, std::vector<FreeRep>> class_cache_;
    // per canonical L: (quot class, sub class) -> number of summands
    struct SubTable {
        std::map<std::pair<Code, Code>, long long> counts;
        std::map<Code, FreeRep> reps;
    };
    std::map<Code, SubTable> subtable_cache_;

    const SubTable& subrep_table(const FreeRep& canonical_L);
};

}  // namespace hallq
