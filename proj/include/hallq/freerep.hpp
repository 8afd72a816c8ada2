#pragma once

// Free representations of a loop-free quiver over R = F_q[t]/(t^n):
// a free R-module of rank dim[i] at each vertex and one matrix per arrow.
// Isomorphism classes are the orbits of the conjugation action
// x_h -> g_{h''} x_h g_{h'}^{-1} of prod_i GL_{dim[i]}(R).
//
// The canonical representative of an orbit is its minimum under rep_less:
// fewest nonzero entries first, then the flattened (arrow-major,
// row-major) entry sequence compared with zero entries sorted last and
// nonzero entries by their packed code. For single-arrow quivers this
// minimum is the Smith-type diagonal Diag(1^{j0}, t^{j1}, ..., 0^{jn}),
// which the fast path computes directly; the orbit walk is kept as the
// general path and as the cross-check oracle.

#include <cstdint>
#include <functional>
#include <vector>

#include "hallq/budget.hpp"
#include "hallq/matrix.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

struct FreeRep {
    DimVec dim;
    std::vector<RMatrix> maps;  // one per arrow, shape dim[dst] x dim[src]

    friend bool operator==(const FreeRep&, const FreeRep&) = default;
};

FreeRep zero_rep(const Quiver& quiver, const Ring& R, const DimVec& dim);
// Rank 1 at vertex index `v`, zero elsewhere.
FreeRep simple_rep(const Quiver& quiver, const Ring& R, int v);
void validate_rep(const Quiver& quiver, const Ring& R, const FreeRep& rep);

// Packed form usable as an ordered container key.
std::vector<std::uint32_t> rep_code(const FreeRep& rep);
// Total order selecting canonical representatives; see file comment.
bool rep_less(const FreeRep& a, const FreeRep& b);

// Smith normal form over the chain ring: the t-adic valuations of the
// diagonal in an equivalent Diag(t^{a_1},...) form, nondecreasing, with n
// standing for a zero entry. Length min(rows, cols).
std::vector<int> smith_exponents(const Ring& R, RMatrix m);
// The corresponding canonical matrix.
RMatrix smith_matrix(const Ring& R, int rows, int cols, const std::vector<int>& exponents);

struct OrbitInfo {
    FreeRep canonical;
    std::uint64_t orbit_size = 0;
};

// Walks the whole isomorphism orbit of `rep` (generator closure) and
// returns its canonical form and size. Pre: prod_i |GL_{dim[i]}(R)| within
// budget.
OrbitInfo explore_orbit(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                        std::uint64_t budget = kDefaultBudget);

// Canonical form: Smith fast path on single-arrow quivers, orbit walk
// otherwise.
FreeRep canonical_form(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                       std::uint64_t budget = kDefaultBudget);
// The orbit-walk path unconditionally (test oracle for the fast path).
FreeRep canonical_form_by_orbit(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                                std::uint64_t budget = kDefaultBudget);

// |Aut(rep)| via orbit-stabilizer: prod_i |GL_{dim[i]}(R)| / orbit size.
std::uint64_t aut_count(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                        std::uint64_t budget = kDefaultBudget);
// Literal enumeration of intertwining tuples (test oracle).
std::uint64_t aut_count_bruteforce(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                                   std::uint64_t budget = kDefaultBudget);

// All isomorphism classes at a dimension vector, canonical and sorted by
// rep_less.
std::vector<FreeRep> iso_classes(const Quiver& quiver, const Ring& R, const DimVec& dim,
                                 std::uint64_t budget = kDefaultBudget);

// One x-stable graded free direct summand of L together with the induced
// subrepresentation and quotient (not yet canonicalized). `forms` holds the
// per-vertex echelon summand matrices defining the summand.
struct SubrepPair {
    std::vector<RMatrix> forms;
    FreeRep sub;
    FreeRep quot;
};

// Every x-stable free direct summand of rank vector `w`, each with its
// induced sub and quotient. Deterministic order.
std::vector<SubrepPair> enumerate_free_subreps_raw(const Quiver& quiver, const Ring& R,
                                                   const FreeRep& L, const DimVec& w,
                                                   std::uint64_t budget = kDefaultBudget);

}  // namespace hallq
