#pragma once

// Generalized Kac-Moody relation checks against the computed composition
// subalgebra, at charge 1: generator commutation when a_ij = 0, and the
// quantum Serre residual S_i^2 S_j - c * S_i S_j S_i + S_j S_i^2 for a
// caller-supplied coefficient c. The artifact evaluates candidate
// relations; it does not attempt to compute the relation ideal.

#include <vector>

#include "hallq/hall.hpp"
#include "hallq/laurent.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

// Symmetric Borcherds-Cartan matrix with the charge fixed at 1.
struct BorcherdsCartan {
    std::vector<std::vector<int>> a;

    int size() const { return static_cast<int>(a.size()); }
    bool imaginary(int i) const { return a[i][i] <= 0; }
    void validate() const;  // a_ii in {2,0,-2,...}, a_ij = a_ji <= 0 off-diagonal
};

// a_ij = -(#arrows i->j + #arrows j->i) off the diagonal; a_ii = 2 in the
// hereditary case n = 1 and 0 (imaginary) for n >= 2.
BorcherdsCartan cartan_from_quiver(const Quiver& quiver, int n);

// S_i S_j = S_j S_i, required a_ij = 0 (no arrows either way).
bool commutation_check(Context& ctx, int i, int j);

// S_i^2 S_j - coeff * S_i S_j S_i + S_j S_i^2, with coeff evaluated in
// Q[v]/(v^2 - q). Pre: exactly one arrow between i and j.
HallElement serre_residual(Context& ctx, int i, int j, const LaurentPoly& coeff);

}  // namespace hallq
