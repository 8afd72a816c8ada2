#pragma once

// Exact matrices over R = F_q[t]/(t^n). A matrix is invertible iff its
// reduction mod t is invertible over F_q; Gauss-Jordan with unit pivots
// works verbatim because every unit of R is invertible. Canonical
// generator matrices of free direct summands (the points of the free
// Grassmannian) are computed by normalizing at the mod-t pivot rows.

#include <cstdint>
#include <optional>
#include <vector>

#include "hallq/budget.hpp"
#include "hallq/ring.hpp"

namespace hallq {

struct RMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<RingElem> e;  // row-major, rows*cols entries

    RMatrix() = default;
    RMatrix(int r, int c, RingElem fill) : rows(r), cols(c), e(static_cast<size_t>(r) * c, fill) {}

    RingElem& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const RingElem& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

RMatrix zero_matrix(const Ring& R, int rows, int cols);
RMatrix identity_matrix(const Ring& R, int rank);
RMatrix mat_add(const Ring& R, const RMatrix& a, const RMatrix& b);
RMatrix mat_sub(const Ring& R, const RMatrix& a, const RMatrix& b);
RMatrix mat_mul(const Ring& R, const RMatrix& a, const RMatrix& b);
// column `j` of a as a rows x 1 matrix
RMatrix mat_col(const RMatrix& a, int j);

// Reduction mod t, entries in [0,q).
std::vector<int> mod_t(const Ring& R, const RMatrix& a);
// Rank over F_q of the reduction mod t.
int rank_mod_t(const Ring& R, const RMatrix& a);

bool is_invertible(const Ring& R, const RMatrix& m);
// Exact inverse; throws std::domain_error if the reduction mod t is singular.
RMatrix mat_inverse(const Ring& R, const RMatrix& m);

// Canonical generator matrix of the column span of `m` (an r x s matrix,
// s <= r), provided that span is a free rank-s direct summand of R^r;
// std::nullopt otherwise. Two matrices get the same form iff their spans
// coincide: the form is m normalized to the identity on the pivot rows of
// the mod-t reduced column echelon of its span.
std::optional<RMatrix> echelon_summand_form(const Ring& R, const RMatrix& m);

// Pivot rows of an echelon summand form (rows where the form restricts to
// the identity).
std::vector<int> echelon_pivot_rows(const Ring& R, const RMatrix& form);

// Solve form * x = y for an echelon summand form; nullopt if y is not in
// the span. x is read off the pivot rows and verified exactly.
std::optional<RMatrix> echelon_solve(const Ring& R, const RMatrix& form, const RMatrix& y);

// All echelon summand forms of rank s in R^r, i.e. the points of the free
// Grassmannian G_Rf(s, r), in a fixed deterministic order.
std::vector<RMatrix> enumerate_summand_forms(const Ring& R, int s, int r,
                                             std::uint64_t budget = kDefaultBudget);

// |GL_r(R)| = q^{(n-1)r^2} * prod_{i<r} (q^r - q^i); throws budget_error
// past `cap`.
std::uint64_t gl_order(const Ring& R, int rank, std::uint64_t cap = UINT64_MAX);

// Every invertible r x r matrix exactly once, ordered by the flattened
// entry codes. Budget-guarded on q^{n r^2}.
std::vector<RMatrix> enumerate_GL(const Ring& R, int rank,
                                  std::uint64_t budget = kDefaultBudget);

// A generating set of GL_r(R) (elementary transvections I + t^a E_ij and
// diagonal unit scalings), paired with inverses. Used for orbit walks.
std::vector<std::pair<RMatrix, RMatrix>> gl_generators(const Ring& R, int rank);

}  // namespace hallq
