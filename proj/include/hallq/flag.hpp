#pragma once

// Dimension and shift bookkeeping for free flag varieties over
// R = F_q[t]/(t^n). A flag type ((i_1,k_1),...,(i_m,k_m)) determines
//   N_i  = sum_{r<r'} k_r k_{r'} [i_r = i][i_{r'} = i]
//   N_h  = sum_{r'<r} k_{r'} k_r [i_{r'} = h'][i_r = h'']
// and from these the free flag variety dimension n*sum N_i (an
// (n-1)-jet scheme over the n=1 flag variety, hence the factor n), the
// incidence bundle rank n*sum N_h, their sum d, and the perverse shift
// d + (n-1)*sum N_i. The parabolic fiber dimensions are
//   d2 = n*sum(t_i^2 + w_i^2),  d1 = n*sum(v_i^2 - t_i w_i) + n*sum_h t_{h'} w_{h''}
// with v = t + w.

#include <cstdint>
#include <random>
#include <utility>

#include "hallq/budget.hpp"
#include "hallq/quiver.hpp"
#include "hallq/ring.hpp"

namespace hallq {

struct FlagStep {
    int vertex = 0;  // vertex index
    int mult = 1;    // k_l >= 1
    friend bool operator==(const FlagStep&, const FlagStep&) = default;
};
using FlagType = std::vector<FlagStep>;

void validate_flag(const Quiver& quiver, const FlagType& ft);
FlagType concat_flags(const FlagType& a, const FlagType& b);
// per-vertex sums of k_l: the rank vector of the ambient module
DimVec flag_rank_vector(const Quiver& quiver, const FlagType& ft);

long long n_vertex(const FlagType& ft, int vertex);
long long n_arrow(const FlagType& ft, const Arrow& h);
long long n_vertex_total(const Quiver& quiver, const FlagType& ft);
long long n_arrow_total(const Quiver& quiver, const FlagType& ft);

struct FlagDims {
    long long flag_dim = 0;       // n * sum_i N_i
    long long bundle_rank = 0;    // n * sum_h N_h
    long long total_dim = 0;      // d(V, i, k)
    long long perverse_shift = 0; // d + (n-1) * sum_i N_i
};
FlagDims flag_dims(const Quiver& quiver, const FlagType& ft, int n);

// fiber dimensions (d1, d2) of the induction diagram for T, W
std::pair<long long, long long> d1_d2(const Quiver& quiver, const DimVec& tdim,
                                      const DimVec& wdim, int n);
long long induction_shift(const Quiver& quiver, const DimVec& tdim, const DimVec& wdim, int n);
long long restriction_shift(const Quiver& quiver, const DimVec& tdim, const DimVec& wdim, int n);

// N_i(ft1 || ft2) - N_i(ft1) - N_i(ft2) = (ft1's k at i) * (ft2's k at i)
bool check_concat_identity(const FlagType& ft1, const FlagType& ft2, int vertex);

// d(T,ft1) + d(W,ft2) + d1 - d2 - d(V, ft1||ft2), which vanishes when T, W
// carry the rank vectors implied by the flag types
long long degree_cancellation_defect(const Quiver& quiver, const FlagType& ft1,
                                     const FlagType& ft2, int n);

// points of the free Grassmannian G_Rf(s, l), counted by distinct echelon
// summand forms
std::uint64_t free_grassmannian_count(const Ring& R, int s, int l,
                                      std::uint64_t budget = kDefaultBudget);

FlagType random_flag_type(std::mt19937_64& rng, int vertex_count, int max_len, int max_mult);

}  // namespace hallq
