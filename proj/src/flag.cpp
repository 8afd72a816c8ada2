#include "hallq/flag.hpp"

#include <stdexcept>

#include "hallq/matrix.hpp"

namespace hallq {

void validate_flag(const Quiver& quiver, const FlagType& ft) {
    for (const FlagStep& s : ft) {
        if (s.vertex < 0 || s.vertex >= quiver.vertex_count())
            throw std::invalid_argument("flag step at unknown vertex");
        if (s.mult < 1) throw std::invalid_argument("flag multiplicity must be positive");
    }
}

FlagType concat_flags(const FlagType& a, const FlagType& b) {
    FlagType out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

DimVec flag_rank_vector(const Quiver& quiver, const FlagType& ft) {
    DimVec out(quiver.vertex_count(), 0);
    for (const FlagStep& s : ft) out[s.vertex] += s.mult;
    return out;
}

long long n_vertex(const FlagType& ft, int vertex) {
    long long out = 0;
    for (size_t r = 0; r < ft.size(); ++r)
        for (size_t rp = r + 1; rp < ft.size(); ++rp)
            if (ft[r].vertex == vertex && ft[rp].vertex == vertex)
                out += static_cast<long long>(ft[r].mult) * ft[rp].mult;
    return out;
}

long long n_arrow(const FlagType& ft, const Arrow& h) {
    // source matches the earlier step, target the later one
    long long out = 0;
    for (size_t rp = 0; rp < ft.size(); ++rp)
        for (size_t r = rp + 1; r < ft.size(); ++r)
            if (ft[rp].vertex == h.src && ft[r].vertex == h.dst)
                out += static_cast<long long>(ft[rp].mult) * ft[r].mult;
    return out;
}

long long n_vertex_total(const Quiver& quiver, const FlagType& ft) {
    long long out = 0;
    for (int i = 0; i < quiver.vertex_count(); ++i) out += n_vertex(ft, i);
    return out;
}

long long n_arrow_total(const Quiver& quiver, const FlagType& ft) {
    long long out = 0;
    for (const Arrow& h : quiver.arrows) out += n_arrow(ft, h);
    return out;
}

FlagDims flag_dims(const Quiver& quiver, const FlagType& ft, int n) {
    validate_flag(quiver, ft);
    long long ni = n_vertex_total(quiver, ft);
    long long nh = n_arrow_total(quiver, ft);
    FlagDims out;
    out.flag_dim = static_cast<long long>(n) * ni;
    out.bundle_rank = static_cast<long long>(n) * nh;
    out.total_dim = out.flag_dim + out.bundle_rank;
    out.perverse_shift = out.total_dim + static_cast<long long>(n - 1) * ni;
    return out;
}

std::pair<long long, long long> d1_d2(const Quiver& quiver, const DimVec& tdim,
                                      const DimVec& wdim, int n) {
    if (static_cast<int>(tdim.size()) != quiver.vertex_count() ||
        static_cast<int>(wdim.size()) != quiver.vertex_count())
        throw std::invalid_argument("d1_d2: rank vector length mismatch");
    long long d1 = 0, d2 = 0;
    for (size_t i = 0; i < tdim.size(); ++i) {
        long long t = tdim[i], w = wdim[i], v = t + w;
        d2 += t * t + w * w;
        d1 += v * v - t * w;
    }
    for (const Arrow& h : quiver.arrows)
        d1 += static_cast<long long>(tdim[h.src]) * wdim[h.dst];
    return {n * d1, n * d2};
}

static long long cross_rank_sum(const DimVec& tdim, const DimVec& wdim) {
    long long out = 0;
    for (size_t i = 0; i < tdim.size(); ++i) out += static_cast<long long>(tdim[i]) * wdim[i];
    return out;
}

long long induction_shift(const Quiver& quiver, const DimVec& tdim, const DimVec& wdim, int n) {
    auto [d1, d2] = d1_d2(quiver, tdim, wdim, n);
    return d1 - d2 + static_cast<long long>(n - 1) * cross_rank_sum(tdim, wdim);
}

long long restriction_shift(const Quiver& quiver, const DimVec& tdim, const DimVec& wdim, int n) {
    auto [d1, d2] = d1_d2(quiver, tdim, wdim, n);
    long long parabolic = static_cast<long long>(n) * cross_rank_sum(tdim, wdim);  // dim G_V/P
    return d1 - d2 - 2 * parabolic + static_cast<long long>(n - 1) * cross_rank_sum(tdim, wdim);
}

bool check_concat_identity(const FlagType& ft1, const FlagType& ft2, int vertex) {
    long long lhs = n_vertex(concat_flags(ft1, ft2), vertex) - n_vertex(ft1, vertex) -
                    n_vertex(ft2, vertex);
    long long k1 = 0, k2 = 0;
    for (const FlagStep& s : ft1)
        if (s.vertex == vertex) k1 += s.mult;
    for (const FlagStep& s : ft2)
        if (s.vertex == vertex) k2 += s.mult;
    return lhs == k1 * k2;
}

long long degree_cancellation_defect(const Quiver& quiver, const FlagType& ft1,
                                     const FlagType& ft2, int n) {
    DimVec tdim = flag_rank_vector(quiver, ft1);
    DimVec wdim = flag_rank_vector(quiver, ft2);
    auto [d1, d2] = d1_d2(quiver, tdim, wdim, n);
    return flag_dims(quiver, ft1, n).total_dim + flag_dims(quiver, ft2, n).total_dim + d1 - d2 -
           flag_dims(quiver, concat_flags(ft1, ft2), n).total_dim;
}

std::uint64_t free_grassmannian_count(const Ring& R, int s, int l, std::uint64_t budget) {
    return enumerate_summand_forms(R, s, l, budget).size();
}

FlagType random_flag_type(std::mt19937_64& rng, int vertex_count, int max_len, int max_mult) {
    std::uniform_int_distribution<int> len(1, max_len), vert(0, vertex_count - 1),
        mult(1, max_mult);
    FlagType out;
    int m = len(rng);
    for (int i = 0; i < m; ++i) out.push_back({vert(rng), mult(rng)});
    return out;
}

}  // namespace hallq
