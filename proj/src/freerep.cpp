#include "hallq/freerep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hallq {

FreeRep zero_rep(const Quiver& quiver, const Ring& R, const DimVec& dim) {
    if (static_cast<int>(dim.size()) != quiver.vertex_count())
        throw std::invalid_argument("zero_rep: dimension vector length mismatch");
    for (int d : dim)
        if (d < 0) throw std::invalid_argument("zero_rep: negative rank");
    FreeRep rep;
    rep.dim = dim;
    for (const Arrow& h : quiver.arrows)
        rep.maps.push_back(zero_matrix(R, dim[h.dst], dim[h.src]));
    return rep;
}

FreeRep simple_rep(const Quiver& quiver, const Ring& R, int v) {
    if (v < 0 || v >= quiver.vertex_count())
        throw std::invalid_argument("simple_rep: unknown vertex");
    DimVec dim(quiver.vertex_count(), 0);
    dim[v] = 1;
    return zero_rep(quiver, R, dim);
}

void validate_rep(const Quiver& quiver, const Ring& R, const FreeRep& rep) {
    if (static_cast<int>(rep.dim.size()) != quiver.vertex_count())
        throw std::invalid_argument("rep: dimension vector length mismatch");
    if (rep.maps.size() != quiver.arrows.size())
        throw std::invalid_argument("rep: arrow map count mismatch");
    for (size_t k = 0; k < rep.maps.size(); ++k) {
        const Arrow& h = quiver.arrows[k];
        if (rep.maps[k].rows != rep.dim[h.dst] || rep.maps[k].cols != rep.dim[h.src])
            throw std::invalid_argument("rep: arrow matrix shape mismatch");
        for (const RingElem& x : rep.maps[k].e)
            if (x.q != R.q() || x.n != R.n())
                throw std::invalid_argument("rep: entry from a different ring");
    }
}

std::vector<std::uint32_t> rep_code(const FreeRep& rep) {
    std::vector<std::uint32_t> out;
    out.reserve(rep.dim.size() + 8);
    for (int d : rep.dim) out.push_back(static_cast<std::uint32_t>(d));
    for (const RMatrix& m : rep.maps)
        for (const RingElem& x : m.e) out.push_back(x.code);
    return out;
}

static std::uint64_t nonzero_entries(const FreeRep& rep) {
    std::uint64_t c = 0;
    for (const RMatrix& m : rep.maps)
        for (const RingElem& x : m.e) c += !x.is_zero();
    return c;
}

bool rep_less(const FreeRep& a, const FreeRep& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    std::uint64_t na = nonzero_entries(a), nb = nonzero_entries(b);
    if (na != nb) return na < nb;
    // flattened comparison, zero entries last
    auto key = [](const RingElem& x) {
        return x.is_zero() ? UINT64_MAX : static_cast<std::uint64_t>(x.code);
    };
    for (size_t k = 0; k < a.maps.size(); ++k)
        for (size_t i = 0; i < a.maps[k].e.size(); ++i) {
            std::uint64_t ka = key(a.maps[k].e[i]), kb = key(b.maps[k].e[i]);
            if (ka != kb) return ka < kb;
        }
    return false;
}

// x / t^v, defined when val(x) >= v
static RingElem shift_down(const Ring& R, RingElem x, int v) {
    return R.from_code(x.code / static_cast<std::uint32_t>(
                                    [&] { std::uint32_t p = 1; for (int i = 0; i < v; ++i) p *= R.q(); return p; }()));
}

std::vector<int> smith_exponents(const Ring& R, RMatrix a) {
    int m = std::min(a.rows, a.cols);
    std::vector<int> exps;
    int d = 0;
    for (; d < m; ++d) {
        int bi = -1, bj = -1, bv = R.n();
        for (int i = d; i < a.rows; ++i)
            for (int j = d; j < a.cols; ++j) {
                int v = R.valuation(a.at(i, j));
                if (v < bv) { bv = v; bi = i; bj = j; }
            }
        if (bi < 0) break;  // submatrix is zero
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(d, j), a.at(bi, j));
        for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, d), a.at(i, bj));
        RingElem uinv = R.inverse(shift_down(R, a.at(d, d), bv));
        // pivot has minimal valuation, so every quotient below is exact
        for (int i = d + 1; i < a.rows; ++i) {
            RingElem x = a.at(i, d);
            if (x.is_zero()) continue;
            RingElem f = R.mul(shift_down(R, x, bv), uinv);
            for (int j = d; j < a.cols; ++j)
                a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(d, j)));
        }
        for (int j = d + 1; j < a.cols; ++j) {
            RingElem x = a.at(d, j);
            if (x.is_zero()) continue;
            RingElem f = R.mul(shift_down(R, x, bv), uinv);
            for (int i = d; i < a.rows; ++i)
                a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(i, d)));
        }
        exps.push_back(bv);
    }
    for (; d < m; ++d) exps.push_back(R.n());
    std::sort(exps.begin(), exps.end());
    return exps;
}

RMatrix smith_matrix(const Ring& R, int rows, int cols, const std::vector<int>& exponents) {
    RMatrix out = zero_matrix(R, rows, cols);
    for (size_t k = 0; k < exponents.size(); ++k)
        out.at(static_cast<int>(k), static_cast<int>(k)) = R.t_pow(exponents[k]);
    return out;
}

static FreeRep apply_vertex(const Quiver& quiver, const Ring& R, const FreeRep& rep, int v,
                            const RMatrix& g, const RMatrix& ginv) {
    FreeRep out = rep;
    for (size_t k = 0; k < quiver.arrows.size(); ++k) {
        if (quiver.arrows[k].dst == v) out.maps[k] = mat_mul(R, g, out.maps[k]);
        if (quiver.arrows[k].src == v) out.maps[k] = mat_mul(R, out.maps[k], ginv);
    }
    return out;
}

static std::uint64_t group_order(const Ring& R, const DimVec& dim, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int d : dim) total = checked_mul(total, gl_order(R, d, budget), budget, "orbit budget");
    return total;
}

static OrbitInfo orbit_walk(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                            std::uint64_t budget,
                            std::set<std::vector<std::uint32_t>>* collect) {
    validate_rep(quiver, R, rep);
    group_order(R, rep.dim, budget);  // spec precondition
    // Generators only matter at vertices touching an arrow.
    std::vector<bool> active(rep.dim.size(), false);
    for (const Arrow& h : quiver.arrows) active[h.src] = active[h.dst] = true;
    struct Gen { int vertex; RMatrix g, ginv; };
    std::vector<Gen> gens;
    for (int v = 0; v < quiver.vertex_count(); ++v) {
        if (!active[v] || rep.dim[v] == 0) continue;
        for (auto& [g, ginv] : gl_generators(R, rep.dim[v]))
            gens.push_back(Gen{v, g, ginv});
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<FreeRep> queue{rep};
    seen.insert(rep_code(rep));
    FreeRep best = rep;
    for (size_t head = 0; head < queue.size(); ++head) {
        FreeRep cur = queue[head];
        for (const Gen& gen : gens) {
            FreeRep next = apply_vertex(quiver, R, cur, gen.vertex, gen.g, gen.ginv);
            auto code = rep_code(next);
            if (seen.contains(code)) continue;
            if (seen.size() >= budget) throw budget_error("orbit exceeds budget cap");
            seen.insert(std::move(code));
            if (rep_less(next, best)) best = next;
            queue.push_back(std::move(next));
        }
    }
    std::uint64_t size = seen.size();
    if (collect) collect->merge(seen);
    return OrbitInfo{std::move(best), size};
}

OrbitInfo explore_orbit(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                        std::uint64_t budget) {
    return orbit_walk(quiver, R, rep, budget, nullptr);
}

static bool single_arrow(const Quiver& quiver) { return quiver.arrows.size() == 1; }

FreeRep canonical_form(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                       std::uint64_t budget) {
    validate_rep(quiver, R, rep);
    if (quiver.arrows.empty()) return rep;
    if (single_arrow(quiver)) {
        FreeRep out = rep;
        out.maps[0] = smith_matrix(R, rep.maps[0].rows, rep.maps[0].cols,
                                   smith_exponents(R, rep.maps[0]));
        return out;
    }
    return explore_orbit(quiver, R, rep, budget).canonical;
}

FreeRep canonical_form_by_orbit(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                                std::uint64_t budget) {
    return explore_orbit(quiver, R, rep, budget).canonical;
}

std::uint64_t aut_count(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                        std::uint64_t budget) {
    std::uint64_t g = group_order(R, rep.dim, budget);
    std::uint64_t orbit = explore_orbit(quiver, R, rep, budget).orbit_size;
    if (g % orbit != 0) throw std::logic_error("orbit size does not divide group order");
    return g / orbit;
}

std::uint64_t aut_count_bruteforce(const Quiver& quiver, const Ring& R, const FreeRep& rep,
                                   std::uint64_t budget) {
    validate_rep(quiver, R, rep);
    group_order(R, rep.dim, budget);
    std::vector<std::vector<RMatrix>> gls;
    for (int d : rep.dim) gls.push_back(enumerate_GL(R, d, budget));
    std::vector<size_t> idx(gls.size(), 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (size_t k = 0; ok && k < quiver.arrows.size(); ++k) {
            const Arrow& h = quiver.arrows[k];
            ok = mat_mul(R, gls[h.dst][idx[h.dst]], rep.maps[k]) ==
                 mat_mul(R, rep.maps[k], gls[h.src][idx[h.src]]);
        }
        count += ok;
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < gls[k].size()) break;
            idx[k] = 0;
        }
        if (k == idx.size()) break;
    }
    return count;
}

std::vector<FreeRep> iso_classes(const Quiver& quiver, const Ring& R, const DimVec& dim,
                                 std::uint64_t budget) {
    if (static_cast<int>(dim.size()) != quiver.vertex_count())
        throw std::invalid_argument("iso_classes: dimension vector length mismatch");
    std::vector<FreeRep> out;
    if (quiver.arrows.empty()) {
        out.push_back(zero_rep(quiver, R, dim));
        return out;
    }
    if (single_arrow(quiver)) {
        const Arrow& h = quiver.arrows[0];
        int rows = dim[h.dst], cols = dim[h.src];
        int m = std::min(rows, cols);
        // nondecreasing exponent sequences in {0..n}
        std::vector<int> e(m, 0);
        while (true) {
            FreeRep rep = zero_rep(quiver, R, dim);
            rep.maps[0] = smith_matrix(R, rows, cols, e);
            out.push_back(std::move(rep));
            int k = m - 1;
            while (k >= 0 && e[k] == R.n()) --k;
            if (k < 0) break;
            int v = e[k] + 1;
            for (int j = k; j < m; ++j) e[j] = v;
        }
        std::sort(out.begin(), out.end(), rep_less);
        return out;
    }
    // general case: sweep the whole representation space, partition into orbits
    std::uint64_t total = 1;
    for (const Arrow& h : quiver.arrows)
        total = checked_mul(
            total,
            checked_pow(R.size(), static_cast<unsigned>(dim[h.src]) * dim[h.dst], budget,
                        "iso_classes"),
            budget, "iso_classes");
    std::set<std::vector<std::uint32_t>> seen;
    FreeRep cursor = zero_rep(quiver, R, dim);
    std::uint64_t visited = 0;
    while (visited < total) {
        if (!seen.contains(rep_code(cursor)))
            out.push_back(orbit_walk(quiver, R, cursor, budget, &seen).canonical);
        // advance cursor through the flattened entry codes
        ++visited;
        bool carried = false;
        for (RMatrix& m : cursor.maps) {
            for (RingElem& x : m.e) {
                if (x.code + 1 < R.size()) {
                    x = R.from_code(x.code + 1);
                    carried = true;
                    break;
                }
                x = R.zero();
            }
            if (carried) break;
        }
        if (!carried) break;
    }
    std::sort(out.begin(), out.end(), rep_less);
    return out;
}

std::vector<SubrepPair> enumerate_free_subreps_raw(const Quiver& quiver, const Ring& R,
                                                   const FreeRep& L, const DimVec& w,
                                                   std::uint64_t budget) {
    validate_rep(quiver, R, L);
    if (w.size() != L.dim.size()) throw std::invalid_argument("subreps: rank vector length");
    if (!dim_leq(w, L.dim)) throw std::invalid_argument("subreps: rank vector too large");
    int nv = quiver.vertex_count();
    std::vector<std::vector<RMatrix>> forms(nv);
    std::uint64_t total = 1;
    for (int i = 0; i < nv; ++i) {
        forms[i] = enumerate_summand_forms(R, w[i], L.dim[i], budget);
        total = checked_mul(total, forms[i].size(), budget, "enumerate_free_subreps");
    }
    DimVec qdim(nv);
    for (int i = 0; i < nv; ++i) qdim[i] = L.dim[i] - w[i];

    std::vector<SubrepPair> out;
    std::vector<size_t> idx(nv, 0);
    while (true) {
        // x-stability plus the induced maps, column by column
        bool stable = true;
        FreeRep sub = zero_rep(quiver, R, w);
        FreeRep quot = zero_rep(quiver, R, qdim);
        for (size_t k = 0; stable && k < quiver.arrows.size(); ++k) {
            const Arrow& h = quiver.arrows[k];
            const RMatrix& wsrc = forms[h.src][idx[h.src]];
            const RMatrix& wdst = forms[h.dst][idx[h.dst]];
            for (int c = 0; stable && c < w[h.src]; ++c) {
                RMatrix y = mat_mul(R, L.maps[k], mat_col(wsrc, c));
                auto z = echelon_solve(R, wdst, y);
                if (!z) { stable = false; break; }
                for (int rr = 0; rr < w[h.dst]; ++rr) sub.maps[k].at(rr, c) = z->at(rr, 0);
            }
        }
        if (stable) {
            // quotient in the complement basis: coordinate vectors at the
            // non-pivot rows of the destination echelon form
            for (size_t k = 0; k < quiver.arrows.size(); ++k) {
                const Arrow& h = quiver.arrows[k];
                const RMatrix& wsrc = forms[h.src][idx[h.src]];
                const RMatrix& wdst = forms[h.dst][idx[h.dst]];
                std::vector<int> psrc =
                    w[h.src] > 0 ? echelon_pivot_rows(R, wsrc) : std::vector<int>{};
                std::vector<int> pdst =
                    w[h.dst] > 0 ? echelon_pivot_rows(R, wdst) : std::vector<int>{};
                std::vector<bool> is_pivot_src(L.dim[h.src], false), is_pivot_dst(L.dim[h.dst], false);
                for (int p : psrc) is_pivot_src[p] = true;
                for (int p : pdst) is_pivot_dst[p] = true;
                std::vector<int> csrc, cdst;  // complement rows
                for (int r = 0; r < L.dim[h.src]; ++r)
                    if (!is_pivot_src[r]) csrc.push_back(r);
                for (int r = 0; r < L.dim[h.dst]; ++r)
                    if (!is_pivot_dst[r]) cdst.push_back(r);
                for (size_t c = 0; c < csrc.size(); ++c) {
                    RMatrix y = mat_col(L.maps[k], csrc[c]);
                    // subtract the W-component read off the pivot rows
                    RMatrix z(w[h.dst], 1, R.zero());
                    for (int j = 0; j < w[h.dst]; ++j) z.at(j, 0) = y.at(pdst[j], 0);
                    RMatrix rem = w[h.dst] > 0 ? mat_sub(R, y, mat_mul(R, wdst, z)) : y;
                    for (size_t rr = 0; rr < cdst.size(); ++rr)
                        quot.maps[k].at(static_cast<int>(rr), static_cast<int>(c)) =
                            rem.at(cdst[rr], 0);
                }
            }
            SubrepPair pair;
            for (int i = 0; i < nv; ++i) pair.forms.push_back(forms[i][idx[i]]);
            pair.sub = std::move(sub);
            pair.quot = std::move(quot);
            out.push_back(std::move(pair));
        }
        int k = 0;
        for (; k < nv; ++k) {
            if (++idx[k] < forms[k].size()) break;
            idx[k] = 0;
        }
        if (k == nv) break;
    }
    return out;
}

}  // namespace hallq
