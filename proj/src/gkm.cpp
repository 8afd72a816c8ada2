#include "hallq/gkm.hpp"

#include <stdexcept>

namespace hallq {

void BorcherdsCartan::validate() const {
    for (int i = 0; i < size(); ++i) {
        if (static_cast<int>(a[i].size()) != size())
            throw std::invalid_argument("Cartan matrix not square");
        if (a[i][i] > 2 || a[i][i] % 2 != 0)
            throw std::invalid_argument("diagonal entries must lie in {2, 0, -2, ...}");
        for (int j = 0; j < size(); ++j) {
            if (i == j) continue;
            if (a[i][j] != a[j][i]) throw std::invalid_argument("Cartan matrix not symmetric");
            if (a[i][j] > 0) throw std::invalid_argument("positive off-diagonal entry");
        }
    }
}

BorcherdsCartan cartan_from_quiver(const Quiver& quiver, int n) {
    quiver.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    int nv = quiver.vertex_count();
    BorcherdsCartan out;
    out.a.assign(nv, std::vector<int>(nv, 0));
    for (int i = 0; i < nv; ++i) out.a[i][i] = n == 1 ? 2 : 0;
    for (const Arrow& h : quiver.arrows) {
        out.a[h.src][h.dst] -= 1;
        out.a[h.dst][h.src] -= 1;
    }
    out.validate();
    return out;
}

static int arrows_between(const Quiver& quiver, int i, int j) {
    int c = 0;
    for (const Arrow& h : quiver.arrows)
        c += (h.src == i && h.dst == j) || (h.src == j && h.dst == i);
    return c;
}

bool commutation_check(Context& ctx, int i, int j) {
    const Quiver& q = ctx.quiver();
    if (i == j || i < 0 || j < 0 || i >= q.vertex_count() || j >= q.vertex_count())
        throw std::invalid_argument("commutation_check: need two distinct vertices");
    if (arrows_between(q, i, j) != 0)
        throw std::invalid_argument("commutation_check requires a_ij = 0 (no arrows)");
    HallElement si = ctx.element(ctx.simple(i));
    HallElement sj = ctx.element(ctx.simple(j));
    return ctx.twisted_product(si, sj) == ctx.twisted_product(sj, si);
}

HallElement serre_residual(Context& ctx, int i, int j, const LaurentPoly& coeff) {
    const Quiver& q = ctx.quiver();
    if (i == j || i < 0 || j < 0 || i >= q.vertex_count() || j >= q.vertex_count())
        throw std::invalid_argument("serre_residual: need two distinct vertices");
    if (arrows_between(q, i, j) != 1)
        throw std::invalid_argument("serre_residual requires a single arrow between i and j");
    HallElement iij = ctx.word_product({i, i, j});
    HallElement iji = ctx.word_product({i, j, i});
    HallElement jii = ctx.word_product({j, i, i});
    SqrtQ c = eval_at_prime(coeff, ctx.q());
    HallElement out = ctx.sum(iij, ctx.scale(iji, -c));
    return ctx.sum(out, jii);
}

}  // namespace hallq
