#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hallq/freerep.hpp"
#include "hallq/quiver.hpp"

using namespace hallq;

namespace {

FreeRep a2_rep(const Quiver& q, const Ring& R, const DimVec& dim,
               const std::vector<std::vector<const char*>>& rows) {
    FreeRep rep = zero_rep(q, R, dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            rep.maps[0].at(static_cast<int>(i), static_cast<int>(j)) =
                R.parse_elem(rows[i][j]);
    return rep;
}

// oracle: some group tuple carries x to y
bool isomorphic_bruteforce(const Quiver& quiver, const Ring& R, const FreeRep& x,
                           const FreeRep& y) {
    if (x.dim != y.dim) return false;
    std::vector<std::vector<RMatrix>> gls;
    for (int d : x.dim) gls.push_back(enumerate_GL(R, d));
    std::vector<size_t> idx(gls.size(), 0);
    while (true) {
        bool ok = true;
        for (size_t k = 0; ok && k < quiver.arrows.size(); ++k) {
            const Arrow& h = quiver.arrows[k];
            ok = mat_mul(R, gls[h.dst][idx[h.dst]], x.maps[k]) ==
                 mat_mul(R, y.maps[k], gls[h.src][idx[h.src]]);
        }
        if (ok) return true;
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (++idx[k] < gls[k].size()) break;
            idx[k] = 0;
        }
        if (k == idx.size()) return false;
    }
}

std::vector<FreeRep> all_reps(const Quiver& quiver, const Ring& R, const DimVec& dim) {
    std::vector<FreeRep> out;
    FreeRep cur = zero_rep(quiver, R, dim);
    while (true) {
        out.push_back(cur);
        bool carried = false;
        for (RMatrix& m : cur.maps) {
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
    return out;
}

}  // namespace

TEST_CASE("euler form on A_2") {
    Quiver q = quiver_preset("a2");
    CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(q, {0, 1}, {1, 0}) == 0);
    CHECK(euler_form(q, {1, 1}, {1, 1}) == 1);
    CHECK_THROWS_AS(euler_form(q, {1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("euler form is bilinear") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> d(0, 5);
    for (const char* preset : {"a2", "a3", "two-points"}) {
        Quiver q = quiver_preset(preset);
        int nv = q.vertex_count();
        for (int it = 0; it < 50; ++it) {
            DimVec a(nv), a2(nv), b(nv);
            for (int i = 0; i < nv; ++i) { a[i] = d(rng); a2[i] = d(rng); b[i] = d(rng); }
            CHECK(euler_form(q, dim_add(a, a2), b) == euler_form(q, a, b) + euler_form(q, a2, b));
            CHECK(euler_form(q, b, dim_add(a, a2)) == euler_form(q, b, a) + euler_form(q, b, a2));
        }
    }
}

TEST_CASE("simple representations") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    FreeRep s1 = simple_rep(q, R, 0);
    CHECK(s1.dim == DimVec{1, 0});
    CHECK(s1.maps[0].rows == 0);
    CHECK(s1.maps[0].cols == 1);
    FreeRep s2 = simple_rep(q, R, 1);
    CHECK(s2.dim == DimVec{0, 1});
    CHECK(s2.maps[0].rows == 1);
    CHECK(s2.maps[0].cols == 0);
    CHECK_THROWS_AS(simple_rep(q, R, 7), std::invalid_argument);
}

TEST_CASE("canonical form spec examples") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    CHECK(canonical_form(q, R, a2_rep(q, R, {1, 1}, {{"1+t"}})) ==
          a2_rep(q, R, {1, 1}, {{"1"}}));
    FreeRep zero = zero_rep(q, R, {2, 2});
    CHECK(canonical_form(q, R, zero) == zero);

    // [[t,1],[0,t]] ~ Diag(1, t^2)
    Ring R3({2, 3});
    FreeRep x = a2_rep(q, R3, {2, 2}, {{"t", "1"}, {"0", "t"}});
    CHECK(canonical_form(q, R3, x) == a2_rep(q, R3, {2, 2}, {{"1", "0"}, {"0", "t^2"}}));
    // at n = 2 the same matrix degenerates to Diag(1, 0)
    FreeRep x2 = a2_rep(q, R, {2, 2}, {{"t", "1"}, {"0", "t"}});
    CHECK(canonical_form(q, R, x2) == a2_rep(q, R, {2, 2}, {{"1", "0"}, {"0", "0"}}));
}

TEST_CASE("canonical form separates orbits exactly (oracle: group exhaustion)") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    for (DimVec dim : {DimVec{1, 1}, DimVec{2, 1}}) {
        auto reps = all_reps(q, R, dim);
        for (const FreeRep& x : reps)
            for (const FreeRep& y : reps) {
                bool same = canonical_form(q, R, x) == canonical_form(q, R, y);
                CHECK(same == isomorphic_bruteforce(q, R, x, y));
            }
    }
}

TEST_CASE("single-arrow fast path agrees with the orbit walk") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    for (int d1 = 0; d1 <= 2; ++d1)
        for (int d2 = 0; d2 <= 2; ++d2)
            for (const FreeRep& x : all_reps(q, R, {d1, d2}))
                CHECK(canonical_form(q, R, x) == canonical_form_by_orbit(q, R, x));
    // spot checks at the other parameter sets
    for (RingParams p : {RingParams{3, 2}, RingParams{2, 3}}) {
        Ring S(p);
        for (DimVec dim : {DimVec{1, 1}, DimVec{2, 1}})
            for (const FreeRep& x : all_reps(q, S, dim))
                CHECK(canonical_form(q, S, x) == canonical_form_by_orbit(q, S, x));
    }
}

TEST_CASE("canonical form on a multi-arrow quiver") {
    Quiver q = quiver_preset("a3");
    Ring R({2, 2});
    FreeRep a = zero_rep(q, R, {1, 1, 1});
    a.maps[0].at(0, 0) = R.from_coeffs({1, 1});
    a.maps[1].at(0, 0) = R.one();
    FreeRep b = zero_rep(q, R, {1, 1, 1});
    b.maps[0].at(0, 0) = R.one();
    b.maps[1].at(0, 0) = R.from_coeffs({1, 1});
    FreeRep c = zero_rep(q, R, {1, 1, 1});
    c.maps[0].at(0, 0) = R.one();
    c.maps[1].at(0, 0) = R.one();
    CHECK(canonical_form(q, R, a) == c);
    CHECK(canonical_form(q, R, b) == c);
    CHECK(canonical_form(q, R, c) == c);
}

TEST_CASE("automorphism counts") {
    Quiver q = quiver_preset("a2");
    {
        Ring R({2, 2});
        CHECK(aut_count(q, R, simple_rep(q, R, 0)) == 2);
        CHECK(aut_count(q, R, a2_rep(q, R, {1, 1}, {{"1"}})) == 2);
    }
    {
        Ring R({2, 1});
        CHECK(aut_count(q, R, simple_rep(q, R, 0)) == 1);
    }
    for (RingParams p : {RingParams{2, 2}, RingParams{3, 1}}) {
        Ring R(p);
        for (DimVec dim : {DimVec{1, 0}, DimVec{1, 1}, DimVec{2, 0}, DimVec{2, 1}})
            for (const FreeRep& cls : iso_classes(q, R, dim))
                CHECK(aut_count(q, R, cls) == aut_count_bruteforce(q, R, cls));
    }
}

TEST_CASE("iso classes at A_2 dim (1,1) number n+1") {
    Quiver q = quiver_preset("a2");
    for (int n : {1, 2, 3}) {
        Ring R({2, n});
        CHECK(iso_classes(q, R, {1, 1}).size() == static_cast<size_t>(n + 1));
    }
}

TEST_CASE("iso classes on the arrowless quiver") {
    Quiver q = quiver_preset("two-points");
    Ring R({2, 2});
    auto cls = iso_classes(q, R, {2, 1});
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] == zero_rep(q, R, {2, 1}));
}

TEST_CASE("free subrepresentation enumeration") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});

    // L = S_1 (+) S_1: every rank-1 free summand of R^2 is x-stable
    FreeRep l20 = zero_rep(q, R, {2, 0});
    auto pairs = enumerate_free_subreps_raw(q, R, l20, {1, 0});
    CHECK(pairs.size() == 6);  // q^n + q^{n-1}
    FreeRep s1 = simple_rep(q, R, 0);
    for (const auto& pr : pairs) {
        CHECK(canonical_form(q, R, pr.sub) == s1);
        CHECK(canonical_form(q, R, pr.quot) == s1);
    }

    // L = (R -0-> R): single S_1 subrep with quotient S_2
    FreeRep l11 = zero_rep(q, R, {1, 1});
    auto p2 = enumerate_free_subreps_raw(q, R, l11, {1, 0});
    REQUIRE(p2.size() == 1);
    CHECK(canonical_form(q, R, p2[0].sub) == simple_rep(q, R, 0));
    CHECK(canonical_form(q, R, p2[0].quot) == simple_rep(q, R, 1));

    // w = |L|: exactly the pair (L, zero representation)
    FreeRep lt = a2_rep(q, R, {1, 1}, {{"t"}});
    auto p3 = enumerate_free_subreps_raw(q, R, lt, {1, 1});
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].sub == lt);
    CHECK(p3[0].quot == zero_rep(q, R, {0, 0}));

    // rank additivity across everything small
    for (DimVec ldim : {DimVec{1, 1}, DimVec{2, 1}})
        for (const FreeRep& L : iso_classes(q, R, ldim))
            for (int w1 = 0; w1 <= ldim[0]; ++w1)
                for (int w2 = 0; w2 <= ldim[1]; ++w2)
                    for (const auto& pr : enumerate_free_subreps_raw(q, R, L, {w1, w2}))
                        CHECK(dim_add(pr.sub.dim, pr.quot.dim) == L.dim);
}

TEST_CASE("orbit budget guard") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    FreeRep big = zero_rep(q, R, {2, 2});
    CHECK_THROWS_AS(canonical_form_by_orbit(q, R, big, 10), budget_error);
}

TEST_CASE("quiver validation") {
    Quiver loop{{1}, {{0, 0}}};
    CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
    CHECK_THROWS_AS(quiver_preset("junk"), std::invalid_argument);
    CHECK(quiver_preset("a3").arrow_count() == 2);
}
