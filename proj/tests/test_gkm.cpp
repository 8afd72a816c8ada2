#include "doctest.h"
#include "hallq/gkm.hpp"

using namespace hallq;

namespace {
LaurentPoly quantum_two() { return LaurentPoly::v_pow(1) + LaurentPoly::v_pow(-1); }
}

TEST_CASE("cartan matrix from a quiver") {
    BorcherdsCartan c1 = cartan_from_quiver(quiver_preset("a2"), 1);
    CHECK(c1.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK_FALSE(c1.imaginary(0));

    BorcherdsCartan c0 = cartan_from_quiver(quiver_preset("two-points"), 1);
    CHECK(c0.a[0][1] == 0);

    BorcherdsCartan c2 = cartan_from_quiver(quiver_preset("a2"), 2);
    CHECK(c2.a[0][1] == -1);
    CHECK(c2.imaginary(0));
    CHECK(c2.imaginary(1));

    BorcherdsCartan bad{{{2, 1}, {1, 2}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("generator commutation on the arrowless quiver") {
    for (RingParams p : {RingParams{2, 1}, RingParams{2, 2}, RingParams{3, 2}, RingParams{2, 3}}) {
        Context ctx(quiver_preset("two-points"), p);
        CHECK(commutation_check(ctx, 0, 1));
    }
    Context a2(quiver_preset("a2"), RingParams{2, 2});
    CHECK_THROWS_AS(commutation_check(a2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(commutation_check(a2, 0, 0), std::invalid_argument);
}

TEST_CASE("quantum Serre relation holds exactly when n = 1") {
    for (long long q : {2, 3, 5}) {
        Context ctx(quiver_preset("a2"), RingParams{static_cast<int>(q), 1});
        CHECK(serre_residual(ctx, 0, 1, quantum_two()).is_zero());
        CHECK(serre_residual(ctx, 1, 0, quantum_two()).is_zero());
    }
}

TEST_CASE("no quantum Serre relation once n >= 2") {
    for (int n : {2, 3})
        for (int q : {2, 3}) {
            Context ctx(quiver_preset("a2"), RingParams{q, n});
            CHECK_FALSE(serre_residual(ctx, 0, 1, quantum_two()).is_zero());
            LaurentPoly vn = LaurentPoly::v_pow(n) + LaurentPoly::v_pow(-n);
            CHECK_FALSE(serre_residual(ctx, 0, 1, vn).is_zero());
        }
}

TEST_CASE("serre residual is linear in the coefficient") {
    Context ctx(quiver_preset("a2"), RingParams{2, 2});
    LaurentPoly c1 = quantum_two();
    LaurentPoly c2 = LaurentPoly::v_pow(2) + LaurentPoly(Rational{3});
    HallElement diff = ctx.sum(serre_residual(ctx, 0, 1, c1),
                               ctx.scale(serre_residual(ctx, 0, 1, c2), ctx.scalar(-1)));
    HallElement expected =
        ctx.scale(ctx.word_product({0, 1, 0}), eval_at_prime(c2 - c1, ctx.q()));
    CHECK(diff == expected);

    // coeff = 0 gives the two outer words literally
    HallElement zero_coeff = serre_residual(ctx, 0, 1, LaurentPoly{});
    CHECK(zero_coeff == ctx.sum(ctx.word_product({0, 0, 1}), ctx.word_product({1, 0, 0})));
}

TEST_CASE("serre residual preconditions") {
    Context two(quiver_preset("two-points"), RingParams{2, 2});
    CHECK_THROWS_AS(serre_residual(two, 0, 1, quantum_two()), std::invalid_argument);
    Context a2(quiver_preset("a2"), RingParams{2, 2});
    CHECK_THROWS_AS(serre_residual(a2, 0, 0, quantum_two()), std::invalid_argument);
}
