#include <random>

#include "doctest.h"
#include "hallq/laurent.hpp"

using namespace hallq;

namespace {
LaurentPoly vp(int e) { return LaurentPoly::v_pow(e); }
}

TEST_CASE("laurent arithmetic") {
    // (v + v^-1)(v - v^-1) = v^2 - v^-2
    CHECK((vp(1) + vp(-1)) * (vp(1) - vp(-1)) == vp(2) - vp(-2));
    LaurentPoly f = vp(3) + LaurentPoly(Rational{5, 2}) - vp(-2);
    CHECK(f * LaurentPoly(Rational{1}) == f);
    // [2]^2 = v^2 + 2 + v^-2
    LaurentPoly two = vp(1) + vp(-1);
    LaurentPoly sq = two * two;
    CHECK(sq == vp(2) + LaurentPoly(Rational{2}) + vp(-2));
}

TEST_CASE("laurent text form") {
    CHECK((vp(4) + vp(2)).str() == "v^4 + v^2");
    CHECK((vp(1) + vp(-1)).str() == "v + v^-1");
    CHECK((LaurentPoly(Rational{-3, 2}) * vp(2)).str() == "-3/2*v^2");
    CHECK(LaurentPoly{}.str() == "0");
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> ed(-5, 5), cd(-6, 6), dd(1, 4);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly f;
        for (int t = 0; t < 4; ++t) f.set(ed(rng), Rational{cd(rng), dd(rng)});
        CHECK(parse_laurent(f.str()) == f);
    }
    CHECK(parse_laurent("v^4 + v^2") == vp(4) + vp(2));
    CHECK_THROWS_AS(parse_laurent("3 + + v"), std::invalid_argument);
}

TEST_CASE("evaluation at a prime") {
    CHECK(eval_at_prime(vp(2), 2) == SqrtQ::of(2, 2));  // v^n at q=2, n=2
    CHECK(eval_at_prime(vp(1), 5) == SqrtQ{Rational{0}, Rational{1}, 5});
    CHECK(eval_at_prime(vp(-1), 3) == SqrtQ{Rational{0}, Rational{1, 3}, 3});
    CHECK_THROWS_AS(eval_at_prime(vp(-1), 4), std::invalid_argument);
    // v * v^-1 = 1
    SqrtQ v = SqrtQ::v_pow(1, 7), vinv = SqrtQ::v_pow(-1, 7);
    CHECK(v * vinv == SqrtQ::of(1, 7));
    CHECK(SqrtQ::of(1, 7) / v == vinv);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> ed(-4, 4), cd(-5, 5), dd(1, 3);
    for (long long q : {2LL, 3LL, 5LL}) {
        for (int it = 0; it < 100; ++it) {
            LaurentPoly f, g;
            for (int t = 0; t < 3; ++t) {
                f.set(ed(rng), Rational{cd(rng), dd(rng)});
                g.set(ed(rng), Rational{cd(rng), dd(rng)});
            }
            CHECK(eval_at_prime(f * g, q) == eval_at_prime(f, q) * eval_at_prime(g, q));
            CHECK(eval_at_prime(f + g, q) == eval_at_prime(f, q) + eval_at_prime(g, q));
        }
    }
}

TEST_CASE("interpolation recovers polynomials in q") {
    // q |-> q + 1 over 2,3,5,7 at parity even, bound 1
    std::vector<std::pair<long long, SqrtQ>> samples;
    for (long long q : {2LL, 3LL, 5LL, 7LL}) samples.emplace_back(q, SqrtQ::of(q + 1, q));
    CHECK(interpolate_in_q(samples, Parity::even, 1) == vp(2) + LaurentPoly(Rational{1}));

    samples.clear();
    for (long long q : {2LL, 3LL, 5LL}) samples.emplace_back(q, SqrtQ::of(4, q));
    CHECK(interpolate_in_q(samples, Parity::even, 0) == LaurentPoly(Rational{4}));

    // q^n + q^{n-1} at n = 2: v^4 + v^2
    samples.clear();
    for (long long q : {2LL, 3LL, 5LL, 7LL}) samples.emplace_back(q, SqrtQ::of(q * q + q, q));
    CHECK(interpolate_in_q(samples, Parity::even, 2) == vp(4) + vp(2));
}

TEST_CASE("interpolation round-trips random fixed-parity polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> kd(0, 3), cd(-5, 5), dd(1, 3);
    const std::vector<long long> primes{2, 3, 5, 7, 11, 13};
    for (Parity parity : {Parity::even, Parity::odd}) {
        for (int it = 0; it < 100; ++it) {
            LaurentPoly f;  // one parity, v-degree <= 6, so q-degree <= 3
            for (int t = 0; t < 3; ++t) {
                int e = 2 * kd(rng) + (parity == Parity::odd ? 1 : 0);
                f.set(e, Rational{cd(rng), dd(rng)});
            }
            std::vector<std::pair<long long, SqrtQ>> samples;
            for (long long q : primes) samples.emplace_back(q, eval_at_prime(f, q));
            CHECK(interpolate_in_q(samples, parity, 3) == f);
        }
    }
}

TEST_CASE("interpolation failure modes") {
    // parity violation
    std::vector<std::pair<long long, SqrtQ>> samples;
    for (long long q : {2LL, 3LL, 5LL}) samples.emplace_back(q, eval_at_prime(vp(1), q));
    CHECK_THROWS_AS(interpolate_in_q(samples, Parity::even, 0), interpolation_error);
    // held-out validation failure: q^3 is not degree <= 1
    samples.clear();
    for (long long q : {2LL, 3LL, 5LL, 7LL}) samples.emplace_back(q, SqrtQ::of(q * q * q, q));
    CHECK_THROWS_AS(interpolate_in_q(samples, Parity::even, 1), interpolation_error);
    // too few samples
    samples.resize(2);
    CHECK_THROWS_AS(interpolate_in_q(samples, Parity::even, 1), std::invalid_argument);
    // non-prime
    samples = {{4, SqrtQ::of(1, 2)}, {3, SqrtQ::of(1, 3)}, {5, SqrtQ::of(1, 5)}};
    CHECK_THROWS_AS(interpolate_in_q(samples, Parity::even, 0), std::invalid_argument);
}
