#include <doctest.h>

#include "helpers.hpp"
#include "lind/precision.hpp"

using namespace lind;

TEST_CASE("context enforces minimum digits") {
    CHECK_THROWS_AS(PrecisionContext(49), InputError);
    PrecisionContext ctx(50);
    CHECK(ctx.digits() == 50);
    CHECK(ctx.bits() >= 166);
}

TEST_CASE("string round trip is bit exact") {
    PrecisionContext ctx(80);
    test::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        BigReal x = rng.real(ctx.bits());
        x *= pow10(rng.integer(-40, 40), ctx.bits());
        BigReal y = BigReal::from_string(x.to_string(), ctx.bits());
        CHECK(x == y);
    }
    CHECK(BigReal(ctx).to_string() == "0");
}

TEST_CASE("complex arithmetic basics") {
    PrecisionContext ctx(60);
    const mpfr_prec_t b = ctx.bits();
    BigComplex i(BigReal(0L, b), BigReal(1L, b));
    BigComplex z = i * i;
    CHECK(z.re() == BigReal(-1L, b));
    CHECK(z.im().is_zero());

    BigComplex w(BigReal(3L, b), BigReal(4L, b));
    CHECK(w.abs() == BigReal(5L, b));
    BigComplex q = w / w;
    CHECK(abs(q.re() - BigReal(1L, b)) < pow10(-55, b));
    CHECK(abs(q.im()) < pow10(-55, b));

    // mul_i matches multiplication by i
    BigComplex w2 = w;
    w2.mul_i();
    BigComplex w3 = w * i;
    CHECK(w2 == w3);
}

TEST_CASE("exp_i lies on the unit circle") {
    PrecisionContext ctx(100);
    test::Rng rng(3);
    BigReal one(1L, ctx.bits());
    BigReal tol = pow10(-95, ctx.bits());
    for (int k = 0; k < 20; ++k) {
        BigReal t = rng.real(ctx.bits());
        t *= 7;
        BigComplex z = exp_i(t);
        CHECK(abs(z.norm_sq() - one) < tol);
    }
}

TEST_CASE("add_mul accumulates a*b") {
    PrecisionContext ctx(70);
    test::Rng rng(11);
    BigReal scratch(ctx.bits());
    for (int k = 0; k < 20; ++k) {
        BigComplex a = rng.complex(ctx.bits());
        BigComplex b = rng.complex(ctx.bits());
        BigComplex acc = rng.complex(ctx.bits());
        BigComplex expect = acc + a * b;
        add_mul(acc, a, b, scratch);
        CHECK(abs((acc - expect).abs()) < pow10(-60, ctx.bits()));
    }
}
