#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lind/numerics.hpp"

using namespace lind;

TEST_CASE("frequency values") {
    PrecisionContext ctx(50);
    BigReal golden = eval_frequency(FrequencySpec{FrequencyKind::golden}, ctx);
    CHECK(golden.to_string(21).substr(0, 22) == "0.618033988749894848204");

    BigReal plastic = eval_frequency(FrequencySpec{FrequencyKind::plastic_inverse}, ctx);
    CHECK(plastic.to_string(4).substr(0, 8) == "0.7548e0");

    BigReal trib = eval_frequency(FrequencySpec{FrequencyKind::tribonacci_inverse}, ctx);
    CHECK(trib.to_string(4).substr(0, 8) == "0.5436e0");

    BigReal s2 = eval_frequency(FrequencySpec{FrequencyKind::sqrt2_inverse}, ctx);
    CHECK(s2.to_string(5).substr(0, 9) == "0.70711e0");
}

TEST_CASE("algebraic frequencies satisfy their polynomials") {
    for (int digits : {50, 200, 800}) {
        PrecisionContext ctx(digits);
        const mpfr_prec_t b = ctx.bits();
        BigReal tol = pow10(-(digits - 5), b);

        BigReal om = eval_frequency(FrequencySpec{FrequencyKind::plastic_inverse}, ctx);
        BigReal s = BigReal(1L, b) / om;
        BigReal p = s * s * s - s - 1;
        CHECK(abs(p) <= tol);

        om = eval_frequency(FrequencySpec{FrequencyKind::tribonacci_inverse}, ctx);
        BigReal t = BigReal(1L, b) / om;
        p = t * t * t - t * t - t - 1;
        CHECK(abs(p) <= tol);
    }
}

TEST_CASE("frequency evaluation is deterministic") {
    PrecisionContext ctx(300);
    BigReal a = eval_frequency(FrequencySpec{FrequencyKind::tribonacci_inverse}, ctx);
    BigReal b = eval_frequency(FrequencySpec{FrequencyKind::tribonacci_inverse}, ctx);
    CHECK(a.to_string() == b.to_string());
}

TEST_CASE("custom frequency parsing") {
    PrecisionContext ctx(50);
    FrequencySpec spec = FrequencySpec::parse("0.4142135623");
    CHECK(spec.kind == FrequencyKind::custom);
    BigReal v = eval_frequency(spec, ctx);
    CHECK(abs(v - BigReal(0.4142135623, ctx.bits())) < pow10(-9, ctx.bits()));
    FrequencySpec bad;
    bad.kind = FrequencyKind::custom;
    bad.custom_value = "not-a-number";
    CHECK_THROWS_AS(eval_frequency(bad, ctx), InputError);
}

TEST_CASE("linear solver: identity and hand 2x2") {
    PrecisionContext ctx(60);
    const mpfr_prec_t b = ctx.bits();
    DenseMatrix<BigReal> I;
    I.n = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) I.a.push_back(BigReal(i == j ? 1L : 0L, b));
    std::vector<BigReal> rhs{BigReal(2L, b), BigReal(-5L, b), BigReal(7L, b)};
    auto x = solve_dense_linear(I, rhs, ctx);
    for (int i = 0; i < 3; ++i) CHECK(x[static_cast<size_t>(i)] == rhs[static_cast<size_t>(i)]);

    DenseMatrix<BigReal> A;
    A.n = 2;
    A.a = {BigReal(1L, b), BigReal(1L, b), BigReal(1L, b), BigReal(-1L, b)};
    auto y = solve_dense_linear(A, {BigReal(2L, b), BigReal(0L, b)}, ctx);
    CHECK(abs(y[0] - BigReal(1L, b)) < pow10(-55, b));
    CHECK(abs(y[1] - BigReal(1L, b)) < pow10(-55, b));
}

namespace {

// exact integer inverse of the n x n Hilbert matrix
long long hilbert_inverse_entry(int n, int i, int j) {
    auto binom = [](long long a, long long k) {
        long double r = 1;
        for (long long q = 1; q <= k; ++q) r = r * static_cast<long double>(a - k + q) / q;
        return static_cast<long long>(r + 0.5L);
    };
    long long v = binom(n + i, n - j - 1) * binom(n + j, n - i - 1);
    v *= binom(i + j, i) * binom(i + j, i);
    v *= (i + j + 1);
    return ((i + j) % 2 == 0) ? v : -v;
}

} // namespace

TEST_CASE("linear solver: Hilbert 6x6 against the exact rational inverse") {
    PrecisionContext ctx(80);
    const mpfr_prec_t b = ctx.bits();
    const int n = 6;
    DenseMatrix<BigReal> H;
    H.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigReal e(1L, b);
            e /= (i + j + 1);
            H.a.push_back(std::move(e));
        }
    std::vector<BigReal> ones(static_cast<size_t>(n), BigReal(1L, b));
    auto x = solve_dense_linear(H, ones, ctx);
    BigReal tol = pow10(-(ctx.digits() - 15), b);
    for (int i = 0; i < n; ++i) {
        BigReal exact(b);
        for (int j = 0; j < n; ++j) exact += BigReal(hilbert_inverse_entry(n, i, j), b);
        CHECK(abs(x[static_cast<size_t>(i)] - exact) <= tol);
    }
}

TEST_CASE("linear solver: residual bound on random well-conditioned systems") {
    PrecisionContext ctx(50);
    const mpfr_prec_t b = ctx.bits();
    test::Rng rng(19);
    BigReal bound_base = pow10(-(ctx.digits() / 2), b);
    for (int dim = 2; dim <= 20; ++dim) {
        for (int rep = 0; rep < 100 / 10; ++rep) { // 10 per dimension keeps the suite quick
            DenseMatrix<BigReal> A;
            A.n = dim;
            for (int i = 0; i < dim * dim; ++i) A.a.push_back(rng.real(b));
            // diagonal dominance for conditioning
            for (int i = 0; i < dim; ++i) A.at(i, i) += (A.at(i, i).sign() >= 0 ? dim : -dim);
            std::vector<BigReal> rhs;
            BigReal bmax(b);
            for (int i = 0; i < dim; ++i) {
                rhs.push_back(rng.real(b));
                bmax = max(bmax, abs(rhs.back()));
            }
            auto x = solve_dense_linear(A, rhs, ctx);
            // residual
            BigReal worst(b);
            for (int i = 0; i < dim; ++i) {
                BigReal acc(b);
                for (int j = 0; j < dim; ++j) acc += A.at(i, j) * x[static_cast<size_t>(j)];
                worst = max(worst, abs(acc - rhs[static_cast<size_t>(i)]));
            }
            CHECK(worst <= bound_base * bmax);
        }
    }
}

TEST_CASE("linear solver: singular matrix carries the failing column") {
    PrecisionContext ctx(50);
    const mpfr_prec_t b = ctx.bits();
    DenseMatrix<BigReal> A;
    A.n = 2;
    A.a = {BigReal(1L, b), BigReal(2L, b), BigReal(2L, b), BigReal(4L, b)};
    try {
        solve_dense_linear(A, {BigReal(1L, b), BigReal(1L, b)}, ctx);
        FAIL("expected SingularSystemError");
    } catch (const SingularSystemError& e) {
        CHECK(e.column == 1);
    }
}

TEST_CASE("poly_roots: factorizations") {
    PrecisionContext ctx(60);
    const mpfr_prec_t b = ctx.bits();
    BigReal tol = pow10(-40, b);

    // z^2 - 1
    std::vector<BigComplex> c{BigComplex(BigReal(-1L, b)), BigComplex(BigReal(0L, b)),
                              BigComplex(BigReal(1L, b))};
    auto roots = poly_roots(c, tol);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(),
              [](const BigComplex& x, const BigComplex& y) { return x.re() < y.re(); });
    CHECK(abs(roots[0].re() + 1) < pow10(-40, b));
    CHECK(abs(roots[1].re() - 1) < pow10(-40, b));

    // 1 - 2z: root 0.5
    std::vector<BigComplex> g{BigComplex(BigReal(1L, b)), BigComplex(BigReal(-2L, b))};
    auto r2 = poly_roots(g, tol);
    REQUIRE(r2.size() == 1);
    CHECK(abs(r2[0].re() - BigReal(0.5, b)) < pow10(-50, b));
    CHECK(abs(r2[0].im()) < pow10(-50, b));
}

TEST_CASE("poly_roots: degree 12 with known roots, and re-multiplication") {
    PrecisionContext ctx(100);
    const mpfr_prec_t b = ctx.bits();
    test::Rng rng(23);
    std::vector<BigComplex> roots;
    for (int i = 0; i < 12; ++i) {
        BigComplex z = rng.complex(b);
        z *= 2;
        roots.push_back(z);
    }
    // polynomial = prod (z - root_i)
    std::vector<BigComplex> c{BigComplex(BigReal(1L, b))};
    for (const auto& rt : roots) {
        std::vector<BigComplex> next(c.size() + 1, BigComplex(b));
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * rt;
        }
        c = std::move(next);
    }
    BigReal tol = pow10(-70, b);
    auto found = poly_roots(c, tol);
    REQUIRE(found.size() == 12);
    // greedy matching
    BigReal worst(b);
    std::vector<bool> used(12, false);
    for (const auto& rt : roots) {
        int best = -1;
        BigReal bd(b);
        for (int i = 0; i < 12; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            BigReal d = (found[static_cast<size_t>(i)] - rt).abs();
            if (best < 0 || d < bd) { best = i; bd = d; }
        }
        used[static_cast<size_t>(best)] = true;
        worst = max(worst, bd);
    }
    CHECK(worst < pow10(-30, b));

    // re-multiplied monic polynomial matches normalized input coefficients
    std::vector<BigComplex> re{BigComplex(BigReal(1L, b))};
    for (const auto& rt : found) {
        std::vector<BigComplex> next(re.size() + 1, BigComplex(b));
        for (size_t i = 0; i < re.size(); ++i) {
            next[i + 1] += re[i];
            next[i] -= re[i] * rt;
        }
        re = std::move(next);
    }
    BigReal tol2 = pow10(-(ctx.digits() / 2), b);
    BigReal scale(b);
    for (const auto& z : c) scale = max(scale, z.abs());
    for (size_t i = 0; i < c.size(); ++i) {
        BigComplex diff = re[i] - c[i]; // input is already monic
        CHECK(diff.abs() <= tol2 * scale);
    }
}

TEST_CASE("poly_roots: conjugate symmetry for real coefficients") {
    PrecisionContext ctx(60);
    const mpfr_prec_t b = ctx.bits();
    test::Rng rng(31);
    std::vector<BigComplex> c;
    for (int i = 0; i <= 9; ++i) c.emplace_back(rng.real(b));
    auto roots = poly_roots(c, pow10(-40, b));
    BigReal tol = pow10(-20, b);
    for (const auto& z : roots) {
        bool matched = false;
        for (const auto& w : roots)
            if ((w - z.conj()).abs() <= tol) { matched = true; break; }
        CHECK(matched);
    }
}
