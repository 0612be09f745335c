#include "lind/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace lind {

FrequencySpec FrequencySpec::parse(const std::string& text) {
    FrequencySpec s;
    if (text == "golden") s.kind = FrequencyKind::golden;
    else if (text == "sqrt2-inverse") s.kind = FrequencyKind::sqrt2_inverse;
    else if (text == "plastic-inverse") s.kind = FrequencyKind::plastic_inverse;
    else if (text == "tribonacci-inverse") s.kind = FrequencyKind::tribonacci_inverse;
    else {
        // anything else must parse as a decimal literal
        s.kind = FrequencyKind::custom;
        s.custom_value = text;
    }
    return s;
}

std::string FrequencySpec::name() const {
    switch (kind) {
        case FrequencyKind::golden: return "golden";
        case FrequencyKind::sqrt2_inverse: return "sqrt2-inverse";
        case FrequencyKind::plastic_inverse: return "plastic-inverse";
        case FrequencyKind::tribonacci_inverse: return "tribonacci-inverse";
        case FrequencyKind::custom: return custom_value ? *custom_value : "custom";
    }
    return "?";
}

namespace {

// Newton iteration for a cubic with integer coefficients c3 x^3 + c2 x^2
// + c1 x + c0, seeded inside [1,2] where both roots of interest live.
BigReal cubic_root_newton(long c3, long c2, long c1, long c0, double seed, mpfr_prec_t bits) {
    BigReal x(seed, bits);
    BigReal p(bits), dp(bits), step(bits);
    // quadratic convergence: 2*log2(bits) iterations are plenty
    int iters = 2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(bits)))) + 8;
    for (int it = 0; it < iters; ++it) {
        // p = ((c3 x + c2) x + c1) x + c0, dp = (3 c3 x + 2 c2) x + c1
        p = x; p *= c3; p += c2; p *= x; p += c1; p *= x; p += c0;
        dp = x; dp *= 3 * c3; dp += 2 * c2; dp *= x; dp += c1;
        step = p / dp;
        x -= step;
    }
    return x;
}

void check_poly_residual(long c3, long c2, long c1, long c0, const BigReal& root,
                         const PrecisionContext& ctx, const std::string& what) {
    BigReal p = root; p *= c3; p += c2; p *= root; p += c1; p *= root; p += c0;
    if (!(abs(p) <= pow10(-(ctx.digits() - 5), ctx.bits())))
        throw NumericalError(what + ": polynomial residual too large: " + abs(p).to_string(8));
}

} // namespace

BigReal eval_frequency(const FrequencySpec& spec, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    switch (spec.kind) {
        case FrequencyKind::golden: {
            BigReal r = sqrt(BigReal(5L, bits));
            r -= 1;
            r /= 2;
            return r;
        }
        case FrequencyKind::sqrt2_inverse: {
            BigReal r(1L, bits);
            r /= sqrt(BigReal(2L, bits));
            return r;
        }
        case FrequencyKind::plastic_inverse: {
            // s^3 - s - 1 = 0, s in [1,2]
            BigReal s = cubic_root_newton(1, 0, -1, -1, 1.3247, bits);
            check_poly_residual(1, 0, -1, -1, s, ctx, "plastic-inverse");
            BigReal r(1L, bits);
            r /= s;
            return r;
        }
        case FrequencyKind::tribonacci_inverse: {
            // t^3 - t^2 - t - 1 = 0, t in [1,2]
            BigReal t = cubic_root_newton(1, -1, -1, -1, 1.8393, bits);
            check_poly_residual(1, -1, -1, -1, t, ctx, "tribonacci-inverse");
            BigReal r(1L, bits);
            r /= t;
            return r;
        }
        case FrequencyKind::custom: {
            if (!spec.custom_value)
                throw InputError("custom frequency requires a decimal value");
            return BigReal::from_string(*spec.custom_value, bits);
        }
    }
    throw InputError("invalid frequency spec");
}

namespace {

template <typename Scalar>
BigReal scalar_mag(const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, BigReal>) return abs(x);
    else return x.abs();
}

template <typename Scalar>
std::vector<Scalar> lu_solve(DenseMatrix<Scalar> A, std::vector<Scalar> b,
                             const PrecisionContext& ctx) {
    const int n = A.n;
    if (n < 1 || static_cast<size_t>(n) * n != A.a.size() || b.size() != static_cast<size_t>(n))
        throw InputError("solve_dense_linear: inconsistent dimensions");

    BigReal amax(ctx.bits());
    for (const auto& x : A.a) amax = max(amax, scalar_mag(x));
    BigReal pivot_floor = pow10(-(ctx.digits() - 10), ctx.bits());
    if (!amax.is_zero()) pivot_floor *= amax;

    for (int col = 0; col < n; ++col) {
        int piv = col;
        BigReal best = scalar_mag(A.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            BigReal m = scalar_mag(A.at(i, col));
            if (m > best) { best = m; piv = i; }
        }
        if (!(best > pivot_floor))
            throw SingularSystemError("singular system: pivot below threshold at column " +
                                          std::to_string(col), col);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (int i = col + 1; i < n; ++i) {
            Scalar f = A.at(i, col) / A.at(col, col);
            for (int j = col + 1; j < n; ++j) {
                Scalar t = f * A.at(col, j);
                A.at(i, j) -= t;
            }
            Scalar t = f * b[col];
            b[i] -= t;
        }
    }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar t = A.at(i, j) * b[j];
            b[i] -= t;
        }
        b[i] = b[i] / A.at(i, i);
    }
    return b;
}

} // namespace

std::vector<BigReal> solve_dense_linear(DenseMatrix<BigReal> A, std::vector<BigReal> b,
                                        const PrecisionContext& ctx) {
    return lu_solve(std::move(A), std::move(b), ctx);
}

std::vector<BigComplex> solve_dense_linear(DenseMatrix<BigComplex> A, std::vector<BigComplex> b,
                                           const PrecisionContext& ctx) {
    return lu_solve(std::move(A), std::move(b), ctx);
}

BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    if (coeffs.empty()) throw InputError("poly_eval: empty coefficient list");
    BigComplex acc = coeffs.back();
    BigReal t(z.bits());
    for (size_t i = coeffs.size() - 1; i-- > 0;) {
        acc *= z;
        acc += coeffs[i];
    }
    return acc;
}

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs_in, const BigReal& tol,
                                   int max_iterations) {
    if (coeffs_in.empty()) throw InputError("poly_roots: empty polynomial");
    const mpfr_prec_t bits = coeffs_in.front().bits();

    BigReal cmax(bits);
    for (const auto& c : coeffs_in) cmax = max(cmax, c.abs());
    if (cmax.is_zero()) throw InputError("poly_roots: zero polynomial");

    // strip trailing (highest-order) coefficients below tol * max|c|
    BigReal strip = tol * cmax;
    size_t deg = coeffs_in.size() - 1;
    while (deg > 0 && coeffs_in[deg].abs() < strip) --deg;
    if (deg == 0) return {};
    std::vector<BigComplex> c(coeffs_in.begin(), coeffs_in.begin() + deg + 1);

    const int d = static_cast<int>(deg);
    if (d == 1) {
        BigComplex r = -(c[0] / c[1]);
        return {r};
    }

    // Cauchy bound for the initial circle radius
    BigReal lead = c[d].abs();
    BigReal radius(1L, bits);
    {
        BigReal m(bits);
        for (int i = 0; i < d; ++i) m = max(m, c[i].abs());
        m /= lead;
        radius += m;
    }

    // initial guesses at angles (2k+1)pi/d: conjugate-symmetric set
    std::vector<BigComplex> z;
    z.reserve(d);
    BigReal pi = const_pi(bits);
    for (int k = 0; k < d; ++k) {
        BigReal ang = pi;
        ang *= 2 * k + 1;
        ang /= d;
        BigComplex g = exp_i(ang);
        g *= radius;
        z.push_back(g);
    }

    // derivative coefficients
    std::vector<BigComplex> dc;
    dc.reserve(d);
    for (int i = 1; i <= d; ++i) {
        BigComplex t = c[i];
        t *= i;
        dc.push_back(t);
    }

    std::vector<bool> done(d, false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all_done = true;
        for (int k = 0; k < d; ++k) {
            if (done[k]) continue;
            // p(z), p'(z) and the residual scale sum |c_i||z|^i in one pass
            BigComplex p = c[d];
            BigReal zmag = z[k].abs();
            BigReal scale = c[d].abs();
            for (int i = d - 1; i >= 0; --i) {
                p *= z[k];
                p += c[i];
                scale *= zmag;
                scale += c[i].abs();
            }
            if (p.abs() <= tol * scale) { done[k] = true; continue; }
            all_done = false;
            BigComplex dp = dc[d - 1];
            for (int i = d - 2; i >= 0; --i) {
                dp *= z[k];
                dp += dc[i];
            }
            if (dp.is_zero()) {
                // nudge off a critical point deterministically
                BigReal eps = pow10(-(static_cast<long>(bits) / 4), bits);
                z[k].re() += eps;
                continue;
            }
            BigComplex ratio = p / dp;
            BigComplex s(bits);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                BigComplex diff = z[k] - z[j];
                if (diff.is_zero()) continue;
                BigComplex inv(BigReal(1L, bits), BigReal(bits));
                inv /= diff;
                s += inv;
            }
            BigComplex denom(BigReal(1L, bits), BigReal(bits));
            BigComplex rs = ratio * s;
            denom -= rs;
            if (denom.is_zero()) continue;
            BigComplex corr = ratio / denom;
            z[k] -= corr;
        }
        if (all_done) return z;
    }
    // final residual check
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
        BigComplex p = c[d];
        BigReal zmag = z[k].abs();
        BigReal scale = c[d].abs();
        for (int i = d - 1; i >= 0; --i) {
            p *= z[k];
            p += c[i];
            scale *= zmag;
            scale += c[i].abs();
        }
        if (!(p.abs() <= tol * scale)) ok = false;
    }
    if (ok) return z;
    throw RootConvergenceError("poly_roots: no convergence after " +
                                   std::to_string(max_iterations) + " iterations",
                               z);
}

} // namespace lind
