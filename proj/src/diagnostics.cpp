#include "lind/diagnostics.hpp"

#include <algorithm>

namespace lind {

namespace {

// dissipative adjustments on top of R_n, using the stored mu_n
TrigPolyPair adjust_rhs(const LindstedtSeries& s, long n, TrigPolyPair r) {
    if (s.gamma != 1) return r;
    const mpfr_prec_t bits = s.ctx().bits();
    const auto& mu = s.mus[static_cast<size_t>(n)];
    if (n == 3) {
        BigReal d0 = mu[0] - s.omega_angle * s.k[0];
        BigReal d1 = mu[1] - s.omega_angle * s.k[1];
        r.add_to_coeff(0, BigComplex(d0), BigComplex(d1));
    } else if (n >= 4) {
        r.add_to_coeff(0, BigComplex(mu[0]), BigComplex(mu[1]));
        const TrigPolyPair& gm3 = s.orders[static_cast<size_t>(n - 3)];
        TrigPolyPair sh = shift(gm3, -s.omega_angle);
        sh -= gm3;
        r += sh;
    } else if (!mu[0].is_zero() || !mu[1].is_zero()) {
        r.add_to_coeff(0, BigComplex(mu[0]), BigComplex(mu[1]));
    }
    return r;
}

} // namespace

TrigPolyPair reconstruct_rhs(const LindstedtSeries& s, long n) {
    if (n < 1 || n > s.max_order()) throw InputError("reconstruct_rhs: order out of range");
    NonlinearityState state(s.potential, s.k, s.kperp, s.orders[0], s.grid_size, s.ctx());
    for (long i = 1; i < n; ++i) state.advance(s.orders[static_cast<size_t>(i)]);
    return adjust_rhs(s, n, state.r_coefficient(n));
}

BigReal cohomology_residual(const LindstedtSeries& s, long n) {
    if (n < 1 || n > s.max_order()) throw InputError("cohomology_residual: order out of range");
    TrigPolyPair rhs = (s.rhs.size() == s.orders.size()) ? s.rhs[static_cast<size_t>(n)]
                                                         : reconstruct_rhs(s, n);
    TrigPolyPair resid = apply_Lomega(s.orders[static_cast<size_t>(n)], s.omega_angle);
    resid -= rhs;
    return sup_norm_grid(resid);
}

std::vector<BigReal> all_cohomology_residuals(const LindstedtSeries& s) {
    std::vector<BigReal> out;
    out.emplace_back(s.ctx().bits()); // order 0
    if (s.rhs.size() == s.orders.size()) {
        for (long n = 1; n <= s.max_order(); ++n) out.push_back(cohomology_residual(s, n));
        return out;
    }
    NonlinearityState state(s.potential, s.k, s.kperp, s.orders[0], s.grid_size, s.ctx());
    for (long n = 1; n <= s.max_order(); ++n) {
        if (n > 1) state.advance(s.orders[static_cast<size_t>(n - 1)]);
        TrigPolyPair rhs = adjust_rhs(s, n, state.r_coefficient(n));
        TrigPolyPair resid = apply_Lomega(s.orders[static_cast<size_t>(n)], s.omega_angle);
        resid -= rhs;
        out.push_back(sup_norm_grid(resid));
    }
    return out;
}

BigReal invariance_residual(const LindstedtSeries& s, const BigComplex& eps, long n) {
    if (n < 0 || n > s.max_order()) throw InputError("invariance_residual: order out of range");
    const PrecisionContext ctx = s.ctx();
    const mpfr_prec_t bits = ctx.bits();
    const long m = s.grid_size;

    // partial sum in coefficient space (complex-valued for complex eps)
    TrigPolyPair psum(m, ctx);
    {
        BigComplex epow(BigReal(1L, bits), BigReal(bits));
        for (long i = 0; i <= n; ++i) {
            for (const auto& [l, c] : s.orders[static_cast<size_t>(i)].coeffs())
                psum.add_to_coeff(l, c[0] * epow, c[1] * epow);
            epow *= eps;
        }
    }

    // mu(eps) and the gamma eps^3 constants
    BigComplex eps3 = eps * eps * eps;
    std::array<BigComplex, 2> mu_eps{BigComplex(bits), BigComplex(bits)};
    if (s.gamma == 1) {
        for (long i = n; i >= 0; --i) {
            mu_eps[0] *= eps;
            mu_eps[1] *= eps;
            mu_eps[0] += BigComplex(s.mus[static_cast<size_t>(i)][0]);
            mu_eps[1] += BigComplex(s.mus[static_cast<size_t>(i)][1]);
        }
    }

    // linear part: L_w psum + gamma eps^3 (psum - psum(. - w))
    TrigPolyPair lin = apply_Lomega(psum, s.omega_angle);
    if (s.gamma == 1) {
        TrigPolyPair diff = psum;
        diff -= shift(psum, -s.omega_angle);
        for (const auto& [l, c] : diff.coeffs()) lin.add_to_coeff(l, c[0] * eps3, c[1] * eps3);
    }

    GridFunctionPair lin_grid = to_grid(lin);
    GridFunctionPair g_grid = to_grid(psum);

    // constants: gamma eps^3 w k - mu(eps)
    std::array<BigComplex, 2> cst{BigComplex(bits), BigComplex(bits)};
    if (s.gamma == 1) {
        cst[0] = eps3 * s.omega_angle;
        cst[0] *= s.k[0];
        cst[1] = eps3 * s.omega_angle;
        cst[1] *= s.k[1];
    }
    cst[0] -= mu_eps[0];
    cst[1] -= mu_eps[1];

    // grad V summed directly from the modes at q = theta k + G(theta)
    BigReal two_pi = const_two_pi(bits);
    BigReal theta(bits), t(bits);
    BigReal best(bits);
    for (long j = 0; j < m; ++j) {
        theta = two_pi;
        theta *= j;
        theta /= m;
        // u = e^{i G1}, v = e^{i G2}
        BigComplex iz1 = g_grid.values[0][static_cast<size_t>(j)];
        iz1.mul_i();
        BigComplex iz2 = g_grid.values[1][static_cast<size_t>(j)];
        iz2.mul_i();
        BigComplex u = exp(iz1);
        BigComplex v = exp(iz2);
        std::array<BigComplex, 2> grad{BigComplex(bits), BigComplex(bits)};
        for (const auto& mode : s.potential.modes()) {
            // e^{i l . q} = e^{i (l.k) theta} u^{l1} v^{l2}
            t = theta;
            t *= dot(mode.l, s.k);
            BigComplex ph = exp_i(t);
            auto mul_pow = [&](const BigComplex& base, long e) {
                BigComplex b = e >= 0 ? base : base.conj() * (BigReal(1L, bits) / base.norm_sq());
                for (long q = 0; q < std::labs(e); ++q) ph *= b;
            };
            mul_pow(u, mode.l[0]);
            mul_pow(v, mode.l[1]);
            add_mul(grad[0], mode.alpha[0], ph, t);
            add_mul(grad[1], mode.alpha[1], ph, t);
        }
        BigReal mag(bits);
        for (int c = 0; c < 2; ++c) {
            BigComplex e = lin_grid.values[c][static_cast<size_t>(j)];
            e += cst[c];
            BigComplex ng = grad[c];
            ng *= eps;
            e -= ng;
            mag += e.norm_sq();
        }
        if (mag > best) best = mag;
    }
    return sqrt(best);
}

} // namespace lind
