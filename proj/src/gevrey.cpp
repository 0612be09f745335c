#include "lind/gevrey.hpp"

#include "lind/numerics.hpp"

namespace lind {

std::vector<APoint> a_sequence(const LindstedtSeries& s, const BigReal& rho, long r,
                               Component component) {
    const long top = s.usable_order();
    std::vector<APoint> out;
    for (long n = 1; n <= top; ++n) {
        BigReal norm = norm_rho_r(s.orders[static_cast<size_t>(n)], rho, r, component);
        if (norm.is_zero()) continue; // recorded by omission
        BigReal a = log(norm);
        a /= n;
        out.push_back({n, std::move(a)});
    }
    return out;
}

GevreyFit fit_log(const std::vector<APoint>& data, long n_min, long n_max,
                  const PrecisionContext& ctx) {
    if (n_min >= n_max) throw InputError("fit_log: empty fit range");
    const mpfr_prec_t bits = ctx.bits();
    // normal equations for A ~ lnR + sigma ln n
    BigReal s0(bits), sx(bits), sxx(bits), sy(bits), sxy(bits);
    long count = 0;
    for (const auto& p : data) {
        if (p.n < n_min || p.n > n_max) continue;
        BigReal x = log(BigReal(p.n, bits));
        s0 += 1;
        sx += x;
        sxx += x * x;
        sy += p.value;
        sxy += x * p.value;
        ++count;
    }
    if (count < 3) throw InputError("fit_log: fewer than 3 points in range");

    DenseMatrix<BigReal> A;
    A.n = 2;
    A.a = {s0, sx, sx, sxx};
    std::vector<BigReal> rhs{sy, sxy};
    auto sol = solve_dense_linear(std::move(A), std::move(rhs), ctx);

    GevreyFit fit(ctx);
    fit.lnR = sol[0];
    fit.sigma = sol[1];
    fit.n_min = n_min;
    fit.n_max = n_max;
    for (const auto& p : data) {
        if (p.n < n_min || p.n > n_max) continue;
        BigReal x = log(BigReal(p.n, bits));
        BigReal resid = p.value - fit.lnR - fit.sigma * x;
        fit.rss += resid * resid;
    }
    return fit;
}

} // namespace lind
