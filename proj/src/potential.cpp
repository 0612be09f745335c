#include "lind/potential.hpp"

#include <algorithm>

namespace lind {

namespace {

bool is_canonical(const IVec2& l) { return l[0] > 0 || (l[0] == 0 && l[1] > 0); }

} // namespace

PotentialSpec::PotentialSpec(std::vector<PotentialMode> modes, const PrecisionContext& ctx)
    : modes_(std::move(modes)), degree_(0), ctx_(ctx) {
    BigReal tol = pow10(-(ctx.digits() - 10), ctx.bits());
    for (const auto& m : modes_) {
        if (m.l[0] == 0 && m.l[1] == 0)
            throw InputError("potential: mode (0,0) not allowed in the gradient");
        degree_ = std::max(degree_, std::labs(m.l[0]) + std::labs(m.l[1]));
        // gradient consistency: alpha parallel to l
        BigComplex cross = m.alpha[0] * m.l[1] - m.alpha[1] * m.l[0];
        BigReal scale = m.alpha[0].abs() + m.alpha[1].abs();
        scale += 1;
        if (cross.abs() > tol * scale)
            throw InputError("potential: coefficient of mode (" + std::to_string(m.l[0]) + "," +
                             std::to_string(m.l[1]) + ") is not parallel to the mode");
        // reality: the conjugate partner must be present
        bool found = false;
        for (const auto& o : modes_) {
            if (o.l[0] == -m.l[0] && o.l[1] == -m.l[1]) {
                BigComplex d0 = o.alpha[0] - m.alpha[0].conj();
                BigComplex d1 = o.alpha[1] - m.alpha[1].conj();
                if (d0.abs() <= tol * scale && d1.abs() <= tol * scale) found = true;
                break;
            }
        }
        if (!found)
            throw InputError("potential: missing conjugate partner of mode (" +
                             std::to_string(m.l[0]) + "," + std::to_string(m.l[1]) + ")");
    }
    if (modes_.empty()) degree_ = 0;
}

std::array<BigComplex, 2> PotentialSpec::eval_gradient(const BigReal& q1, const BigReal& q2) const {
    const mpfr_prec_t bits = ctx_.bits();
    std::array<BigComplex, 2> out{BigComplex(bits), BigComplex(bits)};
    BigReal phase(bits), t(bits);
    for (const auto& m : modes_) {
        phase = q1;
        phase *= m.l[0];
        t = q2;
        t *= m.l[1];
        phase += t;
        BigComplex e = exp_i(phase);
        add_mul(out[0], m.alpha[0], e, t);
        add_mul(out[1], m.alpha[1], e, t);
    }
    return out;
}

PotentialSpec default_potential(const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    std::vector<PotentialMode> modes;
    auto add_pair = [&](long l1, long l2) {
        // alpha_l = l / (2i) = -i l / 2
        BigReal half(bits);
        half = BigReal(1L, bits);
        half /= 2;
        PotentialMode m;
        m.l = {l1, l2};
        m.alpha = {BigComplex(BigReal(bits), -(half * l1)), BigComplex(BigReal(bits), -(half * l2))};
        PotentialMode mc;
        mc.l = {-l1, -l2};
        mc.alpha = {m.alpha[0].conj(), m.alpha[1].conj()};
        modes.push_back(std::move(m));
        modes.push_back(std::move(mc));
    };
    add_pair(1, 0);
    add_pair(0, 1);
    add_pair(1, 1);
    return PotentialSpec(std::move(modes), ctx);
}

NonlinearityState::NonlinearityState(const PotentialSpec& V, IVec2 k, IVec2 kperp,
                                     const TrigPolyPair& g0, long grid_size,
                                     const PrecisionContext& ctx)
    : V_(V), k_(k), kperp_(kperp), grid_size_(grid_size), ctx_(ctx) {
    if (dot(k, kperp) != 0 || (k[0] == 0 && k[1] == 0) || (kperp[0] == 0 && kperp[1] == 0))
        throw InputError("nonlinearity state: k and kperp must be nonzero and orthogonal");
    if (g0.max_mode() != 0)
        throw InputError("nonlinearity state: order-0 term must be constant");

    for (const auto& m : V.modes())
        if (is_canonical(m.l)) canon_.push_back(m);

    const mpfr_prec_t bits = ctx.bits();
    auto g0c = g0.coeff(0);
    BigReal theta(bits), ph(bits);
    BigReal two_pi = const_two_pi(bits);
    f_.resize(canon_.size());
    df_.resize(canon_.size());
    for (size_t mi = 0; mi < canon_.size(); ++mi) {
        const auto& mode = canon_[mi];
        const long lk = dot(mode.l, k_);
        // l . g0 as a complex constant (g0 is real in practice)
        BigComplex lg0 = g0c[0] * mode.l[0] + g0c[1] * mode.l[1];
        lg0.mul_i();
        BigComplex amp = exp(lg0); // e^{i l . g0}
        std::vector<BigComplex> f0;
        f0.reserve(static_cast<size_t>(grid_size_));
        for (long j = 0; j < grid_size_; ++j) {
            theta = two_pi;
            theta *= j;
            theta /= grid_size_;
            ph = theta;
            ph *= lk;
            BigComplex e = exp_i(ph);
            e *= amp;
            f0.push_back(std::move(e));
        }
        // d/d(beta) F_top along the kperp constant: i (l . kperp) F_0
        const long lkp = dot(mode.l, kperp_);
        std::vector<BigComplex> d;
        d.reserve(f0.size());
        for (const auto& z : f0) {
            BigComplex t = z;
            t *= lkp;
            t.mul_i();
            d.push_back(std::move(t));
        }
        f_[mi].push_back(std::move(f0));
        df_[mi] = std::move(d);
    }
    push_g_grid(g0);
}

void NonlinearityState::push_g_grid(const TrigPolyPair& g) {
    GridFunctionPair grid = to_grid(g);
    // reality oracle: committed orders must be real functions
    BigReal max_im(ctx_.bits()), max_re(ctx_.bits());
    for (int c = 0; c < 2; ++c)
        for (const auto& z : grid.values[c]) {
            max_im = max(max_im, abs(z.im()));
            max_re = max(max_re, abs(z.re()));
        }
    BigReal tol = pow10(-(ctx_.digits() - 10), ctx_.bits());
    tol *= max_re + 1;
    if (max_im > tol)
        throw ConsistencyError("committed order is not real: max |Im| = " + max_im.to_string(8));
    g_grids_.push_back({std::move(grid.values[0]), std::move(grid.values[1])});
}

std::vector<std::vector<BigComplex>> NonlinearityState::top_order_f(
    const TrigPolyPair& g_candidate) const {
    const long n = orders_committed(); // index of the order being formed
    const long m_count = n;            // recursion terms m = 0 .. n-1
    const mpfr_prec_t bits = ctx_.bits();
    const size_t M = static_cast<size_t>(grid_size_);

    GridFunctionPair cand = to_grid(g_candidate);

    std::vector<std::vector<BigComplex>> out(canon_.size());
    BigReal t1(bits), scr(bits);
    BigComplex lg(bits);
    for (size_t mi = 0; mi < canon_.size(); ++mi) {
        const auto& mode = canon_[mi];
        std::vector<BigComplex> acc;
        acc.reserve(M);
        for (size_t j = 0; j < M; ++j) acc.emplace_back(bits);
        for (long m = 0; m < m_count; ++m) {
            const long w = m + 1;
            const long wl1 = w * mode.l[0];
            const long wl2 = w * mode.l[1];
            const auto& g1 = (m + 1 < n) ? g_grids_[static_cast<size_t>(m + 1)][0] : cand.values[0];
            const auto& g2 = (m + 1 < n) ? g_grids_[static_cast<size_t>(m + 1)][1] : cand.values[1];
            const auto& fprev = f_[mi][static_cast<size_t>(n - 1 - m)];
            for (size_t j = 0; j < M; ++j) {
                // lg = w * (l . g_{m+1})(theta_j)
                mpfr_mul_si(lg.re().raw(), g1[j].re().raw(), wl1, MPFR_RNDN);
                mpfr_mul_si(t1.raw(), g2[j].re().raw(), wl2, MPFR_RNDN);
                lg.re() += t1;
                mpfr_mul_si(lg.im().raw(), g1[j].im().raw(), wl1, MPFR_RNDN);
                mpfr_mul_si(t1.raw(), g2[j].im().raw(), wl2, MPFR_RNDN);
                lg.im() += t1;
                add_mul(acc[j], lg, fprev[j], scr);
            }
        }
        // F_n = (i/n) * acc
        for (size_t j = 0; j < M; ++j) {
            acc[j].mul_i();
            acc[j].re() /= n;
            acc[j].im() /= n;
        }
        out[mi] = std::move(acc);
    }
    return out;
}

GridFunctionPair NonlinearityState::r_from_top(
    const std::vector<std::vector<BigComplex>>& ftop) const {
    const size_t M = static_cast<size_t>(grid_size_);
    GridFunctionPair r(grid_size_, ctx_);
    BigReal t(ctx_.bits());
    for (size_t mi = 0; mi < canon_.size(); ++mi) {
        const auto& alpha = canon_[mi].alpha;
        for (int c = 0; c < 2; ++c) {
            if (alpha[c].is_zero()) continue;
            for (size_t j = 0; j < M; ++j) {
                // += 2 Re(alpha F): the conjugate mode supplies the mirror term
                mpfr_fmms(t.raw(), alpha[c].re().raw(), ftop[mi][j].re().raw(),
                          alpha[c].im().raw(), ftop[mi][j].im().raw(), MPFR_RNDN);
                t *= 2;
                r.values[c][j].re() += t;
            }
        }
    }
    return r;
}

BigReal NonlinearityState::kperp_average_from_top(
    const std::vector<std::vector<BigComplex>>& ftop) const {
    const mpfr_prec_t bits = ctx_.bits();
    BigReal sum(bits), t(bits);
    for (size_t mi = 0; mi < canon_.size(); ++mi) {
        const auto& mode = canon_[mi];
        BigComplex akp = mode.alpha[0] * kperp_[0] + mode.alpha[1] * kperp_[1];
        if (akp.is_zero()) continue;
        BigComplex fsum(bits);
        for (const auto& z : ftop[mi]) fsum += z;
        mpfr_fmms(t.raw(), akp.re().raw(), fsum.re().raw(), akp.im().raw(), fsum.im().raw(),
                  MPFR_RNDN);
        t *= 2;
        sum += t;
    }
    // (2 pi / M) * sum_j kperp . R(theta_j)
    sum *= const_two_pi(bits);
    sum /= grid_size_;
    return sum;
}

void NonlinearityState::advance_with_top(const TrigPolyPair& g_new,
                                         std::vector<std::vector<BigComplex>> ftop) {
    push_g_grid(g_new);
    for (size_t mi = 0; mi < canon_.size(); ++mi) f_[mi].push_back(std::move(ftop[mi]));
}

void NonlinearityState::advance(const TrigPolyPair& g_new) {
    advance_with_top(g_new, top_order_f(g_new));
}

GridFunctionPair NonlinearityState::r_grid(long n) const {
    if (n < 1 || n > orders_committed())
        throw InputError("r_grid: order " + std::to_string(n) + " not available");
    std::vector<std::vector<BigComplex>> level;
    level.reserve(canon_.size());
    for (size_t mi = 0; mi < canon_.size(); ++mi) level.push_back(f_[mi][static_cast<size_t>(n - 1)]);
    return r_from_top(level);
}

TrigPolyPair NonlinearityState::r_coefficient(long n) const {
    GridFunctionPair rg = r_grid(n);
    TrigPolyPair r = to_coeffs(rg);
    // degree bound: support of R_n stays within n * J
    const long bound = n * V_.degree();
    BigReal scale = r.max_coeff_mag();
    scale += 1;
    BigReal tol = pow10(-(ctx_.digits() - 10), ctx_.bits());
    tol *= scale;
    std::vector<long> drop;
    for (const auto& [l, c] : r.coeffs()) {
        if (std::labs(l) <= bound) continue;
        if (c[0].abs() > tol || c[1].abs() > tol)
            throw ConsistencyError("R_" + std::to_string(n) + " has mode " + std::to_string(l) +
                                   " beyond the degree bound " + std::to_string(bound));
        drop.push_back(l);
    }
    for (long l : drop) r.drop_mode(l);
    return r;
}

std::vector<BigComplex> d2v_quadratic_form(const PotentialSpec& V, IVec2 k, IVec2 kperp,
                                           const std::array<BigReal, 2>& g0, long grid_size) {
    const mpfr_prec_t bits = V.ctx().bits();
    std::vector<BigComplex> out;
    out.reserve(static_cast<size_t>(grid_size));
    for (long j = 0; j < grid_size; ++j) out.emplace_back(bits);
    BigReal two_pi = const_two_pi(bits);
    BigReal theta(bits), ph(bits), t(bits);
    for (const auto& m : V.modes()) {
        // (alpha . kperp) * i (l . kperp) * e^{i l . (theta k + g0)}
        BigComplex akp = m.alpha[0] * kperp[0] + m.alpha[1] * kperp[1];
        akp *= dot(m.l, kperp);
        akp.mul_i();
        if (akp.is_zero()) continue;
        const long lk = dot(m.l, k);
        ph = g0[0];
        ph *= m.l[0];
        t = g0[1];
        t *= m.l[1];
        ph += t;
        BigComplex amp = exp_i(ph);
        amp *= akp;
        for (long j = 0; j < grid_size; ++j) {
            theta = two_pi;
            theta *= j;
            theta /= grid_size;
            theta *= lk;
            BigComplex e = exp_i(theta);
            e *= amp;
            out[static_cast<size_t>(j)] += e;
        }
    }
    return out;
}

} // namespace lind
