#include "lind/lindstedt.hpp"

#include <algorithm>

namespace lind {

void LindstedtConfig::validate() const {
    if (gamma != 0 && gamma != 1) throw InputError("gamma must be 0 or 1");
    if (order < 0) throw InputError("order must be nonnegative");
    if (digits < 50) throw InputError("digits must be at least 50");
    if (filter_digits < 1) throw InputError("filter must be positive");
    if (dot(k, kperp) != 0) throw InputError("k and kperp must be orthogonal");
    if (k[0] == 0 && k[1] == 0) throw InputError("k must be nonzero");
    if (kperp[0] == 0 && kperp[1] == 0) throw InputError("kperp must be nonzero");
    if (grid_size != 0 && (grid_size < 4 || (grid_size & (grid_size - 1)) != 0))
        throw InputError("grid size must be a power of two (or 0 for automatic)");
}

PotentialSpec build_potential(const LindstedtConfig& cfg, const PrecisionContext& ctx) {
    if (cfg.potential_modes.empty()) return default_potential(ctx);
    std::vector<PotentialMode> modes;
    for (const auto& m : cfg.potential_modes) {
        PotentialMode pm;
        pm.l = {m.l1, m.l2};
        pm.alpha = {BigComplex(BigReal::from_string(m.re1, ctx.bits()),
                               BigReal::from_string(m.im1, ctx.bits())),
                    BigComplex(BigReal::from_string(m.re2, ctx.bits()),
                               BigReal::from_string(m.im2, ctx.bits()))};
        modes.push_back(std::move(pm));
    }
    return PotentialSpec(std::move(modes), ctx);
}

long resolve_grid_size(const LindstedtConfig& cfg, long degree) {
    long m = cfg.grid_size;
    if (m == 0) {
        const long need = 4 * cfg.order * std::max<long>(degree, 1) + 4;
        m = 8;
        while (m < need) m <<= 1;
    }
    if (cfg.order * degree > m / 2 - 1)
        throw InputError("grid size " + std::to_string(m) + " cannot hold degree " +
                         std::to_string(cfg.order * degree) + " at order " +
                         std::to_string(cfg.order));
    return m;
}

long LindstedtSeries::usable_order() const {
    long n = max_order();
    while (n >= 0 && beta_is_provisional[static_cast<size_t>(n)]) --n;
    return n;
}

namespace {

// average of kperp . grad V(theta k + beta kperp) over the circle; only
// modes with l.k = 0 contribute
BigReal kperp_gradient_average(const PotentialSpec& V, const IVec2& k, const IVec2& kperp,
                               const BigReal& beta) {
    const mpfr_prec_t bits = V.ctx().bits();
    BigReal sum(bits), ph(bits), t(bits);
    for (const auto& m : V.modes()) {
        if (dot(m.l, k) != 0) continue;
        BigComplex akp = m.alpha[0] * kperp[0] + m.alpha[1] * kperp[1];
        if (akp.is_zero()) continue;
        ph = beta;
        ph *= dot(m.l, kperp);
        BigComplex e = exp_i(ph);
        // real part of akp * e; the conjugate mode adds the mirror term,
        // and the full mode list is traversed, so no doubling here
        mpfr_fmms(t.raw(), akp.re().raw(), e.re().raw(), akp.im().raw(), e.im().raw(), MPFR_RNDN);
        sum += t;
    }
    return sum;
}

std::array<BigReal, 2> beta0_vector(const LindstedtConfig& cfg, const PrecisionContext& ctx) {
    BigReal b = BigReal::from_string(cfg.beta0, ctx.bits());
    return {b * cfg.kperp[0], b * cfg.kperp[1]};
}

TrigPolyPair constant_poly(const std::array<BigReal, 2>& value, long grid, const PrecisionContext& ctx) {
    TrigPolyPair p(grid, ctx);
    p.set_coeff(0, BigComplex(value[0]), BigComplex(value[1]));
    return p;
}

} // namespace

Order0Report check_order0(const LindstedtConfig& cfg) {
    cfg.validate();
    PrecisionContext ctx = cfg.ctx();
    PotentialSpec V = build_potential(cfg, ctx);
    const long m = resolve_grid_size(cfg, V.degree());
    auto b0 = beta0_vector(cfg, ctx);

    // average of grad V over the circle: modes with l.k = 0 only
    std::array<BigComplex, 2> avg{BigComplex(ctx.bits()), BigComplex(ctx.bits())};
    BigReal ph(ctx.bits()), t(ctx.bits());
    for (const auto& mode : V.modes()) {
        if (dot(mode.l, cfg.k) != 0) continue;
        ph = b0[0];
        ph *= mode.l[0];
        t = b0[1];
        t *= mode.l[1];
        ph += t;
        BigComplex e = exp_i(ph);
        add_mul(avg[0], mode.alpha[0], e, t);
        add_mul(avg[1], mode.alpha[1], e, t);
    }

    auto d2v = d2v_quadratic_form(V, cfg.k, cfg.kperp, b0, m);
    BigComplex nondeg(ctx.bits());
    for (const auto& z : d2v) nondeg += z;
    BigReal navg = nondeg.re();
    navg /= m;

    Order0Report rep{{avg[0].abs(), avg[1].abs()}, navg};

    BigReal tol = pow10(-(cfg.digits / 2), ctx.bits());
    if (rep.gradient_average_abs[0] > tol || rep.gradient_average_abs[1] > tol)
        throw InputError("order-0 condition fails: average of grad V is (" +
                         rep.gradient_average_abs[0].to_string(6) + ", " +
                         rep.gradient_average_abs[1].to_string(6) +
                         "); pick beta0 from find_beta0_candidates");
    bool zero_potential = true;
    for (const auto& mode : V.modes())
        if (!mode.alpha[0].is_zero() || !mode.alpha[1].is_zero()) zero_potential = false;
    if (!zero_potential && abs(navg) < tol)
        throw NumericalError("degenerate configuration: non-degeneracy average is " +
                             navg.to_string(6));
    return rep;
}

std::vector<BigReal> find_beta0_candidates(const LindstedtConfig& cfg, int n_samples) {
    if (n_samples < 8) throw InputError("find_beta0_candidates: need at least 8 samples");
    PrecisionContext ctx = cfg.ctx();
    PotentialSpec V = build_potential(cfg, ctx);
    BigReal two_pi = const_two_pi(ctx.bits());

    auto f = [&](const BigReal& beta) { return kperp_gradient_average(V, cfg.k, cfg.kperp, beta); };

    std::vector<BigReal> roots;
    BigReal tol = pow10(-(cfg.digits - 10), ctx.bits());
    BigReal prev_x(ctx.bits());
    BigReal prev_f = f(prev_x);
    for (int i = 1; i <= n_samples; ++i) {
        BigReal x = two_pi;
        x *= i;
        x /= n_samples;
        BigReal fx = f(x);
        if (prev_f.is_zero()) {
            roots.push_back(prev_x);
        } else if (!fx.is_zero() && prev_f.sign() != fx.sign()) {
            BigReal lo = prev_x, hi = x, flo = prev_f;
            while (hi - lo > tol) {
                BigReal mid = lo + hi;
                mid /= 2;
                BigReal fm = f(mid);
                if (fm.is_zero()) { lo = mid; hi = mid; break; }
                if (fm.sign() == flo.sign()) { lo = mid; flo = fm; }
                else hi = mid;
            }
            BigReal root = lo + hi;
            root /= 2;
            roots.push_back(root);
        }
        prev_x = x;
        prev_f = fx;
    }
    if (roots.empty())
        throw NumericalError("find_beta0_candidates: no sign change of the kperp average found");
    return roots;
}

LindstedtDriver::LindstedtDriver(const LindstedtConfig& cfg)
    : cfg_(cfg), ctx_(cfg.ctx()), series_(ctx_), zero_tol_(ctx_.bits()), d_average_(ctx_.bits()) {
    cfg_.validate();
    PotentialSpec V = build_potential(cfg_, ctx_);
    const long m = resolve_grid_size(cfg_, V.degree());

    series_.gamma = cfg_.gamma;
    series_.omega_spec = cfg_.omega_spec;
    series_.omega = eval_frequency(cfg_.omega_spec, ctx_);
    series_.omega_angle = series_.omega * const_two_pi(ctx_.bits());
    series_.digits = cfg_.digits;
    series_.filter_digits = cfg_.filter_digits;
    series_.grid_size = m;
    series_.k = cfg_.k;
    series_.kperp = cfg_.kperp;
    series_.beta0 = BigReal::from_string(cfg_.beta0, ctx_.bits());
    series_.potential = V;

    zero_tol_ = pow10(-(cfg_.filter_digits - 10), ctx_.bits());

    auto b0 = beta0_vector(cfg_, ctx_);
    TrigPolyPair g0 = constant_poly(b0, m, ctx_);
    state_ = std::make_unique<NonlinearityState>(V, cfg_.k, cfg_.kperp, g0, m, ctx_);
    d_average_ = state_->kperp_average_from_top(state_->f0_kperp_derivative());

    series_.orders.push_back(std::move(g0));
    series_.betas.push_back(series_.beta0);
    series_.beta_is_provisional.push_back(false);
    series_.mus.push_back({BigReal(ctx_.bits()), BigReal(ctx_.bits())});
    series_.cohom_residuals.emplace_back(ctx_.bits());
    series_.rhs_sup.emplace_back(ctx_.bits());
    if (cfg_.store_rhs) series_.rhs.emplace_back(m, ctx_); // placeholder at order 0
}

std::pair<TrigPolyPair, std::array<BigReal, 2>> LindstedtDriver::build_rhs(long n, TrigPolyPair r) {
    const mpfr_prec_t bits = ctx_.bits();
    std::array<BigReal, 2> mu{BigReal(bits), BigReal(bits)};
    if (cfg_.gamma == 1) {
        if (n == 3) {
            // mu_3 = omega k cancels the -omega k brought in by the
            // dissipative term; written out literally.
            mu = {series_.omega_angle * cfg_.k[0], series_.omega_angle * cfg_.k[1]};
            BigReal d0 = mu[0] - series_.omega_angle * cfg_.k[0];
            BigReal d1 = mu[1] - series_.omega_angle * cfg_.k[1];
            r.add_to_coeff(0, BigComplex(d0), BigComplex(d1));
        } else if (n >= 4) {
            auto r0 = average(r);
            BigReal kr = r0[0].re() * cfg_.k[0] + r0[1].re() * cfg_.k[1];
            BigReal mufac = -(kr / dot(cfg_.k, cfg_.k));
            mu = {mufac * cfg_.k[0], mufac * cfg_.k[1]};
            r.add_to_coeff(0, BigComplex(mu[0]), BigComplex(mu[1]));
            // - g_{n-3} + g_{n-3}(. - omega)
            const TrigPolyPair& gm3 = series_.orders[static_cast<size_t>(n - 3)];
            TrigPolyPair sh = shift(gm3, -series_.omega_angle);
            sh -= gm3;
            r += sh;
        }
    }
    return {std::move(r), std::move(mu)};
}

void LindstedtDriver::commit(long n, TrigPolyPair gbar, TrigPolyPair rhs_poly,
                             std::array<BigReal, 2> mu, bool fix_beta) {
    const mpfr_prec_t bits = ctx_.bits();
    BigReal beta(bits);
    bool provisional = true;

    if (fix_beta) {
        auto ftop = state_->top_order_f(gbar);
        BigReal a = state_->kperp_average_from_top(ftop);
        // second evaluation, at unit kperp constant: shares every term
        // except the one through the new order, which shifts by the
        // precomputed derivative grid
        BigReal b = a + d_average_;
        BigReal denom = b - a;
        BigReal scale = max(abs(a), abs(b));
        BigReal tol = pow10(-(cfg_.digits / 2), bits);
        if (abs(denom) > tol * (scale + 1)) {
            beta = -(a / denom);
        } else if (abs(a) <= zero_tol_) {
            beta.set_zero(); // nothing to solve; any constant works
        } else {
            throw NumericalError("degenerate kperp average at order " + std::to_string(n) +
                                 ": a = " + a.to_string(8) + ", b - a = " + denom.to_string(8));
        }
        if (abs(beta) < pow10(-cfg_.filter_digits, bits)) beta.set_zero();

        TrigPolyPair g = gbar;
        if (!beta.is_zero()) {
            g.add_to_coeff(0, BigComplex(beta * cfg_.kperp[0]), BigComplex(beta * cfg_.kperp[1]));
            const auto& df = state_->f0_kperp_derivative();
            BigReal scratch(bits);
            for (size_t mi = 0; mi < ftop.size(); ++mi)
                for (size_t j = 0; j < ftop[mi].size(); ++j)
                    add_mul(ftop[mi][j], beta, df[mi][j], scratch);
        }
        state_->advance_with_top(g, std::move(ftop));
        series_.orders.push_back(std::move(g));
        provisional = false;
    } else {
        series_.orders.push_back(gbar);
    }

    // normalization k . average(g_n) = 0: exact because k . kperp = 0
    series_.mus.push_back(std::move(mu));
    series_.betas.push_back(std::move(beta));
    series_.beta_is_provisional.push_back(provisional);

    // per-order cohomology residual of the committed order
    TrigPolyPair resid = apply_Lomega(series_.orders.back(), series_.omega_angle);
    resid -= rhs_poly;
    series_.cohom_residuals.push_back(sup_norm_grid(resid));
    series_.rhs_sup.push_back(sup_norm_grid(rhs_poly));
    if (cfg_.store_rhs) series_.rhs.push_back(std::move(rhs_poly));
}

void LindstedtDriver::next_order() {
    const long n = committed_order() + 1;
    TrigPolyPair r = state_->r_coefficient(n);
    auto [rhs_poly, mu] = build_rhs(n, std::move(r));

    // solvability: both average components must be tiny after the beta
    // and mu adjustments of the previous steps
    auto avg = average(rhs_poly);
    for (int c = 0; c < 2; ++c)
        if (avg[c].abs() > zero_tol_)
            throw SolvabilityError("order " + std::to_string(n) + ": average component " +
                                   std::to_string(c + 1) + " is " + avg[c].abs().to_string(8));

    auto [gbar, report] = solve_cohomology(rhs_poly, series_.omega_angle, zero_tol_);
    gbar = filter_small(gbar, cfg_.filter_digits);

    const bool fix = (n < cfg_.order) || cfg_.fix_final_beta;
    commit(n, std::move(gbar), std::move(rhs_poly), std::move(mu), fix);
}

LindstedtSeries LindstedtDriver::run() {
    while (committed_order() < cfg_.order) next_order();
    return std::move(series_);
}

LindstedtSeries run_lindstedt(const LindstedtConfig& cfg) {
    check_order0(cfg);
    LindstedtDriver driver(cfg);
    try {
        return driver.run();
    } catch (const RunAbortError&) {
        throw;
    } catch (const std::exception& e) {
        throw RunAbortError(std::string("lindstedt run aborted at order ") +
                                std::to_string(driver.committed_order() + 1) + ": " + e.what(),
                            driver.series());
    }
}

std::array<BigComplex, 2> evaluate_partial_sum(const LindstedtSeries& s, const BigComplex& eps,
                                               const BigReal& theta, long n_max) {
    if (n_max > s.max_order()) throw InputError("evaluate_partial_sum: order beyond series");
    const mpfr_prec_t bits = eps.bits();
    std::array<BigComplex, 2> acc{BigComplex(bits), BigComplex(bits)};
    for (long i = n_max; i >= 0; --i) {
        auto gi = eval_at(s.orders[static_cast<size_t>(i)], theta);
        acc[0] *= eps;
        acc[0] += gi[0];
        acc[1] *= eps;
        acc[1] += gi[1];
    }
    return acc;
}

} // namespace lind
