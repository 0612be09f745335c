#include "lind/pade.hpp"

#include <algorithm>

namespace lind {

std::string component_name(SeriesComponent c) {
    switch (c) {
        case SeriesComponent::g1: return "g1";
        case SeriesComponent::g2: return "g2";
        case SeriesComponent::mu1: return "mu1";
        case SeriesComponent::mu2: return "mu2";
    }
    return "?";
}

ScalarSeries series_at_theta(const LindstedtSeries& s, const BigReal& theta,
                             SeriesComponent component, long K) {
    PrecisionContext ctx = s.ctx();
    if (K < 0) K = s.usable_order();
    if (K > s.max_order()) throw InputError("series_at_theta: K beyond computed orders");
    ScalarSeries out(ctx);
    out.component = component;
    out.theta = theta.to_string();
    out.coeffs.reserve(static_cast<size_t>(K) + 1);
    BigReal tol = pow10(-(s.digits - 10), ctx.bits());
    for (long i = 0; i <= K; ++i) {
        if (component == SeriesComponent::mu1 || component == SeriesComponent::mu2) {
            out.coeffs.push_back(s.mus[static_cast<size_t>(i)][component == SeriesComponent::mu1 ? 0 : 1]);
            continue;
        }
        auto v = eval_at(s.orders[static_cast<size_t>(i)], theta);
        const BigComplex& z = v[component == SeriesComponent::g1 ? 0 : 1];
        BigReal scale = abs(z.re());
        scale += 1;
        if (abs(z.im()) > tol * scale)
            throw ConsistencyError("series_at_theta: order " + std::to_string(i) +
                                   " is not real at theta");
        out.coeffs.push_back(z.re());
    }
    return out;
}

PadeApproximant pade(const ScalarSeries& f, long m, long n) {
    if (m < 0 || n < 0) throw InputError("pade: orders must be nonnegative");
    if (m + n + 1 > static_cast<long>(f.coeffs.size()))
        throw InputError("pade: series too short for orders (" + std::to_string(m) + "," +
                         std::to_string(n) + ")");
    const PrecisionContext& ctx = f.ctx;
    const mpfr_prec_t bits = ctx.bits();
    auto fc = [&](long i) -> BigReal {
        if (i < 0) return BigReal(bits);
        return f.coeffs[static_cast<size_t>(i)];
    };

    PadeApproximant out;
    out.m = m;
    out.n = n;
    out.den.assign(static_cast<size_t>(n) + 1, BigReal(bits));
    out.den[0] = BigReal(1L, bits);

    if (n > 0) {
        // rows j = m+1 .. m+n:  sum_{i=1..n} N_i f_{j-i} = -f_j
        DenseMatrix<BigReal> A;
        A.n = static_cast<int>(n);
        A.a.reserve(static_cast<size_t>(n) * n);
        std::vector<BigReal> rhs;
        rhs.reserve(static_cast<size_t>(n));
        for (long j = m + 1; j <= m + n; ++j) {
            for (long i = 1; i <= n; ++i) A.a.push_back(fc(j - i));
            rhs.push_back(-fc(j));
        }
        std::vector<BigReal> sol;
        try {
            sol = solve_dense_linear(std::move(A), std::move(rhs), ctx);
        } catch (const SingularSystemError& e) {
            throw DegenerateTableError("pade(" + std::to_string(m) + "," + std::to_string(n) +
                                           "): singular Toeplitz block (rank ~ " +
                                           std::to_string(e.column) + ")",
                                       e.column);
        }
        for (long i = 1; i <= n; ++i) out.den[static_cast<size_t>(i)] = std::move(sol[static_cast<size_t>(i - 1)]);
    }

    // M_j = sum_{i=0..min(j,n)} N_i f_{j-i}, j = 0..m
    out.num.reserve(static_cast<size_t>(m) + 1);
    BigReal t(bits);
    for (long j = 0; j <= m; ++j) {
        BigReal acc(bits);
        for (long i = 0; i <= std::min(j, n); ++i) {
            t = out.den[static_cast<size_t>(i)];
            t *= fc(j - i);
            acc += t;
        }
        out.num.push_back(std::move(acc));
    }

    // re-expansion must reproduce f through order m+n
    BigReal fmax(bits);
    for (long i = 0; i <= m + n; ++i) fmax = max(fmax, abs(fc(i)));
    BigReal tol = pow10(-(ctx.digits() / 2), bits);
    tol *= fmax + 1;
    auto re = rational_expansion(out, m + n, ctx);
    for (long i = 0; i <= m + n; ++i) {
        BigReal diff = abs(re[static_cast<size_t>(i)] - fc(i));
        if (diff > tol)
            throw ConsistencyError("pade(" + std::to_string(m) + "," + std::to_string(n) +
                                   "): re-expansion mismatch at order " + std::to_string(i));
    }
    return out;
}

std::vector<BigReal> rational_expansion(const PadeApproximant& p, long k,
                                        const PrecisionContext& ctx) {
    // series division num / den with den[0] = 1
    const mpfr_prec_t bits = ctx.bits();
    std::vector<BigReal> c;
    c.reserve(static_cast<size_t>(k) + 1);
    BigReal t(bits);
    for (long j = 0; j <= k; ++j) {
        BigReal acc = j <= p.m ? p.num[static_cast<size_t>(j)] : BigReal(bits);
        for (long i = 1; i <= std::min<long>(j, p.n); ++i) {
            t = p.den[static_cast<size_t>(i)];
            t *= c[static_cast<size_t>(j - i)];
            acc -= t;
        }
        acc /= p.den[0];
        c.push_back(std::move(acc));
    }
    return c;
}

ScalarSeries log_derivative_series(const ScalarSeries& f) {
    const PrecisionContext& ctx = f.ctx;
    const mpfr_prec_t bits = ctx.bits();
    if (f.coeffs.size() < 2) throw InputError("log_derivative_series: need at least 2 coefficients");
    BigReal fmax(bits);
    for (const auto& c : f.coeffs) fmax = max(fmax, abs(c));
    BigReal tol = pow10(-(ctx.digits() / 2), bits);
    if (abs(f.coeffs[0]) <= tol * fmax)
        throw NumericalError("log_derivative_series: leading coefficient too small; shift "
                             "component or theta (or strip leading zeros)");

    ScalarSeries F(ctx);
    F.component = f.component;
    F.theta = f.theta;
    const long K = static_cast<long>(f.coeffs.size()) - 1;
    F.coeffs.reserve(static_cast<size_t>(K));
    BigReal t(bits);
    for (long j = 0; j < K; ++j) {
        // F_j f_0 = (j+1) f_{j+1} - sum_{i<j} F_i f_{j-i}
        BigReal acc = f.coeffs[static_cast<size_t>(j + 1)];
        acc *= j + 1;
        for (long i = 0; i < j; ++i) {
            t = F.coeffs[static_cast<size_t>(i)];
            t *= f.coeffs[static_cast<size_t>(j - i)];
            acc -= t;
        }
        acc /= f.coeffs[0];
        F.coeffs.push_back(std::move(acc));
    }
    return F;
}

PoleSet poles_with_residues(const PadeApproximant& p, const BigReal& tol,
                            const BigReal& series_scale) {
    if (p.n < 1) throw InputError("poles_with_residues: denominator degree must be >= 1");
    const mpfr_prec_t bits = p.den[0].bits();

    std::vector<BigComplex> den_c, num_c, dden_c;
    for (const auto& c : p.den) den_c.emplace_back(c);
    for (const auto& c : p.num) num_c.emplace_back(c);
    for (size_t i = 1; i < p.den.size(); ++i) {
        BigReal d = p.den[i];
        d *= static_cast<long>(i);
        dden_c.emplace_back(std::move(d));
    }

    std::vector<BigComplex> roots = poly_roots(den_c, tol);
    std::vector<BigComplex> nroots;
    if (p.m >= 1) {
        try {
            nroots = poly_roots(num_c, tol);
        } catch (const RootConvergenceError& e) {
            nroots = e.best_iterates;
        }
    }

    // Froissart distance: 1e-8 times the median pole modulus
    BigReal delta(bits);
    if (!roots.empty()) {
        std::vector<BigReal> mags;
        for (const auto& z : roots) mags.push_back(z.abs());
        std::sort(mags.begin(), mags.end());
        delta = mags[mags.size() / 2];
        delta *= pow10(-8, bits);
    }

    PoleSet out;
    BigReal res_floor = tol * (series_scale + 1);
    for (const auto& z : roots) {
        Pole pole{z, BigComplex(bits), false};
        BigComplex mz = poly_eval(num_c, z);
        BigComplex dz = poly_eval(dden_c, z);
        if (dz.is_zero()) {
            pole.spurious = true;
        } else {
            pole.residue = mz / dz;
        }
        for (const auto& w : nroots) {
            BigComplex diff = z - w;
            if (diff.abs() < delta) { pole.spurious = true; break; }
        }
        if (pole.residue.abs() < res_floor) pole.spurious = true;
        out.poles.push_back(std::move(pole));
    }
    return out;
}

namespace {

// Pade with the spec'd retry: a singular block retries at smaller
// denominator degree.
PadeApproximant pade_with_retry(const ScalarSeries& f, long m, long& n) {
    while (true) {
        try {
            return pade(f, m, n);
        } catch (const DegenerateTableError&) {
            if (n <= 1) throw;
            --n;
        }
    }
}

} // namespace

std::vector<PoleSet> pole_cloud(const LindstedtSeries& s, const BigReal& theta,
                                const std::vector<std::pair<long, long>>& orders, bool log_mode) {
    PrecisionContext ctx = s.ctx();
    const mpfr_prec_t bits = ctx.bits();
    std::vector<SeriesComponent> comps{SeriesComponent::g1, SeriesComponent::g2};
    if (s.gamma == 1) {
        comps.push_back(SeriesComponent::mu1);
        comps.push_back(SeriesComponent::mu2);
    }
    BigReal tol = pow10(-(ctx.digits() / 2), bits);

    std::vector<PoleSet> out;
    for (SeriesComponent comp : comps) {
        ScalarSeries base = series_at_theta(s, theta, comp, s.usable_order());
        for (auto [m, n] : orders) {
            PoleSet cell;
            cell.component = comp;
            cell.m = m;
            cell.n = n;
            cell.log_mode = log_mode;
            try {
                ScalarSeries f(ctx);
                f.component = comp;
                f.theta = base.theta;
                f.coeffs = base.coeffs;
                if (log_mode) {
                    // strip leading zero coefficients: poles are unmoved,
                    // only the origin pole of f'/f is removed
                    BigReal fmax(bits);
                    for (const auto& c : f.coeffs) fmax = max(fmax, abs(c));
                    if (fmax.is_zero()) throw NumericalError("zero series");
                    size_t lead = 0;
                    BigReal lead_tol = tol * fmax;
                    while (lead < f.coeffs.size() && abs(f.coeffs[lead]) <= lead_tol) ++lead;
                    f.coeffs.erase(f.coeffs.begin(), f.coeffs.begin() + static_cast<long>(lead));
                    f = log_derivative_series(f);
                }
                long mm = m, nn = n;
                const long len = static_cast<long>(f.coeffs.size());
                if (mm + nn + 1 > len) {
                    // log mode shortens the series; shrink the cell to fit
                    mm = std::max<long>(0, (len - 1) / 2);
                    nn = std::max<long>(1, len - 1 - mm);
                }
                PadeApproximant pa = pade_with_retry(f, mm, nn);
                BigReal scale(bits);
                for (const auto& c : f.coeffs) scale = max(scale, abs(c));
                cell = poles_with_residues(pa, tol, scale);
                cell.component = comp;
                cell.m = pa.m;
                cell.n = pa.n;
                cell.log_mode = log_mode;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            out.push_back(std::move(cell));
        }
    }
    return out;
}

} // namespace lind
