#include "lind/trigpoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace lind {

GridFunctionPair::GridFunctionPair(long grid_size, const PrecisionContext& ctx_in)
    : ctx(ctx_in) {
    for (auto& comp : values) {
        comp.reserve(static_cast<size_t>(grid_size));
        for (long j = 0; j < grid_size; ++j) comp.emplace_back(ctx_in.bits());
    }
}

std::array<BigComplex, 2> TrigPolyPair::coeff(long l) const {
    auto it = coeffs_.find(l);
    if (it != coeffs_.end()) return it->second;
    return {BigComplex(ctx_.bits()), BigComplex(ctx_.bits())};
}

void TrigPolyPair::set_coeff(long l, BigComplex c1, BigComplex c2) {
    if (c1.is_zero() && c2.is_zero()) {
        coeffs_.erase(l);
        return;
    }
    auto it = coeffs_.find(l);
    if (it == coeffs_.end())
        coeffs_.emplace(l, std::array<BigComplex, 2>{std::move(c1), std::move(c2)});
    else
        it->second = {std::move(c1), std::move(c2)};
}

void TrigPolyPair::add_to_coeff(long l, const BigComplex& c1, const BigComplex& c2) {
    auto it = coeffs_.find(l);
    if (it == coeffs_.end()) {
        coeffs_.emplace(l, std::array<BigComplex, 2>{c1, c2});
    } else {
        it->second[0] += c1;
        it->second[1] += c2;
    }
}

long TrigPolyPair::max_mode() const {
    long m = 0;
    for (const auto& [l, c] : coeffs_) m = std::max(m, std::labs(l));
    return m;
}

BigReal TrigPolyPair::max_coeff_mag() const {
    BigReal m(ctx_.bits());
    for (const auto& [l, c] : coeffs_) {
        m = max(m, c[0].abs());
        m = max(m, c[1].abs());
    }
    return m;
}

TrigPolyPair& TrigPolyPair::operator+=(const TrigPolyPair& o) {
    for (const auto& [l, c] : o.coeffs()) add_to_coeff(l, c[0], c[1]);
    return *this;
}

TrigPolyPair& TrigPolyPair::operator-=(const TrigPolyPair& o) {
    for (const auto& [l, c] : o.coeffs()) add_to_coeff(l, -c[0], -c[1]);
    return *this;
}

TrigPolyPair& TrigPolyPair::operator*=(const BigReal& s) {
    for (auto& [l, c] : coeffs_) {
        c[0] *= s;
        c[1] *= s;
    }
    return *this;
}

namespace {

bool is_pow2(long m) { return m > 0 && (m & (m - 1)) == 0; }

// Twiddle table e^{+2 pi i j / M} for j < M/2, cached per (M, bits).
struct TwiddleTable {
    std::vector<BigComplex> w;
};

const TwiddleTable& twiddles(long m, mpfr_prec_t bits) {
    static std::mutex mu;
    static std::map<std::pair<long, mpfr_prec_t>, std::unique_ptr<TwiddleTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, bits);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto table = std::make_unique<TwiddleTable>();
    table->w.reserve(static_cast<size_t>(m / 2));
    BigReal two_pi = const_two_pi(bits);
    for (long j = 0; j < m / 2; ++j) {
        BigReal ang = two_pi;
        ang *= j;
        ang /= m;
        table->w.push_back(exp_i(ang));
    }
    const TwiddleTable& ref = *table;
    cache.emplace(key, std::move(table));
    return ref;
}

// In-place radix-2 decimation-in-time; sign = +1 uses e^{+i...}, -1 the
// conjugate. No normalization.
void fft_raw(std::vector<BigComplex>& a, int sign, const PrecisionContext& ctx) {
    const long n = static_cast<long>(a.size());
    if (!is_pow2(n)) throw InputError("fft: size must be a power of two");
    if (n == 1) return;
    const TwiddleTable& tw = twiddles(n, ctx.bits());

    // bit-reversal permutation
    for (long i = 1, j = 0; i < n; ++i) {
        long bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    BigComplex t(ctx.bits());
    BigReal tmp(ctx.bits());
    for (long len = 2; len <= n; len <<= 1) {
        const long step = n / len;
        for (long i = 0; i < n; i += len) {
            for (long j = 0; j < len / 2; ++j) {
                const BigComplex& w = tw.w[static_cast<size_t>(j * step)];
                BigComplex& u = a[static_cast<size_t>(i + j)];
                BigComplex& v = a[static_cast<size_t>(i + j + len / 2)];
                // t = w * v (conjugated twiddle for sign = -1)
                if (sign > 0) {
                    mpfr_fmms(t.re().raw(), w.re().raw(), v.re().raw(), w.im().raw(), v.im().raw(),
                              MPFR_RNDN);
                    mpfr_fmma(t.im().raw(), w.re().raw(), v.im().raw(), w.im().raw(), v.re().raw(),
                              MPFR_RNDN);
                } else {
                    // conjugated twiddle: (w.re, -w.im)
                    mpfr_fmma(t.re().raw(), w.re().raw(), v.re().raw(), w.im().raw(), v.im().raw(),
                              MPFR_RNDN);
                    mpfr_fmms(t.im().raw(), w.re().raw(), v.im().raw(), w.im().raw(), v.re().raw(),
                              MPFR_RNDN);
                }
                // v = u - t; u = u + t
                v = u;
                v -= t;
                u += t;
            }
        }
    }
}

} // namespace

void fft_forward(std::vector<BigComplex>& v, const PrecisionContext& ctx) {
    fft_raw(v, -1, ctx);
    const long m = static_cast<long>(v.size());
    for (auto& z : v) {
        z.re() /= m;
        z.im() /= m;
    }
}

void fft_inverse(std::vector<BigComplex>& v, const PrecisionContext& ctx) {
    fft_raw(v, +1, ctx);
}

GridFunctionPair to_grid(const TrigPolyPair& p) {
    const long m = p.grid_size();
    GridFunctionPair g(m, p.ctx());
    for (int comp = 0; comp < 2; ++comp) {
        auto& v = g.values[comp];
        for (const auto& [l, c] : p.coeffs()) {
            if (l < -m / 2 || l > m / 2 - 1)
                throw InputError("to_grid: mode " + std::to_string(l) +
                                 " outside [-M/2, M/2) for M = " + std::to_string(m));
            const long idx = l >= 0 ? l : l + m;
            v[static_cast<size_t>(idx)] += c[comp];
        }
        fft_inverse(v, p.ctx());
    }
    return g;
}

TrigPolyPair to_coeffs(const GridFunctionPair& g) {
    const long m = g.grid_size();
    TrigPolyPair p(m, g.ctx);
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<BigComplex> v = g.values[comp];
        fft_forward(v, g.ctx);
        for (long idx = 0; idx < m; ++idx) {
            long l = idx < m / 2 ? idx : idx - m;
            const BigComplex& c = v[static_cast<size_t>(idx)];
            if (c.is_zero()) continue;
            if (comp == 0)
                p.add_to_coeff(l, c, BigComplex(g.ctx.bits()));
            else
                p.add_to_coeff(l, BigComplex(g.ctx.bits()), c);
        }
    }
    return p;
}

TrigPolyPair shift(const TrigPolyPair& p, const BigReal& delta) {
    TrigPolyPair out(p.grid_size(), p.ctx());
    BigReal ang(p.ctx().bits());
    for (const auto& [l, c] : p.coeffs()) {
        ang = delta;
        ang *= l;
        BigComplex rot = exp_i(ang);
        out.set_coeff(l, c[0] * rot, c[1] * rot);
    }
    return out;
}

TrigPolyPair filter_small(const TrigPolyPair& p, int filter_digits) {
    BigReal thr = pow10(-filter_digits, p.ctx().bits());
    BigReal thr2 = thr * thr;
    TrigPolyPair out(p.grid_size(), p.ctx());
    for (const auto& [l, c] : p.coeffs()) {
        BigComplex c1 = c[0], c2 = c[1];
        if (c1.norm_sq() < thr2) c1.set_zero();
        if (c2.norm_sq() < thr2) c2.set_zero();
        if (!c1.is_zero() || !c2.is_zero()) out.set_coeff(l, std::move(c1), std::move(c2));
    }
    return out;
}

BigReal norm_rho_r(const TrigPolyPair& p, const BigReal& rho, long r, Component comp) {
    const mpfr_prec_t bits = p.ctx().bits();
    BigReal sum(bits);
    BigReal w(bits), e(bits);
    for (const auto& [l, c] : p.coeffs()) {
        const long al = std::labs(l);
        // w = e^{2|l|rho} (1+|l|)^r
        e = rho;
        e *= 2 * al;
        w = exp(e);
        w *= pow_int(BigReal(1 + al, bits), r);
        if (comp == Component::first || comp == Component::both) sum += c[0].norm_sq() * w;
        if (comp == Component::second || comp == Component::both) sum += c[1].norm_sq() * w;
    }
    return sqrt(sum);
}

BigReal sup_norm_grid(const GridFunctionPair& g) {
    BigReal best(g.ctx.bits());
    BigReal m(g.ctx.bits());
    for (size_t j = 0; j < g.values[0].size(); ++j) {
        m = g.values[0][j].norm_sq();
        m += g.values[1][j].norm_sq();
        if (m > best) best = m;
    }
    return sqrt(best);
}

BigReal sup_norm_grid(const TrigPolyPair& p) { return sup_norm_grid(to_grid(p)); }

std::array<BigComplex, 2> average(const TrigPolyPair& p) { return p.coeff(0); }

std::array<BigComplex, 2> eval_at(const TrigPolyPair& p, const BigReal& theta) {
    const mpfr_prec_t bits = p.ctx().bits();
    std::array<BigComplex, 2> out{BigComplex(bits), BigComplex(bits)};
    BigReal ang(bits), t(bits);
    for (const auto& [l, c] : p.coeffs()) {
        ang = theta;
        ang *= l;
        BigComplex ph = exp_i(ang);
        add_mul(out[0], c[0], ph, t);
        add_mul(out[1], c[1], ph, t);
    }
    return out;
}

} // namespace lind
