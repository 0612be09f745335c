#include "lind/precision.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace lind {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
    if (digits < 50)
        throw InputError("precision context requires at least 50 decimal digits, got " +
                         std::to_string(digits));
    // log2(10) = 3.3219...; 32 guard bits keep decimal printing faithful.
    bits_ = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigReal BigReal::from_string(const std::string& decimal, mpfr_prec_t bits) {
    BigReal r(bits);
    const char* s = decimal.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.v_, s, &end, 10, MPFR_RNDN);
    if (end == s || *end != '\0')
        throw InputError("unparsable decimal number: '" + decimal + "'");
    return r;
}

std::string BigReal::to_string(size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string out;
    size_t d = 0;
    if (mant[0] == '-') { out = "-"; d = 1; }
    // strip trailing zeros of the mantissa, keep at least one digit
    size_t last = mant.find_last_not_of('0');
    if (last + 1 > d) mant.erase(last + 1);
    out += "0.";
    out += mant.substr(d);
    out += "e";
    out += std::to_string(static_cast<long>(e));
    return out;
}

BigReal sqrt(const BigReal& x) { BigReal r(x.bits()); mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
BigReal abs(const BigReal& x)  { BigReal r(x.bits()); mpfr_abs(r.raw(), x.raw(), MPFR_RNDN); return r; }
BigReal exp(const BigReal& x)  { BigReal r(x.bits()); mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
BigReal log(const BigReal& x)  { BigReal r(x.bits()); mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
BigReal cos(const BigReal& x)  { BigReal r(x.bits()); mpfr_cos(r.raw(), x.raw(), MPFR_RNDN); return r; }
BigReal sin(const BigReal& x)  { BigReal r(x.bits()); mpfr_sin(r.raw(), x.raw(), MPFR_RNDN); return r; }

void sin_cos(BigReal& s, BigReal& c, const BigReal& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r(std::max(x.bits(), y.bits()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigReal pow_int(const BigReal& x, long e) {
    BigReal r(x.bits());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

BigReal const_pi(mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal const_two_pi(mpfr_prec_t bits) {
    BigReal r = const_pi(bits);
    r *= 2;
    return r;
}

BigReal pow10(long e, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_ui_pow_ui(r.raw(), 10u, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

BigReal BigComplex::norm_sq() const {
    BigReal r(bits());
    mpfr_fmma(r.raw(), re_.raw(), re_.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal t(std::max(bits(), o.bits()));
    // t = re*o.re - im*o.im;  im = re*o.im + im*o.re
    mpfr_fmms(t.raw(), re_.raw(), o.re_.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
    mpfr_fmma(im_.raw(), re_.raw(), o.im_.raw(), im_.raw(), o.re_.raw(), MPFR_RNDN);
    re_ = std::move(t);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigReal d = o.norm_sq();
    BigReal t(std::max(bits(), o.bits()));
    mpfr_fmma(t.raw(), re_.raw(), o.re_.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
    mpfr_fmms(im_.raw(), im_.raw(), o.re_.raw(), re_.raw(), o.im_.raw(), MPFR_RNDN);
    t /= d;
    im_ /= d;
    re_ = std::move(t);
    return *this;
}

void BigComplex::mul_i() {
    mpfr_swap(re_.raw(), im_.raw());
    re_.negate();
}

void add_mul(BigComplex& acc, const BigComplex& a, const BigComplex& b, BigReal& t) {
    mpfr_fmms(t.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
    acc.re() += t;
    mpfr_fmma(t.raw(), a.re().raw(), b.im().raw(), a.im().raw(), b.re().raw(), MPFR_RNDN);
    acc.im() += t;
}

void add_mul(BigComplex& acc, const BigReal& s, const BigComplex& b, BigReal& t) {
    mpfr_fma(t.raw(), s.raw(), b.re().raw(), acc.re().raw(), MPFR_RNDN);
    mpfr_swap(acc.re().raw(), t.raw());
    mpfr_fma(t.raw(), s.raw(), b.im().raw(), acc.im().raw(), MPFR_RNDN);
    mpfr_swap(acc.im().raw(), t.raw());
}

BigComplex exp_i(const BigReal& t) {
    BigComplex z(t.bits());
    mpfr_sin_cos(z.im().raw(), z.re().raw(), t.raw(), MPFR_RNDN);
    return z;
}

BigComplex exp(const BigComplex& z) {
    BigComplex r = exp_i(z.im());
    BigReal m = exp(z.re());
    r *= m;
    return r;
}

} // namespace lind
