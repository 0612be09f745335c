#ifndef LIND_PRECISION_HPP
#define LIND_PRECISION_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "lind/errors.hpp"

namespace lind {

// Decimal working precision shared by every scalar of a computation.
// bits() adds a small guard over digits*log2(10) so that printing
// `digits` decimal digits is faithful.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits);

    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept { return bits_; }

    bool operator==(const PrecisionContext&) const = default;

private:
    int digits_;
    mpfr_prec_t bits_;
};

// Arbitrary-precision real scalar. Plain RAII over mpfr_t, value
// semantics, round-to-nearest everywhere. Binary operations produce a
// result at the larger operand precision.
class BigReal {
public:
    BigReal() = delete;
    explicit BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {}
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigReal(long value, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, value, MPFR_RNDN); }
    BigReal(double value, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, value, MPFR_RNDN); }

    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_string(const std::string& decimal, mpfr_prec_t bits);

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string; digits == 0 picks enough digits for an exact
    // binary round-trip at this precision.
    std::string to_string(size_t digits = 0) const;

    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigReal& operator/=(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigReal& operator+=(long s) { mpfr_add_si(v_, v_, s, MPFR_RNDN); return *this; }
    BigReal& operator-=(long s) { mpfr_sub_si(v_, v_, s, MPFR_RNDN); return *this; }

    void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }
    void set_zero() { mpfr_set_zero(v_, 1); }

    friend BigReal operator+(BigReal a, const BigReal& b) { a += b; return a; }
    friend BigReal operator-(BigReal a, const BigReal& b) { a -= b; return a; }
    friend BigReal operator*(BigReal a, const BigReal& b) { a *= b; return a; }
    friend BigReal operator/(BigReal a, const BigReal& b) { a /= b; return a; }
    friend BigReal operator*(BigReal a, long s) { a *= s; return a; }
    friend BigReal operator*(long s, BigReal a) { a *= s; return a; }
    friend BigReal operator/(BigReal a, long s) { a /= s; return a; }
    friend BigReal operator+(BigReal a, long s) { a += s; return a; }
    friend BigReal operator-(BigReal a, long s) { a -= s; return a; }
    friend BigReal operator-(BigReal a) { a.negate(); return a; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

private:
    mpfr_t v_;
};

BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
void sin_cos(BigReal& s, BigReal& c, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow_int(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

BigReal const_pi(mpfr_prec_t bits);
BigReal const_two_pi(mpfr_prec_t bits);
// 10^e at the given precision (exact for e >= 0 within precision).
BigReal pow10(long e, mpfr_prec_t bits);

// Complex scalar on top of BigReal. Kept deliberately small; the hot
// loops use the in-place helpers to avoid temporaries.
class BigComplex {
public:
    BigComplex() = delete;
    explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    explicit BigComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(BigReal re) : re_(std::move(re)), im_(re_.bits()) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    BigReal& re() { return re_; }
    BigReal& im() { return im_; }
    mpfr_prec_t bits() const { return re_.bits(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    void set_zero() { re_.set_zero(); im_.set_zero(); }

    BigComplex conj() const { BigComplex r(*this); r.im_.negate(); return r; }
    BigReal abs() const { return hypot(re_, im_); }
    // |z|^2, cheaper than abs() when only comparisons are needed.
    BigReal norm_sq() const;

    BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& s) { re_ *= s; im_ *= s; return *this; }
    BigComplex& operator*=(long s) { re_ *= s; im_ *= s; return *this; }

    // *this *= i (rotation by 90 degrees, exact).
    void mul_i();

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { a *= b; return a; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { a /= b; return a; }
    friend BigComplex operator*(BigComplex a, const BigReal& s) { a *= s; return a; }
    friend BigComplex operator*(const BigReal& s, BigComplex a) { a *= s; return a; }
    friend BigComplex operator*(BigComplex a, long s) { a *= s; return a; }
    friend BigComplex operator-(BigComplex a) { a.re_.negate(); a.im_.negate(); return a; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    BigReal re_, im_;
};

// acc += a * b without allocating: needs one caller-provided scratch.
void add_mul(BigComplex& acc, const BigComplex& a, const BigComplex& b, BigReal& scratch);
// acc += s * b for real s.
void add_mul(BigComplex& acc, const BigReal& s, const BigComplex& b, BigReal& scratch);
// e^{i t}
BigComplex exp_i(const BigReal& t);
// e^{z} for complex z
BigComplex exp(const BigComplex& z);

} // namespace lind

#endif
