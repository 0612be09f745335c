#ifndef LIND_TESTS_HELPERS_HPP
#define LIND_TESTS_HELPERS_HPP

#include <random>

#include "lind/precision.hpp"
#include "lind/trigpoly.hpp"

namespace lind::test {

// deterministic uniform in [-1, 1] with exact dyadic values
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    BigReal real(mpfr_prec_t bits) {
        const double d = std::uniform_real_distribution<double>(-1.0, 1.0)(eng_);
        return BigReal(d, bits);
    }
    BigComplex complex(mpfr_prec_t bits) {
        BigReal re = real(bits);
        BigReal im = real(bits);
        return BigComplex(std::move(re), std::move(im));
    }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

private:
    std::mt19937_64 eng_;
};

// random real-valued R^2 trig polynomial with support <= deg
inline TrigPolyPair random_real_poly(Rng& rng, long deg, long grid, const PrecisionContext& ctx) {
    TrigPolyPair p(grid, ctx);
    for (long l = 1; l <= deg; ++l) {
        BigComplex c1 = rng.complex(ctx.bits());
        BigComplex c2 = rng.complex(ctx.bits());
        p.set_coeff(l, c1, c2);
        p.set_coeff(-l, c1.conj(), c2.conj());
    }
    BigComplex c1(rng.real(ctx.bits()));
    BigComplex c2(rng.real(ctx.bits()));
    p.set_coeff(0, c1, c2);
    return p;
}

inline bool close(const BigReal& a, const BigReal& b, const BigReal& tol) {
    return abs(a - b) <= tol;
}

} // namespace lind::test

#endif
