#ifndef LIND_COHOMOLOGY_HPP
#define LIND_COHOMOLOGY_HPP

#include "lind/trigpoly.hpp"

namespace lind {

struct SmallDivisorReport {
    BigReal min_divisor;   // smallest |2(cos(l w) - 1)| met
    long arg_min_mode = 0; // mode attaining it
    long modes_solved = 0;

    explicit SmallDivisorReport(const PrecisionContext& ctx) : min_divisor(ctx.bits()) {}
};

// 2(cos(l omega) - 1), evaluated as -4 sin^2(l omega / 2) which is exact
// where cos - 1 would cancel.
BigReal cohomology_divisor(long l, const BigReal& omega);

// L_w phi(theta) = phi(theta+w) - 2 phi(theta) + phi(theta-w), i.e.
// coeff(l) *= 2(cos(l w) - 1). Mode 0 maps to 0.
TrigPolyPair apply_Lomega(const TrigPolyPair& phi, const BigReal& omega);

// Solve L_w phi = eta for zero-average eta. phi gets mode 0 exactly zero
// (the free constant is the caller's). Throws SolvabilityError when
// |average(eta)| > zero_tol, NumericalError on a divisor below
// 10^{-(digits-20)}.
std::pair<TrigPolyPair, SmallDivisorReport> solve_cohomology(const TrigPolyPair& eta,
                                                             const BigReal& omega,
                                                             const BigReal& zero_tol);

} // namespace lind

#endif
