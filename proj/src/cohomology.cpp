#include "lind/cohomology.hpp"

namespace lind {

BigReal cohomology_divisor(long l, const BigReal& omega) {
    // 2(cos(l w) - 1) = -4 sin^2(l w / 2)
    BigReal half(omega.bits());
    half = omega;
    half *= l;
    half /= 2;
    BigReal s = sin(half);
    s *= s;
    s *= -4;
    return s;
}

TrigPolyPair apply_Lomega(const TrigPolyPair& phi, const BigReal& omega) {
    TrigPolyPair out(phi.grid_size(), phi.ctx());
    for (const auto& [l, c] : phi.coeffs()) {
        if (l == 0) continue;
        BigReal d = cohomology_divisor(l, omega);
        out.set_coeff(l, c[0] * d, c[1] * d);
    }
    return out;
}

std::pair<TrigPolyPair, SmallDivisorReport> solve_cohomology(const TrigPolyPair& eta,
                                                             const BigReal& omega,
                                                             const BigReal& zero_tol) {
    const PrecisionContext& ctx = eta.ctx();
    auto avg = average(eta);
    for (int comp = 0; comp < 2; ++comp) {
        if (avg[comp].abs() > zero_tol)
            throw SolvabilityError("cohomology equation unsolvable: average component " +
                                   std::to_string(comp + 1) + " is " +
                                   avg[comp].abs().to_string(8) + " > tolerance " +
                                   zero_tol.to_string(8));
    }

    BigReal divisor_floor = pow10(-(ctx.digits() - 20), ctx.bits());
    SmallDivisorReport report(ctx);
    TrigPolyPair phi(eta.grid_size(), ctx);
    bool first = true;
    for (const auto& [l, c] : eta.coeffs()) {
        if (l == 0) continue;
        BigReal d = cohomology_divisor(l, omega);
        BigReal ad = abs(d);
        if (ad < divisor_floor)
            throw NumericalError("near-resonant divisor at mode " + std::to_string(l) + ": |d| = " +
                                 ad.to_string(8));
        if (first || ad < report.min_divisor) {
            report.min_divisor = ad;
            report.arg_min_mode = l;
            first = false;
        }
        ++report.modes_solved;
        phi.set_coeff(l, c[0] / d, c[1] / d);
    }
    return {std::move(phi), std::move(report)};
}

} // namespace lind
