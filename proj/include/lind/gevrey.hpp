#ifndef LIND_GEVREY_HPP
#define LIND_GEVREY_HPP

#include <vector>

#include "lind/lindstedt.hpp"

namespace lind {

struct GevreyFit {
    BigReal sigma;
    BigReal lnR;
    long n_min = 0, n_max = 0;
    BigReal rss;
    Component component = Component::both;

    explicit GevreyFit(const PrecisionContext& ctx)
        : sigma(ctx.bits()), lnR(ctx.bits()), rss(ctx.bits()) {}
};

struct APoint {
    long n;
    BigReal value;
};

// A_{rho,r}(n) = (1/n) ln ||g_n||_{rho,r}; zero-norm orders are skipped.
std::vector<APoint> a_sequence(const LindstedtSeries& s, const BigReal& rho, long r,
                               Component component);

// Ordinary least squares of A against (1, ln n) over n in [n_min, n_max].
GevreyFit fit_log(const std::vector<APoint>& data, long n_min, long n_max,
                  const PrecisionContext& ctx);

} // namespace lind

#endif
