#ifndef LIND_DIAGNOSTICS_HPP
#define LIND_DIAGNOSTICS_HPP

#include "lind/lindstedt.hpp"

namespace lind {

// sup |L_w g_n - RHS_n| for a committed order. Uses the stored RHS when
// available, otherwise replays the nonlinearity from the committed
// orders.
BigReal cohomology_residual(const LindstedtSeries& s, long n);

// Residual of the full invariance equation on the partial sum
// sum_{i<=n} g_i eps^i, evaluated pointwise on the grid with grad V
// summed directly from the potential modes (independent of the
// F-recursion). Returns the sup norm over grid points.
BigReal invariance_residual(const LindstedtSeries& s, const BigComplex& eps, long n);

// Replays R_n (plus the dissipative terms) from the committed orders
// alone; shared by cohomology_residual and the archive validation path.
TrigPolyPair reconstruct_rhs(const LindstedtSeries& s, long n);

// Residuals for every order 1..max in one nonlinearity pass (cheaper
// than per-order reconstruction on archive-loaded series).
std::vector<BigReal> all_cohomology_residuals(const LindstedtSeries& s);

} // namespace lind

#endif
