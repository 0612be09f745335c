#ifndef LIND_PADE_HPP
#define LIND_PADE_HPP

#include <string>
#include <vector>

#include "lind/lindstedt.hpp"
#include "lind/numerics.hpp"

namespace lind {

enum class SeriesComponent { g1, g2, mu1, mu2 };

std::string component_name(SeriesComponent c);

// Real scalar power series in eps, obtained by freezing theta.
struct ScalarSeries {
    std::vector<BigReal> coeffs;
    SeriesComponent component = SeriesComponent::g1;
    std::string theta = "0";
    PrecisionContext ctx;

    ScalarSeries(const PrecisionContext& ctx_in) : ctx(ctx_in) {}
};

// coeffs[i] = chosen component of g_i(theta) (or mu_i). K defaults to the
// usable order of the series.
ScalarSeries series_at_theta(const LindstedtSeries& s, const BigReal& theta,
                             SeriesComponent component, long K);

// Rational approximant M/N of type (m, n) with N(0) = 1.
struct PadeApproximant {
    std::vector<BigReal> num; // M_0 .. M_m
    std::vector<BigReal> den; // N_0 .. N_n, den[0] = 1
    long m = 0, n = 0;
};

class DegenerateTableError : public NumericalError {
public:
    DegenerateTableError(const std::string& msg, int rank) : NumericalError(msg), rank(rank) {}
    int rank;
};

// Solve the order-matching conditions: the n x n Toeplitz block for N,
// then M by convolution. Enforces the re-expansion check through order
// m + n. Throws DegenerateTableError on a singular block.
PadeApproximant pade(const ScalarSeries& f, long m, long n);

// F = f'/f as a power series: F_j from (j+1) f_{j+1} = sum_i F_i f_{j-i}.
ScalarSeries log_derivative_series(const ScalarSeries& f);

struct Pole {
    BigComplex location;
    BigComplex residue;
    bool spurious = false;
};

struct PoleSet {
    std::vector<Pole> poles;
    SeriesComponent component = SeriesComponent::g1;
    long m = 0, n = 0;
    bool log_mode = false;
    std::string error; // per-cell failure, empty when ok
};

// Denominator zeros with residues M(z)/N'(z). Froissart doublets (a
// numerator zero within delta of the pole, or negligible residue) are
// flagged spurious but kept.
PoleSet poles_with_residues(const PadeApproximant& p, const BigReal& tol,
                            const BigReal& series_scale);

// Full pipeline over components x orders; per-cell failures are recorded
// in the PoleSet rather than thrown. With log_mode the Pade approximant
// is taken of d/deps ln(f) after stripping leading zero coefficients.
std::vector<PoleSet> pole_cloud(const LindstedtSeries& s, const BigReal& theta,
                                const std::vector<std::pair<long, long>>& orders, bool log_mode);

// Exposed for tests: re-expand M/N as a power series to order k.
std::vector<BigReal> rational_expansion(const PadeApproximant& p, long k,
                                        const PrecisionContext& ctx);

} // namespace lind

#endif
