#ifndef LIND_LINDSTEDT_HPP
#define LIND_LINDSTEDT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lind/cohomology.hpp"
#include "lind/numerics.hpp"
#include "lind/potential.hpp"

namespace lind {

// Inline potential description for configs: l1 l2 re1 im1 re2 im2, the
// coefficients as decimal strings.
struct PotentialModeSpec {
    long l1 = 0, l2 = 0;
    std::string re1 = "0", im1 = "0", re2 = "0", im2 = "0";
};

struct LindstedtConfig {
    int gamma = 0; // 0 conservative, 1 dissipative (lambda(eps) = 1 - eps^3)
    FrequencySpec omega_spec{};
    long order = 120; // N
    int digits = 400;
    int filter_digits = 100;
    long grid_size = 0; // 0 = auto: next power of two >= 4*N*J + 4
    IVec2 k{1, 0};
    IVec2 kperp{0, 1};
    std::string beta0 = "0";
    std::vector<PotentialModeSpec> potential_modes; // empty = default potential
    bool fix_final_beta = true;
    bool store_rhs = true;

    PrecisionContext ctx() const { return PrecisionContext(digits); }
    void validate() const;
};

PotentialSpec build_potential(const LindstedtConfig& cfg, const PrecisionContext& ctx);
long resolve_grid_size(const LindstedtConfig& cfg, long degree);

struct LindstedtSeries {
    int gamma = 0;
    FrequencySpec omega_spec{};
    BigReal omega;       // rotation number, from eval_frequency
    BigReal omega_angle; // 2 pi omega: the circle shift used by the dynamics
    int digits = 0;
    int filter_digits = 0;
    long grid_size = 0;
    IVec2 k{1, 0}, kperp{0, 1};
    BigReal beta0;
    PotentialSpec potential;

    std::vector<TrigPolyPair> orders; // committed g_0 .. g_N
    std::vector<BigReal> betas;
    std::vector<bool> beta_is_provisional;
    std::vector<std::array<BigReal, 2>> mus;
    std::vector<BigReal> cohom_residuals; // sup |L g_n - RHS_n|, index n (0 at n=0)
    std::vector<BigReal> rhs_sup;         // sup norm of RHS_n
    std::vector<TrigPolyPair> rhs;        // RHS_n when store_rhs was set (index 0 unused)
    bool loaded_below_context = false;

    explicit LindstedtSeries(const PrecisionContext& ctx)
        : omega(ctx.bits()), omega_angle(ctx.bits()), beta0(ctx.bits()),
          potential(default_potential(ctx)) {}

    PrecisionContext ctx() const { return PrecisionContext(digits); }
    long max_order() const { return static_cast<long>(orders.size()) - 1; }
    // highest order whose kperp constant is committed
    long usable_order() const;
};

struct Order0Report {
    std::array<BigReal, 2> gradient_average_abs;
    BigReal nondegeneracy_average;
};

// |average of grad V(theta k + beta0 kperp)| per component plus the
// non-degeneracy average. Throws InputError on a nonzero order-0
// average; throws on a degenerate configuration unless the potential is
// identically zero (the unperturbed map is fine, every order vanishes).
Order0Report check_order0(const LindstedtConfig& cfg);

// Zeros of beta |-> average of kperp . grad V(theta k + beta kperp) over
// [0, 2 pi), by sign-change bracketing and bisection.
std::vector<BigReal> find_beta0_candidates(const LindstedtConfig& cfg, int n_samples);

// Order-by-order construction. The driver owns the nonlinearity state;
// each next_order() commits one more order of the series.
class LindstedtDriver {
public:
    explicit LindstedtDriver(const LindstedtConfig& cfg);

    long committed_order() const { return static_cast<long>(series_.orders.size()) - 1; }
    const LindstedtSeries& series() const { return series_; }

    void next_order();
    // run through the configured N and finish the final-order constant
    // per cfg.fix_final_beta
    LindstedtSeries run();

private:
    std::pair<TrigPolyPair, std::array<BigReal, 2>> build_rhs(long n, TrigPolyPair r);
    void commit(long n, TrigPolyPair gbar, TrigPolyPair rhs_poly, std::array<BigReal, 2> mu,
                bool fix_beta);

    LindstedtConfig cfg_;
    PrecisionContext ctx_;
    LindstedtSeries series_;
    std::unique_ptr<NonlinearityState> state_;
    BigReal zero_tol_;
    BigReal d_average_; // integral of kperp . D2V(theta k + g0) kperp: beta denominator
};

// run(config): check order 0, then all orders through N. On failure the
// partial series is attached.
class RunAbortError : public NumericalError {
public:
    RunAbortError(const std::string& msg, LindstedtSeries partial)
        : NumericalError(msg), partial_series(std::make_shared<LindstedtSeries>(std::move(partial))) {}
    std::shared_ptr<LindstedtSeries> partial_series;
};

LindstedtSeries run_lindstedt(const LindstedtConfig& cfg);

// Horner evaluation of sum_{i<=n_max} g_i(theta) eps^i.
std::array<BigComplex, 2> evaluate_partial_sum(const LindstedtSeries& s, const BigComplex& eps,
                                               const BigReal& theta, long n_max);

} // namespace lind

#endif
