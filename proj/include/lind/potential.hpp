#ifndef LIND_POTENTIAL_HPP
#define LIND_POTENTIAL_HPP

#include <array>
#include <vector>

#include "lind/trigpoly.hpp"

namespace lind {

using IVec2 = std::array<long, 2>;

inline long dot(const IVec2& a, const IVec2& b) { return a[0] * b[0] + a[1] * b[1]; }

// One Fourier mode of grad V: coefficient alpha of e^{i l . q}.
struct PotentialMode {
    IVec2 l;
    std::array<BigComplex, 2> alpha;
};

// grad V(q) = sum_{0 < |l| <= J} alpha_l e^{i l . q} with the reality
// pairing alpha_{-l} = conj(alpha_l) and alpha_l parallel to l.
class PotentialSpec {
public:
    PotentialSpec(std::vector<PotentialMode> modes, const PrecisionContext& ctx);

    const std::vector<PotentialMode>& modes() const { return modes_; }
    long degree() const { return degree_; } // max |l|_1
    const PrecisionContext& ctx() const { return ctx_; }

    // pointwise gradient, direct mode summation
    std::array<BigComplex, 2> eval_gradient(const BigReal& q1, const BigReal& q2) const;

private:
    std::vector<PotentialMode> modes_;
    long degree_;
    PrecisionContext ctx_;
};

// V(q) = -cos(q1) - cos(q2) - cos(q1+q2)
PotentialSpec default_potential(const PrecisionContext& ctx);

// Evolving grid data of the exponentials e^{i l.(theta k + g_eps)} =
// sum_n F_n^{l,k} eps^n. Modes come in conjugate pairs; only the
// canonical member of each pair is tracked, the partner being the
// complex conjugate as long as every committed g_n is real.
class NonlinearityState {
public:
    NonlinearityState(const PotentialSpec& V, IVec2 k, IVec2 kperp,
                      const TrigPolyPair& g0, long grid_size, const PrecisionContext& ctx);

    long grid_size() const { return grid_size_; }
    long orders_committed() const { return static_cast<long>(g_grids_.size()); } // includes order 0
    const PotentialSpec& potential() const { return V_; }
    const IVec2& k() const { return k_; }
    const IVec2& kperp() const { return kperp_; }

    // Append the committed g at the next order and compute its F_n.
    void advance(const TrigPolyPair& g_new);

    // F_n for the next uncommitted order, evaluated with candidate g_n.
    // Does not modify the state.
    std::vector<std::vector<BigComplex>> top_order_f(const TrigPolyPair& g_candidate) const;

    // R_{n+1} = sum_l alpha_l F_n^{l,k} from a candidate top-order F
    // produced by top_order_f. Result is real by conjugate pairing.
    GridFunctionPair r_from_top(const std::vector<std::vector<BigComplex>>& ftop) const;

    // R_n for committed orders: requires orders_committed() > n-1.
    // Transforms the grid sum to Fourier coefficients, checks reality of
    // the ingredients, and truncates to the degree bound n*J.
    TrigPolyPair r_coefficient(long n) const;
    GridFunctionPair r_grid(long n) const;

    // integral over T of kperp . (sum_l alpha_l F_top), for the
    // solvability bookkeeping: equals 2 pi times the mode-0 average.
    BigReal kperp_average_from_top(const std::vector<std::vector<BigComplex>>& ftop) const;

    // Commit g_new together with its already-computed top-order F
    // (avoids recomputing the recursion after the constant is fixed).
    void advance_with_top(const TrigPolyPair& g_new, std::vector<std::vector<BigComplex>> ftop);

    const std::vector<PotentialMode>& canonical_modes() const { return canon_; }
    // i (l . kperp) F_0 per canonical mode: the exact derivative of the
    // top-order F with respect to the order-n constant along kperp.
    const std::vector<std::vector<BigComplex>>& f0_kperp_derivative() const { return df_; }

private:
    void push_g_grid(const TrigPolyPair& g);

    PotentialSpec V_;
    IVec2 k_, kperp_;
    long grid_size_;
    PrecisionContext ctx_;
    std::vector<PotentialMode> canon_;          // one per conjugate pair
    std::vector<std::vector<std::vector<BigComplex>>> f_; // [mode][order][grid]
    std::vector<std::vector<BigComplex>> df_;   // [mode][grid]
    // committed g on the grid, per order, both components
    std::vector<std::array<std::vector<BigComplex>, 2>> g_grids_;
};

// grid samples of kperp . D^2V(theta k + g0) kperp for constant g0
std::vector<BigComplex> d2v_quadratic_form(const PotentialSpec& V, IVec2 k, IVec2 kperp,
                                           const std::array<BigReal, 2>& g0, long grid_size);

} // namespace lind

#endif
