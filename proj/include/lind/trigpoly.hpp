#ifndef LIND_TRIGPOLY_HPP
#define LIND_TRIGPOLY_HPP

#include <array>
#include <map>
#include <vector>

#include "lind/precision.hpp"

namespace lind {

// R^2-valued function on the circle, sampled at theta_j = 2 pi j / M.
// Stored as one complex vector per component.
struct GridFunctionPair {
    std::array<std::vector<BigComplex>, 2> values;
    PrecisionContext ctx;

    GridFunctionPair(long grid_size, const PrecisionContext& ctx);
    long grid_size() const { return static_cast<long>(values[0].size()); }
};

// R^2-valued trigonometric polynomial, sparse complex Fourier
// coefficients keyed by mode. Real functions keep conjugate symmetry
// coeff(-l) = conj(coeff(l)) componentwise.
class TrigPolyPair {
public:
    using CoeffMap = std::map<long, std::array<BigComplex, 2>>;

    TrigPolyPair(long grid_size, const PrecisionContext& ctx)
        : grid_size_(grid_size), ctx_(ctx) {}

    const PrecisionContext& ctx() const { return ctx_; }
    long grid_size() const { return grid_size_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool has_mode(long l) const { return coeffs_.count(l) != 0; }
    // coefficient of mode l (zero pair if absent)
    std::array<BigComplex, 2> coeff(long l) const;
    void set_coeff(long l, BigComplex c1, BigComplex c2);
    void add_to_coeff(long l, const BigComplex& c1, const BigComplex& c2);
    void drop_mode(long l) { coeffs_.erase(l); }

    long max_mode() const; // largest |l| in support, 0 if empty
    bool empty() const { return coeffs_.empty(); }

    // largest componentwise coefficient modulus
    BigReal max_coeff_mag() const;

    TrigPolyPair& operator+=(const TrigPolyPair& o);
    TrigPolyPair& operator-=(const TrigPolyPair& o);
    TrigPolyPair& operator*=(const BigReal& s);

private:
    CoeffMap coeffs_;
    long grid_size_;
    PrecisionContext ctx_;
};

// values[j] = sum_l coeff(l) e^{i l theta_j}; requires support within
// [-M/2, M/2).
GridFunctionPair to_grid(const TrigPolyPair& p);

// inverse DFT of to_grid; M must be a power of two
TrigPolyPair to_coeffs(const GridFunctionPair& g);

// p(theta + delta): coeff(l) *= e^{i l delta}
TrigPolyPair shift(const TrigPolyPair& p, const BigReal& delta);

// zero out coefficients with componentwise modulus < 10^{-filter_digits}
TrigPolyPair filter_small(const TrigPolyPair& p, int filter_digits);

enum class Component { first = 1, second = 2, both = 3 };

// sqrt( sum_l |g_l|^2 e^{2|l|rho} (1+|l|)^r ) over the requested
// component(s)
BigReal norm_rho_r(const TrigPolyPair& p, const BigReal& rho, long r, Component comp);

// max_j euclidean norm of the (complex) R^2 value on the grid
BigReal sup_norm_grid(const TrigPolyPair& p);
BigReal sup_norm_grid(const GridFunctionPair& g);

// mean value = coeff(0)
std::array<BigComplex, 2> average(const TrigPolyPair& p);

// point evaluation by mode summation
std::array<BigComplex, 2> eval_at(const TrigPolyPair& p, const BigReal& theta);

// Scalar complex FFT helpers (shared with the nonlinearity state).
// Forward transform computes coeff[l] = (1/M) sum_j v[j] e^{-i l theta_j};
// inverse computes v[j] = sum_l coeff[l] e^{+i l theta_j}. In both
// directions index k in [M/2, M) stands for mode k - M.
void fft_forward(std::vector<BigComplex>& v, const PrecisionContext& ctx);
void fft_inverse(std::vector<BigComplex>& v, const PrecisionContext& ctx);

} // namespace lind

#endif
