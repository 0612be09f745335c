#ifndef LIND_NUMERICS_HPP
#define LIND_NUMERICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lind/precision.hpp"

namespace lind {

enum class FrequencyKind { golden, sqrt2_inverse, plastic_inverse, tribonacci_inverse, custom };

struct FrequencySpec {
    FrequencyKind kind = FrequencyKind::golden;
    std::optional<std::string> custom_value;

    static FrequencySpec parse(const std::string& text);
    std::string name() const;
};

// Rotation number at full context precision. Algebraic roots are found
// by Newton iteration seeded in [1, 2]; the result is checked against
// |p(1/omega)| <= 10^{-(digits-5)}.
BigReal eval_frequency(const FrequencySpec& spec, const PrecisionContext& ctx);

// Dense square matrix, row-major. Minimal: exactly what LU needs.
template <typename Scalar>
struct DenseMatrix {
    int n = 0;
    std::vector<Scalar> a; // n*n, row-major

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// LU with partial pivoting. Throws SingularSystemError (with the failing
// column) when a pivot falls below 10^{-(digits-10)} relative to the
// largest matrix entry.
std::vector<BigReal> solve_dense_linear(DenseMatrix<BigReal> A, std::vector<BigReal> b,
                                        const PrecisionContext& ctx);
std::vector<BigComplex> solve_dense_linear(DenseMatrix<BigComplex> A, std::vector<BigComplex> b,
                                           const PrecisionContext& ctx);

class RootConvergenceError : public NumericalError {
public:
    RootConvergenceError(const std::string& msg, std::vector<BigComplex> best)
        : NumericalError(msg), best_iterates(std::move(best)) {}
    std::vector<BigComplex> best_iterates;
};

// All roots (with multiplicity) of sum_i coeffs[i] z^i by the
// Aberth-Ehrlich simultaneous iteration. Trailing coefficients below
// tol*max|c| are stripped first. Each returned root z satisfies
// |p(z)| <= tol * sum_i |c_i||z|^i.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, const BigReal& tol,
                                   int max_iterations = 200);

// p(z) by Horner.
BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z);

} // namespace lind

#endif
