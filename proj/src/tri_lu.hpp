#ifndef RCS_TRI_LU_HPP
#define RCS_TRI_LU_HPP

#include "rcs/types.hpp"

namespace rcs {

/// LU factorization of a complex tridiagonal matrix with partial pivoting
/// (gttrf-style: one fill-in superdiagonal). Used to apply S^{-1} without
/// forming it.
class TridiagonalLU {
public:
    explicit TridiagonalLU(const ComplexTridiagonal& t);

    int size() const { return n_; }

    /// Solves A x = b in place.
    void solve_in_place(Eigen::VectorXcd& b) const;

    /// Solves A X = B column by column, overwriting B.
    void solve_in_place(ComplexDense& B) const;

    /// Hager-style estimate of the 1-norm condition number. The factored
    /// matrix is symmetric, so transpose solves reuse solve_in_place.
    double condition_estimate(const ComplexTridiagonal& t) const;

private:
    int n_;
    std::vector<Complex> dl_, d_, du_, du2_;
    std::vector<int> piv_;
};

} // namespace rcs

#endif
