#include "tri_lu.hpp"

#include <cmath>

namespace rcs {

TridiagonalLU::TridiagonalLU(const ComplexTridiagonal& t) : n_(t.size()) {
    if (n_ < 1) throw InvalidBasis("empty matrix");
    d_ = t.diag;
    dl_.assign(t.offdiag.begin(), t.offdiag.end());
    du_.assign(t.offdiag.begin(), t.offdiag.end());
    du2_.assign(n_ > 2 ? n_ - 2 : 0, Complex(0.0));
    piv_.resize(n_);
    for (int i = 0; i < n_; ++i) piv_[i] = i;

    for (int i = 0; i + 1 < n_; ++i) {
        if (std::abs(d_[i]) >= std::abs(dl_[i])) {
            if (d_[i] == Complex(0.0))
                throw OverlapSingular("tridiagonal LU hit a zero pivot");
            const Complex fact = dl_[i] / d_[i];
            dl_[i] = fact;
            d_[i + 1] -= fact * du_[i];
            if (i + 2 < n_) du2_[i] = Complex(0.0);
        } else {
            const Complex fact = d_[i] / dl_[i];
            d_[i] = dl_[i];
            dl_[i] = fact;
            const Complex tmp = du_[i];
            du_[i] = d_[i + 1];
            d_[i + 1] = tmp - fact * d_[i + 1];
            if (i + 2 < n_) {
                du2_[i] = du_[i + 1];
                du_[i + 1] = -fact * du_[i + 1];
            }
            piv_[i] = i + 1;
        }
    }
    if (d_[n_ - 1] == Complex(0.0))
        throw OverlapSingular("tridiagonal LU hit a zero pivot");
}

void TridiagonalLU::solve_in_place(Eigen::VectorXcd& b) const {
    for (int i = 0; i + 1 < n_; ++i) {
        if (piv_[i] == i) {
            b[i + 1] -= dl_[i] * b[i];
        } else {
            const Complex tmp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tmp - dl_[i] * b[i];
        }
    }
    b[n_ - 1] /= d_[n_ - 1];
    if (n_ > 1) b[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * b[n_ - 1]) / d_[n_ - 2];
    for (int i = n_ - 3; i >= 0; --i)
        b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
}

void TridiagonalLU::solve_in_place(ComplexDense& B) const {
    Eigen::VectorXcd col(n_);
    for (int j = 0; j < B.cols(); ++j) {
        col = B.col(j);
        solve_in_place(col);
        B.col(j) = col;
    }
}

double TridiagonalLU::condition_estimate(const ComplexTridiagonal& t) const {
    // ||A||_1 directly
    double norm1 = 0.0;
    for (int j = 0; j < n_; ++j) {
        double s = std::abs(t.diag[j]);
        if (j > 0) s += std::abs(t.offdiag[j - 1]);
        if (j + 1 < n_) s += std::abs(t.offdiag[j]);
        norm1 = std::max(norm1, s);
    }
    // Hager estimate of ||A^{-1}||_1; A symmetric, so A^T solves are A solves
    Eigen::VectorXcd x = Eigen::VectorXcd::Constant(n_, Complex(1.0 / n_));
    double est = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        Eigen::VectorXcd y = x;
        solve_in_place(y);
        double ynorm = y.lpNorm<1>();
        Eigen::VectorXcd xi(n_);
        for (int i = 0; i < n_; ++i) {
            double a = std::abs(y[i]);
            xi[i] = a > 0.0 ? y[i] / a : Complex(1.0);
        }
        solve_in_place(xi);
        int jmax = 0;
        double zmax = 0.0;
        for (int i = 0; i < n_; ++i)
            if (std::abs(xi[i]) > zmax) { zmax = std::abs(xi[i]); jmax = i; }
        if (ynorm <= est) break;
        est = ynorm;
        x.setZero();
        x[jmax] = 1.0;
    }
    return norm1 * est;
}

} // namespace rcs
