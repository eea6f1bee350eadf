#ifndef RCS_TYPES_HPP
#define RCS_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rcs {

using Complex = std::complex<double>;

/// N x N complex matrix, row-major storage.
using ComplexDense =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Symmetric tridiagonal matrix with real entries; offdiag[n] couples n and n+1.
struct RealSymTridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    int size() const { return static_cast<int>(diag.size()); }
};

/// Complex symmetric tridiagonal matrix (not Hermitian).
struct ComplexTridiagonal {
    std::vector<Complex> diag;
    std::vector<Complex> offdiag;

    int size() const { return static_cast<int>(diag.size()); }

    ComplexDense to_dense() const {
        int n = size();
        ComplexDense m = ComplexDense::Zero(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = diag[i];
        for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = offdiag[i];
        return m;
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CouplingTooStrong : Error { using Error::Error; };
struct InvalidBasis : Error { using Error::Error; };
struct PotentialSingular : Error { using Error::Error; };
struct OverlapSingular : Error { using Error::Error; };
struct EigFailure : Error { using Error::Error; };
struct IndexOverflow : Error { using Error::Error; };
struct NoRoot : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace rcs

#endif
