#pragma once

#include <complex>
#include <vector>

#include "qgeo/error.hpp"

namespace qgeo {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 64;
inline constexpr double kHermitianTol = 1e-12;

// Eigenvalues in [-1e-10, 0) are round-off from partial traces; treat them
// as exact zeros before sqrt/log.
inline constexpr double kEigenvalueClampTol = 1e-10;

inline double clamped_nonneg(double lambda) {
    if (lambda < 0.0 && lambda >= -kEigenvalueClampTol) return 0.0;
    return lambda;
}

// Dense square complex matrix, row-major. Everything downstream is at most
// 64x64, so plain loops over contiguous storage are all we need.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<cplx> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;
    // max |a_ij - conj(a_ji)|
    double hermiticity_error() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_ = 0;
    std::vector<cplx> data_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, same order as eigenvalues
};

// Cyclic Jacobi on the Hermitian matrix via complex 2x2 rotations. Fixed
// sweep order and no parallel reduction, so results are bit-stable per
// platform. Throws errc::non_hermitian_input / errc::no_convergence.
Spectrum hermitian_eigensystem(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues below -1e-10 throw
// errc::negative_eigenvalue; tiny negatives are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Tensor product; throws errc::dimension_overflow above kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qgeo
