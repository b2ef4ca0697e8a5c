#include "qgeo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgeo {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) fail(errc::unsupported_dim, "matrix dimension must be positive");
    data_.assign(static_cast<std::size_t>(dim) * dim, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
    if (dim <= 0) fail(errc::unsupported_dim, "matrix dimension must be positive");
    if (data_.size() != static_cast<std::size_t>(dim) * dim)
        fail(errc::unsupported_dim, "entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) fail(errc::dim_mismatch, "dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

double ComplexMatrix::hermiticity_error() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) fail(errc::dim_mismatch, "dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) fail(errc::dim_mismatch, "dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (cplx& v : data_) v *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) fail(errc::dim_mismatch, "dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

namespace {

double off_diagonal_sq(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return s;
}

}  // namespace

Spectrum hermitian_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    if (n > kMaxDim) fail(errc::dimension_overflow, "eigensolver supports dim <= 64");
    if (m.hermiticity_error() > kHermitianTol)
        fail(errc::non_hermitian_input, "matrix is not Hermitian within 1e-12");

    // Work on the exactly Hermitian part; the input may carry <=1e-12 noise.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = cplx(std::real(m(i, i)), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    ComplexMatrix vec = ComplexMatrix::identity(n);
    const double scale = std::max(a.max_abs(), 1e-300);
    constexpr int kMaxSweeps = 100;
    bool converged = (n == 1);

    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_sq(a) == 0.0) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double apq_abs = std::abs(apq);
                if (apq_abs == 0.0) continue;

                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));

                // Annihilate a_pq with the unitary [[c, -conj(s)], [s, c]],
                // s = t*c*conj(a_pq)/|a_pq|, where t is the small root of
                // t^2 - 2*theta*t - 1 = 0, theta = (a_qq - a_pp)/(2|a_pq|).
                const double theta = (aqq - app) / (2.0 * apq_abs);
                const double sgn = (theta >= 0.0) ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const cplx phase = std::conj(apq) / apq_abs;
                const cplx s = t * c * phase;
                const cplx s_conj = std::conj(s);

                a(p, p) = app + t * apq_abs;
                a(q, q) = aqq - t * apq_abs;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + s * akq;
                    a(k, q) = -s_conj * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = vec(k, p);
                    const cplx vkq = vec(k, q);
                    vec(k, p) = c * vkp + s * vkq;
                    vec(k, q) = -s_conj * vkp + c * vkq;
                }
            }
        }
    }

    if (!converged) {
        const double off = std::sqrt(off_diagonal_sq(a));
        if (off > 1e-12 * scale) fail(errc::no_convergence, "Jacobi sweep cap (100) exceeded");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return std::real(a(i, i)) < std::real(a(j, j)); });

    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = std::real(a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]));
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = vec(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).eigenvalues;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    Spectrum spec = hermitian_eigensystem(m);
    const int n = m.dim();
    std::vector<double> roots(spec.eigenvalues.size());
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        double lam = spec.eigenvalues[i];
        if (lam < -kEigenvalueClampTol)
            fail(errc::negative_eigenvalue, "matrix has an eigenvalue below -1e-10");
        roots[i] = std::sqrt(clamped_nonneg(lam));
    }

    // R = V sqrt(diag) V^dagger, re-Hermitized entry by entry.
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            cplx v(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                v += spec.eigenvectors(i, k) * roots[static_cast<std::size_t>(k)] *
                     std::conj(spec.eigenvectors(j, k));
            if (i == j) v = cplx(std::real(v), 0.0);
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    if (na * nb > kMaxDim) fail(errc::dimension_overflow, "tensor product exceeds dim 64");
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

}  // namespace qgeo
