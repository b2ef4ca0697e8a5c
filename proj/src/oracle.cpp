#include "qgeo/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace qgeo::oracle {

namespace {

using std::numbers::pi;

std::array<cplx, 2> bloch_ket(double theta, double phi) {
    return {cplx(std::cos(0.5 * theta), 0.0),
            std::polar(std::sin(0.5 * theta), phi)};
}

double overlap_abs(const PureState& psi, const std::array<cplx, 2>& a,
                   const std::array<cplx, 2>& b) {
    const cplx w0 = std::conj(b[0]) * psi.amplitude(0) + std::conj(b[1]) * psi.amplitude(1);
    const cplx w1 = std::conj(b[0]) * psi.amplitude(2) + std::conj(b[1]) * psi.amplitude(3);
    return std::abs(std::conj(a[0]) * w0 + std::conj(a[1]) * w1);
}

double simpson(double a, double b, long n) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / static_cast<double>(n);
    auto f = [](double r) { return 1.0 / std::sqrt(1.0 - r * r); };
    double sum = f(a) + f(b);
    for (long i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) fail(errc::dim_mismatch, "states must have equal dimension");
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    ComplexMatrix inner = root * sigma.matrix() * root;
    // Re-Hermitize before the eigensolve; the triple product carries round-off.
    inner = 0.5 * (inner + inner.adjoint());
    const std::vector<double> mu = hermitian_eigenvalues(inner);
    // Same zero convention as the closed forms: eigenvalues below the
    // solver's relative resolution are exact zeros, not sqrt-able noise.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * mu.back();
    double sum_sqrt = 0.0;
    for (double lam : mu)
        if (lam > floor) sum_sqrt += std::sqrt(lam);
    return sum_sqrt * sum_sqrt;
}

ProductSearchResult closest_product_state_search(const PureState& psi, int grid) {
    if (psi.n_qubits() != 2) fail(errc::wrong_qubit_count, "search is defined for 2-qubit states");
    if (grid < 50) fail(errc::bad_range, "need at least 50 grid points per angle");

    // theta in [0, pi] inclusive, phi in [0, 2pi) exclusive.
    std::vector<double> thetas(static_cast<std::size_t>(grid));
    std::vector<double> phis(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        thetas[static_cast<std::size_t>(i)] = pi * static_cast<double>(i) / (grid - 1);
        phis[static_cast<std::size_t>(i)] = 2.0 * pi * static_cast<double>(i) / grid;
    }
    std::vector<std::array<cplx, 2>> kets(static_cast<std::size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            kets[static_cast<std::size_t>(i) * grid + j] = bloch_ket(thetas[static_cast<std::size_t>(i)], phis[static_cast<std::size_t>(j)]);

    double best = -1.0;
    std::array<double, 4> angles{};  // theta_a, phi_a, theta_b, phi_b
    for (int ib = 0; ib < grid; ++ib)
        for (int jb = 0; jb < grid; ++jb) {
            const std::array<cplx, 2>& b = kets[static_cast<std::size_t>(ib) * grid + jb];
            // <ab|psi> = conj(a0) w0 + conj(a1) w1 with w depending on b only.
            const cplx w0 = std::conj(b[0]) * psi.amplitude(0) + std::conj(b[1]) * psi.amplitude(1);
            const cplx w1 = std::conj(b[0]) * psi.amplitude(2) + std::conj(b[1]) * psi.amplitude(3);
            for (int ia = 0; ia < grid; ++ia)
                for (int ja = 0; ja < grid; ++ja) {
                    const std::array<cplx, 2>& a = kets[static_cast<std::size_t>(ia) * grid + ja];
                    const double v = std::norm(std::conj(a[0]) * w0 + std::conj(a[1]) * w1);
                    if (v > best) {
                        best = v;
                        angles = {thetas[static_cast<std::size_t>(ia)], phis[static_cast<std::size_t>(ja)],
                                  thetas[static_cast<std::size_t>(ib)], phis[static_cast<std::size_t>(jb)]};
                    }
                }
        }
    best = std::sqrt(best);

    // Local refinement: try +-step on each angle in turn, halving the step
    // when a full pass yields no improvement.
    auto eval = [&psi](const std::array<double, 4>& ang) {
        return overlap_abs(psi, bloch_ket(ang[0], ang[1]), bloch_ket(ang[2], ang[3]));
    };
    double step = pi / (grid - 1);
    while (step > 1e-10) {
        bool improved = false;
        for (int k = 0; k < 4; ++k) {
            for (double delta : {step, -step}) {
                std::array<double, 4> trial = angles;
                trial[static_cast<std::size_t>(k)] += delta;
                const double v = eval(trial);
                if (v > best) {
                    best = v;
                    angles = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    const std::array<cplx, 2> a = bloch_ket(angles[0], angles[1]);
    const std::array<cplx, 2> b = bloch_ket(angles[2], angles[3]);
    ProductSearchResult out{
        PureState::normalized(2, {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]}),
        best, std::sqrt(2.0 * std::max(0.0, 1.0 - best))};
    return out;
}

double quadrature_reference(double r_from, double r_to, long subdivisions) {
    // Uniform steps cannot resolve the integrable singularity at r = 1; the
    // reference path validates interior segments only.
    if (!(r_from >= 0.0 && r_from <= r_to && r_to < 1.0))
        fail(errc::bad_range, "need 0 <= r_from <= r_to < 1");
    if (subdivisions < 2) fail(errc::bad_range, "need at least 2 subdivisions");
    if (r_from == r_to) return 0.0;
    return simpson(r_from, r_to, subdivisions);
}

}  // namespace qgeo::oracle
