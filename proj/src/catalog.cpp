#include "qgeo/catalog.hpp"

#include <cmath>

namespace qgeo::catalog {

namespace {

std::vector<cplx> zeros(int n) { return std::vector<cplx>(static_cast<std::size_t>(1) << n); }

}  // namespace

PureState ghz(int n) {
    if (n < kMinQubits || n > kMaxQubits) fail(errc::unsupported_n, "ghz supports 2..6 qubits");
    std::vector<cplx> a = zeros(n);
    a.front() = 1.0;
    a.back() = 1.0;
    return PureState::normalized(n, std::move(a));
}

PureState w(int n) {
    if (n < kMinQubits || n > kMaxQubits) fail(errc::unsupported_n, "w supports 2..6 qubits");
    std::vector<cplx> a = zeros(n);
    for (int q = 0; q < n; ++q) a[static_cast<std::size_t>(1) << q] = 1.0;
    return PureState::normalized(n, std::move(a));
}

PureState bell() {
    return PureState::normalized(2, {1.0, 0.0, 0.0, 1.0});
}

PureState psi1(double theta) {
    const double c = std::cos(theta) / std::sqrt(3.0);
    const double s = std::sin(theta);
    const double rt2 = std::sqrt(2.0);
    // |00>, |01>, |10>, |11>
    std::vector<cplx> a = {c, c / rt2 + s / rt2, c / rt2 - s / rt2, c};
    return PureState::normalized(2, std::move(a));
}

PureState psi2(double theta) {
    const double c = std::cos(theta) / std::sqrt(2.0);
    const double s = std::sin(theta) / 2.0;  // |++> has four amplitudes 1/2
    std::vector<cplx> a = {c + s, s, s, -c + s};
    return PureState::normalized(2, std::move(a));
}

PureState chi1(double theta) {
    std::vector<cplx> a = zeros(3);
    a[0] = std::cos(theta / 2.0);
    a[7] = std::sin(theta / 2.0);
    return PureState::normalized(3, std::move(a));
}

PureState chi2(double theta) {
    std::vector<cplx> a = zeros(3);
    a[0] = std::sin(theta);
    a[6] = std::cos(theta);
    a[7] = 1.0;
    return PureState::normalized(3, std::move(a));
}

PureState chi3(double theta) {
    std::vector<cplx> a = zeros(3);
    a[1] = std::cos(theta);
    a[2] = std::sin(theta) / std::sqrt(2.0);
    a[4] = std::sin(theta) / std::sqrt(2.0);
    return PureState::normalized(3, std::move(a));
}

GsdCoefficients::GsdCoefficients(double l0, double l1, double l2, double l3, double l4)
    : lambda0(l0), lambda1(l1), lambda2(l2), lambda3(l3), lambda4(l4) {
    for (double l : {l0, l1, l2, l3, l4})
        if (l < 0.0) fail(errc::bad_range, "gsd coefficients must be nonnegative");
    const double ss = l0 * l0 + l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4;
    if (std::abs(ss - 1.0) > 1e-12)
        fail(errc::not_normalized, "gsd coefficients must have unit sum of squares");
}

PureState from_gsd(const GsdCoefficients& c) {
    std::vector<cplx> a = zeros(3);
    a[0] = c.lambda0;
    a[4] = c.lambda1;
    a[5] = c.lambda2;
    a[6] = c.lambda3;
    a[7] = c.lambda4;
    return PureState::normalized(3, std::move(a));
}

ClassLabel classify(const GsdCoefficients& c) {
    constexpr double tol = 1e-9;
    if (c.lambda0 <= tol || c.lambda4 <= tol)
        fail(errc::bad_range, "classification needs nonzero lambda0 and lambda4");
    int zeros_count = 0;
    for (double l : {c.lambda1, c.lambda2, c.lambda3})
        if (l <= tol) ++zeros_count;
    switch (zeros_count) {
        case 3: return ClassLabel::class1;
        case 2: return ClassLabel::class2;
        case 1: return ClassLabel::class3;
        default: return ClassLabel::class4;
    }
}

}  // namespace qgeo::catalog
