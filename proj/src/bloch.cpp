#include "qgeo/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "qgeo/quadrature.hpp"

namespace qgeo {

namespace {

GeneratorBasis build_basis(int d) {
    GeneratorBasis basis;
    basis.dim = d;
    basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);
    const double scale = std::sqrt(d / 2.0);  // su(d) norm 2 -> trace norm d

    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix s(d);
            s(j, k) = scale;
            s(k, j) = scale;
            basis.generators.push_back(std::move(s));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix s(d);
            s(j, k) = cplx(0.0, -scale);
            s(k, j) = cplx(0.0, scale);
            basis.generators.push_back(std::move(s));
        }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix s(d);
        const double w = scale * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) s(j, j) = w;
        s(l, l) = -w * l;
        basis.generators.push_back(std::move(s));
    }
    return basis;
}

double g_rr(double r, const MetricConfig& cfg) {
    double g = 1.0 / (1.0 - r * r);
    if (cfg.include_quarter_prefactor()) g *= 0.25;
    return g;
}

}  // namespace

const GeneratorBasis& generator_basis(int dim) {
    if (dim != 2 && dim != 4 && dim != 8 && dim != 16 && dim != 32)
        fail(errc::unsupported_dim, "generator basis supports dims 2, 4, 8, 16, 32");
    static std::mutex mutex;
    static std::map<int, GeneratorBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dim);
    if (it == cache.end()) it = cache.emplace(dim, build_basis(dim)).first;
    return it->second;
}

CoherenceVector coherence_vector(const DensityOperator& rho) {
    const int d = rho.dim();
    const GeneratorBasis& basis = generator_basis(d);
    CoherenceVector v;
    v.dim = d;
    v.x.reserve(basis.generators.size());
    const double inv = 1.0 / std::sqrt(d - 1.0);
    for (const ComplexMatrix& s : basis.generators) {
        cplx t(0.0, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) t += rho.matrix()(i, j) * s(j, i);
        v.x.push_back(std::real(t) * inv);
    }
    double rsq = 0.0;
    for (double xi : v.x) rsq += xi * xi;
    v.r = std::sqrt(rsq);
    return v;
}

BlochOperator state_from_coherence_vector(const CoherenceVector& v) {
    const int d = v.dim;
    const GeneratorBasis& basis = generator_basis(d);
    if (v.x.size() != basis.generators.size())
        fail(errc::dim_mismatch, "coherence vector length must be d^2 - 1");
    double rsq = 0.0;
    for (double xi : v.x) rsq += xi * xi;
    if (std::sqrt(rsq) > 1.0 + 1e-9)
        fail(errc::norm_too_large, "coherence vector norm exceeds 1");

    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0 / d;
    const double w = std::sqrt(d - 1.0) / d;
    for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        const double xk = v.x[k];
        if (xk == 0.0) continue;
        const ComplexMatrix& s = basis.generators[k];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) += w * xk * s(i, j);
    }

    BlochOperator out;
    out.min_eigenvalue = hermitian_eigenvalues(m).front();
    out.positive_semidefinite = out.min_eigenvalue >= -kEigenvalueClampTol;
    out.matrix = std::move(m);
    return out;
}

HypersphericalPoint cartesian_to_hyperspherical(const std::vector<double>& x) {
    const std::size_t m = x.size();
    if (m < 3) fail(errc::unsupported_dim, "need at least 3 coordinates");
    HypersphericalPoint p;
    double rsq = 0.0;
    for (double xi : x) rsq += xi * xi;
    p.r = std::sqrt(rsq);
    if (p.r > 1.0 + 1e-9) fail(errc::norm_too_large, "point lies outside the unit ball");
    p.polar.assign(m - 2, 0.0);
    if (p.r <= 1e-15) return p;  // all angles 0 at the origin

    // polar[k] = atan2(|(x_0..x_{m-2-k})|, x_{m-1-k}); keep a running prefix
    // norm and peel one component per angle.
    double prefix = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) prefix += x[i] * x[i];
    for (std::size_t k = 0; k < m - 2; ++k) {
        const std::size_t comp = m - 1 - k;
        p.polar[k] = std::atan2(std::sqrt(std::max(prefix, 0.0)), x[comp]);
        prefix -= x[comp - 1] * x[comp - 1];
    }
    p.azimuth = std::atan2(x[1], x[0]);
    if (p.azimuth < 0.0) p.azimuth += 2.0 * std::numbers::pi;
    if (p.azimuth >= 2.0 * std::numbers::pi) p.azimuth = 0.0;
    return p;
}

std::vector<double> hyperspherical_to_cartesian(const HypersphericalPoint& p) {
    const std::size_t m = p.polar.size() + 2;
    std::vector<double> x(m, 0.0);
    double running = p.r;
    for (std::size_t k = 0; k < p.polar.size(); ++k) {
        x[m - 1 - k] = running * std::cos(p.polar[k]);
        running *= std::sin(p.polar[k]);
    }
    x[1] = running * std::sin(p.azimuth);
    x[0] = running * std::cos(p.azimuth);
    return x;
}

MetricConfig::MetricConfig(std::string name, std::function<double(double)> mc_function,
                           bool include_quarter_prefactor, double epsilon_boundary)
    : name_(std::move(name)),
      f_(std::move(mc_function)),
      quarter_(include_quarter_prefactor),
      eps_(epsilon_boundary) {
    if (!f_) fail(errc::bad_range, "metric config needs a scalar map");
    if (eps_ <= 0.0 || eps_ >= 1e-3) fail(errc::bad_range, "boundary epsilon must lie in (0, 1e-3)");
    if (std::abs(f_(1.0) - 1.0) > 1e-12) fail(errc::bad_range, "mc function must satisfy f(1) = 1");
}

MetricConfig MetricConfig::bures(bool include_quarter_prefactor, double epsilon_boundary) {
    return MetricConfig("bures", [](double t) { return 0.5 * (1.0 + t); },
                        include_quarter_prefactor, epsilon_boundary);
}

MetricConfig MetricConfig::constant_one() {
    return MetricConfig("constant-one", [](double) { return 1.0; });
}

std::vector<double> metric_tensor_at(const HypersphericalPoint& p, const MetricConfig& cfg) {
    const double r = p.r;
    if (r < 0.0) fail(errc::bad_range, "radial coordinate must be nonnegative");
    if (r >= 1.0) fail(errc::boundary_point, "metric diverges at r = 1; use the limiting procedure");

    const std::size_t m = p.polar.size() + 2;
    std::vector<double> g(m, 0.0);
    const double pref = cfg.include_quarter_prefactor() ? 0.25 : 1.0;
    g[0] = pref / (1.0 - r * r);

    const double t = (1.0 - r) / (1.0 + r);
    double angular = pref * r * r / ((1.0 + r) * cfg.f(t));
    for (std::size_t k = 0; k < p.polar.size(); ++k) {
        g[k + 1] = angular;
        const double s = std::sin(p.polar[k]);
        angular *= s * s;
    }
    g[m - 1] = angular;
    return g;
}

double geodesic_length_radial(double r_from, double r_to, const MetricConfig& cfg,
                              double abs_tol) {
    if (!(r_from >= 0.0 && r_from <= r_to && r_to <= 1.0))
        fail(errc::bad_range, "need 0 <= r_from <= r_to <= 1");
    if (r_from == r_to) return 0.0;

    auto integrand = [&cfg](double r) { return std::sqrt(g_rr(r, cfg)); };
    if (r_to < 1.0) return adaptive_gauss_kronrod(integrand, r_from, r_to, abs_tol);

    // Stop at 1 - eps and extrapolate eps -> 0. The tail of the integral
    // scales as sqrt(eps), so extrapolate in h = sqrt(eps); four rungs make
    // the remaining error O(h^5) under the tolerance of criterion checks.
    std::vector<double> hs, ls;
    double eps = cfg.epsilon_boundary() * 1000.0;
    for (int k = 0; k < 4; ++k, eps /= 10.0) {
        hs.push_back(std::sqrt(eps));
        ls.push_back(adaptive_gauss_kronrod(integrand, r_from, 1.0 - eps, abs_tol));
    }
    return std::max(extrapolate_to_zero(std::move(hs), std::move(ls)), 0.0);
}

}  // namespace qgeo
