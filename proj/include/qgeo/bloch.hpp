#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgeo/quantum_state.hpp"

namespace qgeo {

// Traceless Hermitian generators normalized to Tr(s_i s_j) = d * delta_ij.
// Ordering: symmetric pairs lexicographic, then antisymmetric pairs, then
// diagonal. For d = 2 this is exactly (pauli_x, pauli_y, pauli_z).
struct GeneratorBasis {
    int dim = 0;
    std::vector<ComplexMatrix> generators;  // d^2 - 1 of them
};

// Supported dims: 2, 4, 8, 16, 32. The basis for each dim is built once and
// shared read-only.
const GeneratorBasis& generator_basis(int dim);

// x_i = Tr(rho s_i) / sqrt(d-1), r = |x|. With this scaling
// rho = I/d + (sqrt(d-1)/d) sum_i x_i s_i reconstructs rho exactly, and the
// pure-state surface sits at r = 1.
struct CoherenceVector {
    int dim = 0;
    std::vector<double> x;
    double r = 0.0;
};

CoherenceVector coherence_vector(const DensityOperator& rho);

// Expansion of a coherence vector back into operator form. Points with
// r = 1 need not be states for d > 2, so the result carries a PSD flag
// instead of being rejected.
struct BlochOperator {
    ComplexMatrix matrix;
    double min_eigenvalue = 0.0;
    bool positive_semidefinite = false;
};

BlochOperator state_from_coherence_vector(const CoherenceVector& v);

// Hyperspherical coordinates for a point in the generator-coefficient ball:
// polar angles in [0, pi] (outermost first, cos(polar[0]) = x_last / r) and
// one azimuth in [0, 2pi). All angles are 0 at the origin by convention.
struct HypersphericalPoint {
    double r = 0.0;
    std::vector<double> polar;
    double azimuth = 0.0;
};

HypersphericalPoint cartesian_to_hyperspherical(const std::vector<double>& x);
std::vector<double> hyperspherical_to_cartesian(const HypersphericalPoint& p);

// Monotone-metric configuration. The scalar map f must satisfy f(1) = 1
// (checked); operator monotonicity and self-inversality are the caller's
// responsibility. f(t) = (1+t)/2 gives the Bures metric.
class MetricConfig {
public:
    MetricConfig(std::string name, std::function<double(double)> mc_function,
                 bool include_quarter_prefactor = false, double epsilon_boundary = 1e-9);

    static MetricConfig bures(bool include_quarter_prefactor = false,
                              double epsilon_boundary = 1e-9);
    // f == 1 test stub; only the angular metric entries change.
    static MetricConfig constant_one();

    const std::string& name() const { return name_; }
    double f(double t) const { return f_(t); }
    bool include_quarter_prefactor() const { return quarter_; }
    double epsilon_boundary() const { return eps_; }

private:
    std::string name_;
    std::function<double(double)> f_;
    bool quarter_;
    double eps_;
};

// Diagonal of the metric at p, ordered (r, polar..., azimuth):
//   g_rr = 1/(1-r^2),  angular base = r^2 / ((1+r) f(t)),  t = (1-r)/(1+r),
// each angular entry picking up the usual product of sin^2 factors, all
// times 1/4 when the quarter prefactor is enabled. Throws
// errc::boundary_point at r >= 1 where g_rr diverges.
std::vector<double> metric_tensor_at(const HypersphericalPoint& p, const MetricConfig& cfg);

// Length of the radial curve from r_from to r_to, integrating sqrt(g_rr)
// with adaptive quadrature. For r_to = 1 the integral is taken to 1 - eps
// over the ladder eps_boundary * {1000, 100, 10, 1} and extrapolated to
// eps -> 0 in sqrt(eps) (the integrand's endpoint error scale).
double geodesic_length_radial(double r_from, double r_to,
                              const MetricConfig& cfg = MetricConfig::bures(),
                              double abs_tol = 1e-10);

}  // namespace qgeo
