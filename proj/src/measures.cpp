#include "qgeo/measures.hpp"

#include <cmath>
#include <limits>

namespace qgeo {

namespace {

// Two nominally identical complement terms subtract to at most this much
// round-off; anything smaller is an exact zero (product across the cut).
constexpr double kDistanceFloor = 1e-12;

// Pure-state reductions onto the larger block are rank-deficient (Schmidt
// rank <= 2^s), so the spectrum carries true zeros that the eigensolver
// reports as O(eps) junk. sqrt would turn 1e-16 of that into 1e-8 of noise;
// eigenvalues below the solver's relative resolution count as exact zeros.
double sum_sqrt_spectrum(const std::vector<double>& ascending) {
    if (ascending.empty()) return 0.0;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * ascending.back();
    double s = 0.0;
    for (double lam : ascending)
        if (lam > floor) s += std::sqrt(lam);
    return s;
}

double complement_distance(double sum_sqrt_lambda, int block_qubits) {
    const double root_d = std::pow(2.0, 0.5 * block_qubits);
    const double inner = 2.0 * std::max(0.0, 1.0 - sum_sqrt_lambda / root_d);
    return std::sqrt(inner);
}

}  // namespace

RemResult rem_two_qubit(const PureState& psi, const MetricConfig& cfg, double abs_tol) {
    if (psi.n_qubits() != 2) fail(errc::wrong_qubit_count, "rem is defined for 2-qubit states");
    const DensityOperator rho_a = reduced_density(psi, {0});
    RemResult out;
    out.r = std::min(coherence_vector(rho_a).r, 1.0);
    out.length_ap = geodesic_length_radial(out.r, 1.0, cfg, abs_tol);
    const double norm = geodesic_length_radial(0.0, 1.0, cfg, abs_tol);
    out.value = std::max(out.length_ap / norm, 0.0);
    return out;
}

double bures_distance_to_max_mixed(const DensityOperator& rho) {
    return complement_distance(sum_sqrt_spectrum(rho.eigenvalues()), rho.n_qubits());
}

double bipartition_normalization(int small, int large) {
    if (small < 1 || large < small || small + large > kMaxQubits)
        fail(errc::bad_sizes, "need 1 <= small <= large with small + large <= 6");
    // Smaller block maximally mixed: 2^s eigenvalues of 2^-s each, so
    // sum sqrt(lambda) = 2^(s/2).
    const double pure_term = complement_distance(1.0, large);
    const double mixed_term = complement_distance(std::pow(2.0, 0.5 * small), large);
    return pure_term - mixed_term;
}

BremResult brem(const PureState& psi, const Bipartition& p) {
    if (p.n_qubits != psi.n_qubits())
        fail(errc::dim_mismatch, "bipartition does not match the state's qubit count");
    BremResult out;
    out.bipartition = p;
    const DensityOperator rho_large = reduced_for_bipartition(psi, p);
    out.eigenvalues = rho_large.eigenvalues();
    const double sum_sqrt = sum_sqrt_spectrum(out.eigenvalues);

    const int l = static_cast<int>(p.block_large.size());
    const int s = static_cast<int>(p.block_small.size());
    double unnorm = complement_distance(1.0, l) - complement_distance(sum_sqrt, l);
    if (unnorm < kDistanceFloor) unnorm = 0.0;

    out.unnormalized = unnorm;
    out.normalization = bipartition_normalization(s, l);
    out.value = unnorm / out.normalization;
    return out;
}

GbrResult gbr(const PureState& psi) {
    GbrResult out;
    const std::vector<Bipartition> parts = enumerate_bipartitions(psi.n_qubits());
    out.per_bipartition.reserve(parts.size());
    double log_sum = 0.0;
    bool any_zero = false;
    for (const Bipartition& p : parts) {
        BremResult b = brem(psi, p);
        if (b.value <= 0.0)
            any_zero = true;
        else
            log_sum += std::log(b.value);
        out.per_bipartition.push_back(std::move(b));
    }
    out.value = any_zero ? 0.0 : std::exp(log_sum / static_cast<double>(parts.size()));
    return out;
}

}  // namespace qgeo
