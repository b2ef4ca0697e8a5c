#pragma once

#include "qgeo/bloch.hpp"
#include "qgeo/quantum_state.hpp"

namespace qgeo {

// Two-qubit Riemannian entanglement measure: normalized geodesic distance
// from the reduced state to the radially outward surface point.
struct RemResult {
    double r = 0.0;          // radial coordinate of the qubit-0 reduction
    double length_ap = 0.0;  // geodesic distance to the surface
    double value = 0.0;      // length_ap / N, N = length from center to surface
};

RemResult rem_two_qubit(const PureState& psi, const MetricConfig& cfg = MetricConfig::bures(),
                        double abs_tol = 1e-10);

// Closed-form Bures distance D_B(I/D, rho) = sqrt(2 (1 - sum_i sqrt(lambda_i) / sqrt(D))).
double bures_distance_to_max_mixed(const DensityOperator& rho);

// Maximum of the unnormalized bipartite complement for block sizes (s, l):
// attained when the smaller block is maximally mixed. Reduces to
// 1 - sqrt(2 - sqrt(2)) for (1, 2).
double bipartition_normalization(int small, int large);

// Per-bipartition measure via the complement shortcut: distance from the
// larger block's reduction to the surface, measured as
// D_B(I/D, pure) - D_B(I/D, rho_large), normalized to [0, 1].
struct BremResult {
    Bipartition bipartition;
    std::vector<double> eigenvalues;  // of the larger-block reduction, ascending
    double unnormalized = 0.0;
    double normalization = 0.0;
    double value = 0.0;
};

BremResult brem(const PureState& psi, const Bipartition& p);

// Geometric mean of brem over all canonical bipartitions. Zero exactly when
// some bipartition factorizes.
struct GbrResult {
    std::vector<BremResult> per_bipartition;  // canonical order
    double value = 0.0;
};

GbrResult gbr(const PureState& psi);

}  // namespace qgeo
