#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgeo/quantum_state.hpp"

namespace qgeo {

// S = -sum lambda log2(lambda), so a Bell-state reduction gives exactly 1.
double von_neumann_entropy(const DensityOperator& rho);

// C = sqrt(2 (1 - Tr rho^2)) of either block's reduction; the factor 2 keeps
// C(Bell) = 1.
double bipartite_concurrence(const PureState& psi, const Bipartition& p);

// 1 - max over bipartitions of the largest squared Schmidt coefficient.
double ggm(const PureState& psi);

// min over bipartitions of the bipartite concurrence.
double gmc(const PureState& psi);

// Heron-type area of the one-vs-rest concurrence triangle, 3 qubits only:
// F = ((16/3) q (q - C0^2)(q - C1^2)(q - C2^2))^(1/4), q the half-sum of the
// squared concurrences; a negative product clamps to 0 before the root.
double concurrence_fill(const PureState& psi);

// Geometric mean of the bipartite concurrence over canonical bipartitions.
double gbc(const PureState& psi);

// Named measure values for one state, in the fixed order
// rem, s, c, ggm, gmc, fill, gbc, gbr (only entries defined for the state's
// qubit count are present).
struct MeasureReport {
    std::string state_label;
    std::vector<std::pair<std::string, double>> values;
};

MeasureReport compute_report(const PureState& psi, const std::string& label);

}  // namespace qgeo
