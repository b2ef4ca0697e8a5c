#include "qgeo/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "qgeo/measures.hpp"

namespace qgeo {

double von_neumann_entropy(const DensityOperator& rho) {
    double s = 0.0;
    for (double lam : rho.eigenvalues())
        if (lam > 0.0) s -= lam * std::log2(lam);
    return s;
}

double bipartite_concurrence(const PureState& psi, const Bipartition& p) {
    if (p.n_qubits != psi.n_qubits())
        fail(errc::dim_mismatch, "bipartition does not match the state's qubit count");
    const double purity = reduced_density(psi, p.block_small).purity();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double ggm(const PureState& psi) {
    double max_lambda = 0.0;
    for (const Bipartition& p : enumerate_bipartitions(psi.n_qubits())) {
        const std::vector<double> lams = reduced_density(psi, p.block_small).eigenvalues();
        max_lambda = std::max(max_lambda, lams.back());
    }
    return 1.0 - max_lambda;
}

double gmc(const PureState& psi) {
    double best = 2.0;
    for (const Bipartition& p : enumerate_bipartitions(psi.n_qubits()))
        best = std::min(best, bipartite_concurrence(psi, p));
    return best;
}

double concurrence_fill(const PureState& psi) {
    if (psi.n_qubits() != 3) fail(errc::wrong_qubit_count, "concurrence fill needs 3 qubits");
    double c_sq[3];
    for (int q = 0; q < 3; ++q) {
        const double purity = reduced_density(psi, {q}).purity();
        c_sq[q] = std::max(0.0, 2.0 * (1.0 - purity));
    }
    const double q_half = 0.5 * (c_sq[0] + c_sq[1] + c_sq[2]);
    const double heron = (16.0 / 3.0) * q_half * (q_half - c_sq[0]) * (q_half - c_sq[1]) *
                         (q_half - c_sq[2]);
    return std::pow(std::max(heron, 0.0), 0.25);
}

double gbc(const PureState& psi) {
    const std::vector<Bipartition> parts = enumerate_bipartitions(psi.n_qubits());
    double log_sum = 0.0;
    for (const Bipartition& p : parts) {
        const double c = bipartite_concurrence(psi, p);
        if (c <= 0.0) return 0.0;
        log_sum += std::log(c);
    }
    return std::exp(log_sum / static_cast<double>(parts.size()));
}

MeasureReport compute_report(const PureState& psi, const std::string& label) {
    MeasureReport report;
    report.state_label = label;
    const int n = psi.n_qubits();
    const Bipartition first = enumerate_bipartitions(n).front();
    if (n == 2) report.values.emplace_back("rem", rem_two_qubit(psi).value);
    report.values.emplace_back("s", von_neumann_entropy(reduced_density(psi, {0})));
    report.values.emplace_back("c", bipartite_concurrence(psi, first));
    report.values.emplace_back("ggm", ggm(psi));
    report.values.emplace_back("gmc", gmc(psi));
    if (n == 3) report.values.emplace_back("fill", concurrence_fill(psi));
    report.values.emplace_back("gbc", gbc(psi));
    report.values.emplace_back("gbr", gbr(psi).value);
    return report;
}

}  // namespace qgeo
