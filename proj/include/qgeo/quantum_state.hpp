#pragma once

#include <string>
#include <vector>

#include "qgeo/complex_matrix.hpp"

namespace qgeo {

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 6;
inline constexpr double kStateNormTol = 1e-12;

// Basis convention used everywhere: qubit 0 is the leftmost label, i.e. the
// most significant bit of the basis index b = sum_k q_k * 2^(n-1-k).
class PureState {
public:
    PureState(int n_qubits, std::vector<cplx> amplitudes);
    static PureState normalized(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    int dim() const { return 1 << n_qubits_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(int basis_index) const { return amps_[static_cast<std::size_t>(basis_index)]; }

private:
    int n_qubits_;
    std::vector<cplx> amps_;
};

// Validated density operator: unit trace, Hermitian, PSD (within tolerance),
// dimension a power of two up to 64.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix);

    int dim() const { return matrix_.dim(); }
    int n_qubits() const { return n_qubits_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    double purity() const;
    // Ascending; tiny negative round-off already clamped to zero.
    std::vector<double> eigenvalues() const;

private:
    ComplexMatrix matrix_;
    int n_qubits_;
};

struct Bipartition {
    int n_qubits = 0;
    std::vector<int> block_small;  // sorted; ties broken by containing qubit 0
    std::vector<int> block_large;

    // Canonicalizes an arbitrary nonempty proper block of {0..n-1}.
    static Bipartition make(int n_qubits, std::vector<int> block);
    std::string to_string() const;  // "{0}|{1,2}"
};

DensityOperator density_from_pure(const PureState& psi);

// Density-matrix path; keep is the set of qubit labels to retain.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// Amplitude path (index arithmetic, no 2^n x 2^n intermediate).
DensityOperator reduced_density(const PureState& psi, const std::vector<int>& keep);

// All m = 2^(n-1) - 1 canonical bipartitions, ordered lexicographically by
// block_small.
std::vector<Bipartition> enumerate_bipartitions(int n);

// Reduction kept on block_large (for equal block sizes this keeps the
// canonical block_small complement).
DensityOperator reduced_for_bipartition(const PureState& psi, const Bipartition& p);

// One 2x2 gate per qubit, applied to the matching qubit label.
PureState apply_local_unitaries(const PureState& psi, const std::vector<ComplexMatrix>& gates);

// perm[k] is the new label of qubit k.
PureState permute_qubits(const PureState& psi, const std::vector<int>& perm);

}  // namespace qgeo
