#include "qgeo/quantum_state.hpp"

#include <algorithm>
#include <cmath>

namespace qgeo {

namespace {

double norm_sq(const std::vector<cplx>& amps) {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
}

void check_qubit_count(int n) {
    if (n < kMinQubits || n > kMaxQubits)
        fail(errc::unsupported_n, "supported qubit counts are 2..6");
}

void check_block(int n, const std::vector<int>& block) {
    if (block.empty() || static_cast<int>(block.size()) >= n)
        fail(errc::bad_subset, "block must be a nonempty proper subset of the qubits");
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] < 0 || block[i] >= n) fail(errc::bad_subset, "qubit label out of range");
        if (i > 0 && block[i] <= block[i - 1]) fail(errc::bad_subset, "labels must be sorted and unique");
    }
}

// Spreads the bits of a compact sub-index onto the full-register positions
// given by sorted qubit labels (qubit 0 = MSB of the full index).
int scatter_index(int sub, const std::vector<int>& labels, int n) {
    const int m = static_cast<int>(labels.size());
    int full = 0;
    for (int j = 0; j < m; ++j) {
        const int bit = (sub >> (m - 1 - j)) & 1;
        full |= bit << (n - 1 - labels[static_cast<std::size_t>(j)]);
    }
    return full;
}

std::vector<int> complement_of(int n, const std::vector<int>& block) {
    std::vector<int> rest;
    std::size_t pos = 0;
    for (int q = 0; q < n; ++q) {
        if (pos < block.size() && block[pos] == q) {
            ++pos;
        } else {
            rest.push_back(q);
        }
    }
    return rest;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != static_cast<std::size_t>(1) << n_qubits_)
        fail(errc::unsupported_n, "amplitude count must be 2^n");
    if (std::abs(norm_sq(amps_) - 1.0) > kStateNormTol)
        fail(errc::not_normalized, "state norm deviates from 1 by more than 1e-12");
}

PureState PureState::normalized(int n_qubits, std::vector<cplx> amplitudes) {
    const double ns = norm_sq(amplitudes);
    if (ns <= 0.0) fail(errc::not_normalized, "cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(ns);
    for (cplx& a : amplitudes) a *= inv;
    return PureState(n_qubits, std::move(amplitudes));
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    const int d = matrix_.dim();
    int n = 0;
    while ((1 << n) < d) ++n;
    if ((1 << n) != d || d < 2 || d > kMaxDim)
        fail(errc::unsupported_dim, "density operator dimension must be a power of two in 2..64");
    n_qubits_ = n;
    if (matrix_.hermiticity_error() > kHermitianTol)
        fail(errc::non_hermitian_input, "density operator is not Hermitian within 1e-12");
    if (std::abs(matrix_.trace() - cplx(1.0, 0.0)) > kHermitianTol)
        fail(errc::not_normalized, "density operator trace deviates from 1 by more than 1e-12");
    const std::vector<double> lams = hermitian_eigenvalues(matrix_);
    if (lams.front() < -kEigenvalueClampTol)
        fail(errc::negative_eigenvalue, "density operator has an eigenvalue below -1e-10");
    const double p = purity();
    if (p < 1.0 / d - kEigenvalueClampTol || p > 1.0 + kEigenvalueClampTol)
        fail(errc::bad_range, "purity outside [1/dim, 1]");
}

double DensityOperator::purity() const {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    const int d = matrix_.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s += std::norm(matrix_(i, j));
    return s;
}

std::vector<double> DensityOperator::eigenvalues() const {
    std::vector<double> lams = hermitian_eigenvalues(matrix_);
    for (double& l : lams) l = clamped_nonneg(l);
    return lams;
}

Bipartition Bipartition::make(int n_qubits, std::vector<int> block) {
    check_qubit_count(n_qubits);
    std::sort(block.begin(), block.end());
    check_block(n_qubits, block);
    std::vector<int> rest = complement_of(n_qubits, block);

    Bipartition p;
    p.n_qubits = n_qubits;
    const bool block_is_small =
        block.size() < rest.size() ||
        (block.size() == rest.size() && block.front() == 0);
    if (block_is_small) {
        p.block_small = std::move(block);
        p.block_large = std::move(rest);
    } else {
        p.block_small = std::move(rest);
        p.block_large = std::move(block);
    }
    return p;
}

std::string Bipartition::to_string() const {
    auto fmt = [](const std::vector<int>& b) {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(b[i]);
        }
        return s + "}";
    };
    return fmt(block_small) + "|" + fmt(block_large);
}

DensityOperator density_from_pure(const PureState& psi) {
    const int d = psi.dim();
    ComplexMatrix rho(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
    return DensityOperator(std::move(rho));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    const int n = rho.n_qubits();
    check_block(n, keep);
    const std::vector<int> traced = complement_of(n, keep);
    const int dk = 1 << keep.size();
    const int dt = 1 << traced.size();

    std::vector<int> keep_scatter(static_cast<std::size_t>(dk));
    std::vector<int> traced_scatter(static_cast<std::size_t>(dt));
    for (int r = 0; r < dk; ++r) keep_scatter[static_cast<std::size_t>(r)] = scatter_index(r, keep, n);
    for (int t = 0; t < dt; ++t) traced_scatter[static_cast<std::size_t>(t)] = scatter_index(t, traced, n);

    ComplexMatrix out(dk);
    for (int r1 = 0; r1 < dk; ++r1)
        for (int r2 = 0; r2 < dk; ++r2) {
            cplx v(0.0, 0.0);
            for (int t = 0; t < dt; ++t)
                v += rho.matrix()(keep_scatter[static_cast<std::size_t>(r1)] | traced_scatter[static_cast<std::size_t>(t)],
                                  keep_scatter[static_cast<std::size_t>(r2)] | traced_scatter[static_cast<std::size_t>(t)]);
            out(r1, r2) = v;
        }
    return DensityOperator(std::move(out));
}

DensityOperator reduced_density(const PureState& psi, const std::vector<int>& keep) {
    const int n = psi.n_qubits();
    check_block(n, keep);
    const std::vector<int> traced = complement_of(n, keep);
    const int dk = 1 << keep.size();
    const int dt = 1 << traced.size();

    std::vector<int> keep_scatter(static_cast<std::size_t>(dk));
    std::vector<int> traced_scatter(static_cast<std::size_t>(dt));
    for (int r = 0; r < dk; ++r) keep_scatter[static_cast<std::size_t>(r)] = scatter_index(r, keep, n);
    for (int t = 0; t < dt; ++t) traced_scatter[static_cast<std::size_t>(t)] = scatter_index(t, traced, n);

    ComplexMatrix out(dk);
    for (int r1 = 0; r1 < dk; ++r1)
        for (int r2 = 0; r2 < dk; ++r2) {
            cplx v(0.0, 0.0);
            for (int t = 0; t < dt; ++t)
                v += psi.amplitude(keep_scatter[static_cast<std::size_t>(r1)] | traced_scatter[static_cast<std::size_t>(t)]) *
                     std::conj(psi.amplitude(keep_scatter[static_cast<std::size_t>(r2)] | traced_scatter[static_cast<std::size_t>(t)]));
            out(r1, r2) = v;
        }
    return DensityOperator(std::move(out));
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    check_qubit_count(n);
    std::vector<Bipartition> out;
    // Subsets of size < n/2, plus (for even n) size n/2 subsets containing
    // qubit 0, give one representative per unordered bipartition.
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        const int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (2 * size > n) continue;
        const bool has_q0 = (mask & (1 << (n - 1))) != 0;
        if (2 * size == n && !has_q0) continue;
        std::vector<int> block;
        for (int q = 0; q < n; ++q)
            if (mask & (1 << (n - 1 - q))) block.push_back(q);
        out.push_back(Bipartition::make(n, std::move(block)));
    }
    std::sort(out.begin(), out.end(),
              [](const Bipartition& a, const Bipartition& b) { return a.block_small < b.block_small; });
    return out;
}

DensityOperator reduced_for_bipartition(const PureState& psi, const Bipartition& p) {
    if (p.n_qubits != psi.n_qubits())
        fail(errc::dim_mismatch, "bipartition does not match the state's qubit count");
    return reduced_density(psi, p.block_large);
}

PureState apply_local_unitaries(const PureState& psi, const std::vector<ComplexMatrix>& gates) {
    const int n = psi.n_qubits();
    if (static_cast<int>(gates.size()) != n)
        fail(errc::dim_mismatch, "need exactly one gate per qubit");
    std::vector<cplx> amps = psi.amplitudes();
    for (int q = 0; q < n; ++q) {
        const ComplexMatrix& g = gates[static_cast<std::size_t>(q)];
        if (g.dim() != 2) fail(errc::dim_mismatch, "local gates must be 2x2");
        const int bit = 1 << (n - 1 - q);
        for (int b = 0; b < psi.dim(); ++b) {
            if (b & bit) continue;
            const cplx a0 = amps[static_cast<std::size_t>(b)];
            const cplx a1 = amps[static_cast<std::size_t>(b | bit)];
            amps[static_cast<std::size_t>(b)] = g(0, 0) * a0 + g(0, 1) * a1;
            amps[static_cast<std::size_t>(b | bit)] = g(1, 0) * a0 + g(1, 1) * a1;
        }
    }
    return PureState::normalized(n, std::move(amps));
}

PureState permute_qubits(const PureState& psi, const std::vector<int>& perm) {
    const int n = psi.n_qubits();
    if (static_cast<int>(perm.size()) != n) fail(errc::dim_mismatch, "permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            fail(errc::bad_subset, "not a permutation of the qubit labels");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<cplx> out(static_cast<std::size_t>(psi.dim()));
    for (int b = 0; b < psi.dim(); ++b) {
        int nb = 0;
        for (int q = 0; q < n; ++q) {
            const int bit = (b >> (n - 1 - q)) & 1;
            nb |= bit << (n - 1 - perm[static_cast<std::size_t>(q)]);
        }
        out[static_cast<std::size_t>(nb)] = psi.amplitude(b);
    }
    return PureState(n, std::move(out));
}

}  // namespace qgeo
