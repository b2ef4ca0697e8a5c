#include <doctest.h>

#include <cmath>

#include "qgeo/catalog.hpp"
#include "qgeo/quantum_state.hpp"
#include "test_support.hpp"

using namespace qgeo;
using qgeo_test::Rng;

TEST_SUITE("quantum-state") {

TEST_CASE("construction validates the norm") {
    CHECK_THROWS_AS(PureState(2, {1.0, 1.0, 0.0, 0.0}), error);
    const PureState psi = PureState::normalized(2, {1.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(psi.amplitude(0) - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
}

TEST_CASE("density_from_pure examples") {
    const DensityOperator zero = density_from_pure(PureState::normalized(2, {1, 0, 0, 0}));
    CHECK(std::real(zero.matrix()(0, 0)) == doctest::Approx(1.0));
    CHECK(zero.purity() == doctest::Approx(1.0).epsilon(1e-12));

    const DensityOperator bell = density_from_pure(catalog::bell());
    for (int i : {0, 3})
        for (int j : {0, 3})
            CHECK(std::real(bell.matrix()(i, j)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(bell.matrix()(1, 1)) == 0.0);
    CHECK(std::abs(bell.matrix()(0, 1)) == 0.0);
}

TEST_CASE("partial trace: bell reduces to the maximally mixed state") {
    const DensityOperator rho = partial_trace(density_from_pure(catalog::bell()), {0});
    CHECK(rho.dim() == 2);
    CHECK(std::real(rho.matrix()(0, 0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::real(rho.matrix()(1, 1)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(rho.matrix()(0, 1)) < 1e-15);
}

TEST_CASE("partial trace: ghz3 keep {0,1}") {
    const DensityOperator rho = partial_trace(density_from_pure(catalog::ghz(3)), {0, 1});
    CHECK(rho.dim() == 4);
    CHECK(std::real(rho.matrix()(0, 0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::real(rho.matrix()(3, 3)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(rho.matrix()(0, 3)) < 1e-15);
    CHECK(std::abs(rho.matrix()(1, 1)) < 1e-15);
}

TEST_CASE("partial trace of a product returns the exact factor") {
    // |0> x |+>, keep qubit 1.
    const double inv = 1.0 / std::sqrt(2.0);
    const PureState psi = PureState::normalized(2, {inv, inv, 0.0, 0.0});
    const DensityOperator plus = reduced_density(psi, {1});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::real(plus.matrix()(i, j)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("partial trace rejects empty and full subsets") {
    const DensityOperator rho = density_from_pure(catalog::bell());
    CHECK_THROWS_AS(partial_trace(rho, {}), error);
    CHECK_THROWS_AS(partial_trace(rho, {0, 1}), error);
    try {
        partial_trace(rho, {});
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_subset);
    }
}

TEST_CASE("amplitude and density partial-trace paths agree") {
    Rng rng(21);
    for (int n : {2, 3, 4}) {
        const PureState psi = qgeo_test::random_pure_state(rng, n);
        const DensityOperator rho = density_from_pure(psi);
        for (const Bipartition& p : enumerate_bipartitions(n)) {
            const DensityOperator a = reduced_density(psi, p.block_small);
            const DensityOperator b = partial_trace(rho, p.block_small);
            CHECK(a.matrix().max_abs_diff(b.matrix()) < 1e-12);
        }
    }
}

TEST_CASE("bipartition counts match 2^(n-1) - 1") {
    CHECK(enumerate_bipartitions(2).size() == 1);
    CHECK(enumerate_bipartitions(3).size() == 3);
    CHECK(enumerate_bipartitions(4).size() == 7);
    CHECK(enumerate_bipartitions(5).size() == 15);
    CHECK(enumerate_bipartitions(6).size() == 31);
    CHECK_THROWS_AS(enumerate_bipartitions(7), error);
    CHECK_THROWS_AS(enumerate_bipartitions(1), error);
}

TEST_CASE("bipartitions are canonical and lexicographically ordered") {
    for (int n : {2, 3, 4, 5, 6}) {
        const std::vector<Bipartition> parts = enumerate_bipartitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Bipartition& p = parts[i];
            CHECK(p.block_small.size() + p.block_large.size() == static_cast<std::size_t>(n));
            CHECK(p.block_small.size() <= p.block_large.size());
            if (p.block_small.size() == p.block_large.size())
                CHECK(p.block_small.front() == 0);
            if (i > 0) CHECK(parts[i - 1].block_small < p.block_small);
        }
    }
    CHECK(enumerate_bipartitions(2).front().to_string() == "{0}|{1}");
}

TEST_CASE("reduced_for_bipartition keeps the larger block") {
    const Bipartition p = Bipartition::make(3, {2});
    const DensityOperator rho = reduced_for_bipartition(catalog::ghz(3), p);
    CHECK(rho.dim() == 4);
    const std::vector<double> lams = rho.eigenvalues();
    CHECK(lams[3] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lams[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lams[1] < 1e-12);
}

TEST_CASE("w3 reductions have eigenvalues {2/3, 1/3, 0, 0}") {
    for (const Bipartition& p : enumerate_bipartitions(3)) {
        const std::vector<double> lams = reduced_for_bipartition(catalog::w(3), p).eigenvalues();
        CHECK(lams[3] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(lams[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(lams[1] < 1e-12);
        CHECK(lams[0] < 1e-12);
    }
}

TEST_CASE("product state reduces to rank one") {
    const PureState psi = PureState::normalized(3, {1, 0, 0, 0, 0, 0, 0, 0});
    for (const Bipartition& p : enumerate_bipartitions(3)) {
        const std::vector<double> lams = reduced_for_bipartition(psi, p).eigenvalues();
        CHECK(lams.back() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("schmidt property: complementary reductions share nonzero spectra") {
    Rng rng(22);
    for (int n : {2, 3, 4, 5}) {
        const PureState psi = qgeo_test::random_pure_state(rng, n);
        for (const Bipartition& p : enumerate_bipartitions(n)) {
            std::vector<double> small = reduced_density(psi, p.block_small).eigenvalues();
            std::vector<double> large = reduced_density(psi, p.block_large).eigenvalues();
            // Compare the top 2^|small| eigenvalues of both (rest are zero).
            const std::size_t k = small.size();
            for (std::size_t i = 0; i < k; ++i)
                CHECK(std::abs(small[k - 1 - i] - large[large.size() - 1 - i]) < 1e-9);
            for (std::size_t i = 0; i + k < large.size(); ++i) CHECK(large[i] < 1e-9);
        }
    }
}

TEST_CASE("purity-radius consistency for every reduction") {
    Rng rng(23);
    for (int n : {2, 3, 4, 5, 6}) {
        const PureState psi = qgeo_test::random_pure_state(rng, n);
        for (const Bipartition& p : enumerate_bipartitions(n)) {
            const DensityOperator rho = reduced_for_bipartition(psi, p);
            const double d = rho.dim();
            const double r_sq = (d * rho.purity() - 1.0) / (d - 1.0);
            CHECK(r_sq >= 0.0);
            CHECK(r_sq <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("partial trace of a tensor product recovers the factor") {
    Rng rng(24);
    const DensityOperator rho_a = qgeo_test::random_density(rng, 2);
    const DensityOperator rho_b = qgeo_test::random_density(rng, 4);
    const DensityOperator joint{kron(rho_a.matrix(), rho_b.matrix())};
    CHECK(partial_trace(joint, {0}).matrix().max_abs_diff(rho_a.matrix()) < 1e-12);
    CHECK(partial_trace(joint, {1, 2}).matrix().max_abs_diff(rho_b.matrix()) < 1e-12);
}

TEST_CASE("permutations relabel basis indices") {
    // Swap the two qubits of |01>.
    const PureState psi = PureState::normalized(2, {0, 1, 0, 0});
    const PureState swapped = permute_qubits(psi, {1, 0});
    CHECK(std::abs(swapped.amplitude(2) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("local unitaries preserve reduction spectra") {
    Rng rng(25);
    const PureState psi = qgeo_test::random_pure_state(rng, 3);
    const std::vector<ComplexMatrix> gates = {qgeo_test::random_unitary2(rng),
                                              qgeo_test::random_unitary2(rng),
                                              qgeo_test::random_unitary2(rng)};
    const PureState rotated = apply_local_unitaries(psi, gates);
    for (const Bipartition& p : enumerate_bipartitions(3)) {
        const std::vector<double> a = reduced_for_bipartition(psi, p).eigenvalues();
        const std::vector<double> b = reduced_for_bipartition(rotated, p).eigenvalues();
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-10);
    }
}

}  // TEST_SUITE
