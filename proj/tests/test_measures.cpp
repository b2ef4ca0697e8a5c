#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgeo/catalog.hpp"
#include "qgeo/measures.hpp"
#include "test_support.hpp"

using namespace qgeo;
using qgeo_test::Rng;
using std::numbers::pi;

namespace {

// 1 - sqrt(2 - sqrt(2)), the three-qubit bipartite normalization.
const double kN2 = 1.0 - std::sqrt(2.0 - std::sqrt(2.0));

PureState two_qubit_schmidt(double alpha) {
    return PureState::normalized(2, {std::cos(alpha), 0.0, 0.0, std::sin(alpha)});
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("rem anchors") {
    CHECK(rem_two_qubit(catalog::bell()).value == doctest::Approx(1.0).epsilon(1e-12));

    const RemResult product = rem_two_qubit(PureState::normalized(2, {1, 0, 0, 0}));
    CHECK(product.r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(product.value) < 1e-9);

    const RemResult half = rem_two_qubit(two_qubit_schmidt(pi / 8));
    CHECK(half.r == doctest::Approx(std::cos(pi / 4)).epsilon(1e-12));
    CHECK(half.value == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(rem_two_qubit(catalog::ghz(3)), error);
}

TEST_CASE("rem agrees with the arccos closed form on an r-grid") {
    for (double alpha = 0.02; alpha < pi / 4; alpha += 0.05) {
        const RemResult res = rem_two_qubit(two_qubit_schmidt(alpha));
        CHECK(std::abs(res.value - (2.0 / pi) * std::acos(res.r)) < 1e-8);
    }
}

TEST_CASE("rem is the same computed from either reduction") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const PureState psi = qgeo_test::random_pure_state(rng, 2);
        const double r_a = coherence_vector(reduced_density(psi, {0})).r;
        const double r_b = coherence_vector(reduced_density(psi, {1})).r;
        CHECK(std::abs(r_a - r_b) < 1e-9);
    }
}

TEST_CASE("rem decreases strictly in r") {
    double prev = -1.0;
    for (double alpha = 0.05; alpha <= pi / 4 + 1e-12; alpha += 0.05) {
        // alpha up => r = cos(2 alpha) down => value up.
        const RemResult res = rem_two_qubit(two_qubit_schmidt(alpha));
        CHECK(res.value > prev);
        prev = res.value;
        if (res.r > 0.05 && res.r < 0.95) {
            const double h = 1e-4;
            const double deriv = (geodesic_length_radial(res.r + h, 1.0) -
                                  geodesic_length_radial(res.r - h, 1.0)) /
                                 (2.0 * h) / (pi / 2.0);
            CHECK(deriv == doctest::Approx(-(2.0 / pi) / std::sqrt(1.0 - res.r * res.r))
                               .epsilon(1e-4));
        }
    }
}

TEST_CASE("rem discriminance on a two-qubit sample") {
    // Products sit below 1e-6, entangled samples clearly above.
    CHECK(rem_two_qubit(PureState::normalized(2, {0, 1, 0, 0})).value < 1e-6);
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(rem_two_qubit(qgeo_test::random_product_state(rng, 2)).value < 1e-6);
    for (double alpha : {0.01, 0.1, 0.5, pi / 4}) {
        const PureState psi = two_qubit_schmidt(alpha);
        const double max_schmidt_sq =
            reduced_density(psi, {0}).eigenvalues().back();
        CHECK(max_schmidt_sq < 1.0 - 1e-7);
        CHECK(rem_two_qubit(psi).value > 1e-6);
    }
}

TEST_CASE("bures distance to the maximally mixed state") {
    std::vector<double> quarter(4, 0.25);
    CHECK(bures_distance_to_max_mixed(DensityOperator(ComplexMatrix::diagonal(quarter))) ==
          doctest::Approx(0.0).epsilon(1e-12));

    const DensityOperator pure4{ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0})};
    CHECK(bures_distance_to_max_mixed(pure4) == doctest::Approx(1.0).epsilon(1e-12));

    const DensityOperator ghz_red{ComplexMatrix::diagonal({0.5, 0.0, 0.0, 0.5})};
    CHECK(bures_distance_to_max_mixed(ghz_red) ==
          doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("bipartition normalization closed forms") {
    CHECK(bipartition_normalization(1, 2) == doctest::Approx(kN2).epsilon(1e-12));
    CHECK(bipartition_normalization(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    // sqrt(2 (1 - 2^(-3/2))) - 1
    CHECK(bipartition_normalization(1, 3) ==
          doctest::Approx(std::sqrt(2.0 * (1.0 - std::pow(2.0, -1.5))) - 1.0).epsilon(1e-12));
    CHECK(bipartition_normalization(1, 3) == doctest::Approx(0.13705462437538696).epsilon(1e-12));
    CHECK_THROWS_AS(bipartition_normalization(0, 2), error);
    CHECK_THROWS_AS(bipartition_normalization(3, 2), error);
    CHECK_THROWS_AS(bipartition_normalization(3, 4), error);
}

TEST_CASE("brem anchors: ghz, w, biseparable") {
    for (const Bipartition& p : enumerate_bipartitions(3)) {
        const BremResult g = brem(catalog::ghz(3), p);
        CHECK(g.unnormalized == doctest::Approx(kN2).epsilon(1e-12));
        CHECK(g.value == doctest::Approx(1.0).epsilon(1e-9));

        const BremResult wv = brem(catalog::w(3), p);
        CHECK(wv.unnormalized == doctest::Approx(0.2214416207613920).epsilon(1e-10));
        CHECK(wv.value == doctest::Approx(0.9437781262511850).epsilon(1e-10));
    }

    // |0> x bell: the {0}|{1,2} cut factorizes.
    const std::vector<cplx> bell = catalog::bell().amplitudes();
    const PureState s0bell = PureState::normalized(3, qgeo_test::kron_amps({1.0, 0.0}, bell));
    CHECK(brem(s0bell, Bipartition::make(3, {0})).value == 0.0);
}

TEST_CASE("gbr anchors") {
    CHECK(gbr(catalog::ghz(3)).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gbr(catalog::w(3)).value == doctest::Approx(0.9437781262511850).epsilon(1e-10));

    const std::vector<cplx> bell = catalog::bell().amplitudes();
    const PureState s0bell = PureState::normalized(3, qgeo_test::kron_amps({1.0, 0.0}, bell));
    const GbrResult res = gbr(s0bell);
    CHECK(res.value == 0.0);
    REQUIRE(res.per_bipartition.size() == 3);
    CHECK(res.per_bipartition[0].value == 0.0);  // {0}|{1,2}
    CHECK(res.per_bipartition[1].value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.per_bipartition[2].value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gbr for the chi families at pi/4") {
    // Frozen from an independent dense-eigensolver evaluation of the same
    // closed-form chain.
    CHECK(gbr(catalog::chi1(pi / 4)).value == doctest::Approx(0.7129058367593055).epsilon(1e-8));
    CHECK(gbr(catalog::chi2(pi / 4)).value == doctest::Approx(0.8131764393649198).epsilon(1e-8));
}

TEST_CASE("brem zero-set: products exactly, perturbations not") {
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        // Random biseparable state: single qubit x random 2-qubit state.
        const std::vector<cplx> one = qgeo_test::random_amplitudes(rng, 2);
        const std::vector<cplx> two = qgeo_test::random_amplitudes(rng, 4);
        const PureState psi = PureState::normalized(3, qgeo_test::kron_amps(one, two));
        const Bipartition cut = Bipartition::make(3, {0});
        CHECK(brem(psi, cut).value == 0.0);

        // Mixing in a ghz component breaks factorization across every cut.
        std::vector<cplx> bumped = psi.amplitudes();
        const double delta = 1e-3;
        const PureState ghz = catalog::ghz(3);
        for (int b = 0; b < 8; ++b) bumped[static_cast<std::size_t>(b)] += delta * ghz.amplitude(b);
        const PureState near = PureState::normalized(3, std::move(bumped));
        CHECK(brem(near, cut).value > 1e-9);
    }
}

TEST_CASE("gbr is invariant under qubit permutations") {
    Rng rng(44);
    const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const PureState& psi :
         {catalog::ghz(3), catalog::w(3), catalog::chi2(pi / 4), qgeo_test::random_pure_state(rng, 3)}) {
        const double base = gbr(psi).value;
        for (const std::vector<int>& perm : perms)
            CHECK(std::abs(gbr(permute_qubits(psi, perm)).value - base) < 1e-9);
    }
}

TEST_CASE("gbr is invariant under local unitaries") {
    Rng rng(45);
    for (const PureState& psi : {catalog::ghz(3), catalog::w(3), catalog::chi2(pi / 4)}) {
        const double base = gbr(psi).value;
        for (int trial = 0; trial < 100; ++trial) {
            const std::vector<ComplexMatrix> gates = {qgeo_test::random_unitary2(rng),
                                                      qgeo_test::random_unitary2(rng),
                                                      qgeo_test::random_unitary2(rng)};
            CHECK(std::abs(gbr(apply_local_unitaries(psi, gates)).value - base) < 1e-8);
        }
    }
}

TEST_CASE("measure values stay in range") {
    Rng rng(46);
    for (int n : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            const GbrResult res = gbr(qgeo_test::random_pure_state(rng, n));
            CHECK(res.value >= 0.0);
            CHECK(res.value <= 1.0 + 1e-9);
            for (const BremResult& b : res.per_bipartition) {
                CHECK(b.value >= 0.0);
                CHECK(b.value <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("gbr discrimination between chi classes exceeds 0.01") {
    const double diff =
        gbr(catalog::chi2(pi / 4)).value - gbr(catalog::chi1(pi / 4)).value;
    CHECK(diff > 0.01);
    CHECK(diff == doctest::Approx(0.1002706).epsilon(1e-4));
}

}  // TEST_SUITE
