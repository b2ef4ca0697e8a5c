#pragma once

#include "qgeo/quantum_state.hpp"

namespace qgeo::catalog {

// State families used throughout the figures and tests. theta is in radians;
// every constructor renormalizes defensively.
PureState ghz(int n);
PureState w(int n);
PureState bell();  // (|00> + |11>)/sqrt(2)

// cos(t)/sqrt(3) (|00> + (|01>+|10>)/sqrt(2) + |11>) + sin(t) (|01>-|10>)/sqrt(2)
PureState psi1(double theta);
// cos(t) (|00>-|11>)/sqrt(2) + sin(t) |++>
PureState psi2(double theta);
// cos(t/2)|000> + sin(t/2)|111>
PureState chi1(double theta);
// (sin(t)|000> + cos(t)|110> + |111>)/sqrt(2)
PureState chi2(double theta);
// cos(t)|001> + sin(t)(|010>+|100>)/sqrt(2)
PureState chi3(double theta);

// Three-qubit generalized Schmidt coefficients, all nonnegative with
// sum of squares 1. The general canonical form in the literature carries a
// phase on lambda1; only the phase-free real form is supported here.
struct GsdCoefficients {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;

    GsdCoefficients(double l0, double l1, double l2, double l3, double l4);
};

// lambda0|000> + lambda1|100> + lambda2|101> + lambda3|110> + lambda4|111>
PureState from_gsd(const GsdCoefficients& c);

// Genuine-entanglement classes, keyed by which of lambda1..lambda3 vanish
// (tolerance 1e-9). Requires lambda0 and lambda4 nonzero.
enum class ClassLabel { class1, class2, class3, class4 };

ClassLabel classify(const GsdCoefficients& c);

}  // namespace qgeo::catalog
