#pragma once

#include "qgeo/quantum_state.hpp"

namespace qgeo::oracle {

// Brute-force reference paths used to validate the fast closed forms. These
// stay independent of the code they cross-check: the fidelity route goes
// through psd_sqrt, the quadrature route through fixed-step Simpson.

// F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma);

struct ProductSearchResult {
    PureState product_state;      // best |a> x |b> found
    double max_overlap = 0.0;     // |<ab|psi>|
    double distance = 0.0;        // sqrt(2 (1 - max_overlap))
};

// Scans grid x grid points per Bloch angle (4 angles total), then refines by
// coordinate descent. Ties on the grid resolve to the lowest scan index.
ProductSearchResult closest_product_state_search(const PureState& psi, int grid = 50);

// Composite Simpson on the radial Bures integrand at a fixed subdivision
// count, independent of the adaptive integrator. Interior segments only
// (r_to < 1): a uniform grid cannot resolve the boundary singularity.
double quadrature_reference(double r_from, double r_to, long subdivisions);

}  // namespace qgeo::oracle
