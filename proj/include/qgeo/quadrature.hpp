#pragma once

#include <functional>
#include <vector>

namespace qgeo {

// Adaptive Gauss-Kronrod (G7,K15) with interval bisection. Deterministic
// refinement order (depth-first, left half first). Signed: a > b integrates
// backwards. abs_tol is an absolute target for the whole interval.
double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                              double abs_tol);

// Neville polynomial extrapolation of (x_i, y_i) samples to x = 0.
double extrapolate_to_zero(std::vector<double> xs, std::vector<double> ys);

}  // namespace qgeo
