#pragma once

#include <string>
#include <vector>

#include "qgeo/quantum_state.hpp"

namespace qgeo {

// Measure vocabulary shared by the CLI and the sweep machinery.
inline const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = {"rem", "s",    "c",   "ggm",
                                                   "gmc", "fill", "gbc", "gbr"};
    return names;
}

bool is_theta_family(const std::string& family);

// Builds a catalog state. theta is ignored by ghz/w/bell; n only applies to
// ghz/w. Throws errc::bad_range for unknown family names.
PureState make_family_state(const std::string& family, double theta, int n);

// Single named measure on a state; throws errc::bad_range for unknown names
// and errc::wrong_qubit_count when the measure does not apply. eps and tol
// feed the geodesic path (rem); the other measures ignore them.
double evaluate_measure(const std::string& name, const PureState& psi,
                        double epsilon_boundary = 1e-9, double abs_tol = 1e-10);

struct SweepSpec {
    std::string family;
    double theta_from = 0.0;
    double theta_to = 0.0;
    int steps = 2;  // inclusive uniform grid, >= 2
    std::vector<std::string> measures;
    double epsilon_boundary = 1e-9;
    double abs_tol = 1e-10;
};

struct SweepTable {
    std::vector<std::string> columns;        // "theta" followed by measure names
    std::vector<std::vector<double>> rows;   // grid order
};

SweepTable run_sweep(const SweepSpec& spec);

// CSV with 6 decimal places and LF line endings; column order follows the
// requested measure order.
std::string to_csv(const SweepTable& table);

// Datasets behind the shipped figures; returns the file names written.
// Windows: psi1/psi2 sweep theta in [0, pi]; chi-compare in [0, pi/2];
// chi3-smooth in [0, 1.25] (stops short of the biseparable point at pi/2,
// where every genuine measure has a non-smooth zero by construction).
std::vector<std::string> write_figure_csvs(const std::string& figure, const std::string& out_dir,
                                           int points = 201, double epsilon_boundary = 1e-9,
                                           double abs_tol = 1e-10);

}  // namespace qgeo
