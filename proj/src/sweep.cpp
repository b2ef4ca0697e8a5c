#include "qgeo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "qgeo/baselines.hpp"
#include "qgeo/catalog.hpp"
#include "qgeo/measures.hpp"

namespace qgeo {

namespace {

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_range, "cannot open output file: " + path);
    out << text;
    if (!out) fail(errc::bad_range, "write failed: " + path);
}

}  // namespace

bool is_theta_family(const std::string& family) {
    return family == "psi1" || family == "psi2" || family == "chi1" || family == "chi2" ||
           family == "chi3";
}

PureState make_family_state(const std::string& family, double theta, int n) {
    if (family == "ghz") return catalog::ghz(n);
    if (family == "w") return catalog::w(n);
    if (family == "bell") return catalog::bell();
    if (family == "psi1") return catalog::psi1(theta);
    if (family == "psi2") return catalog::psi2(theta);
    if (family == "chi1") return catalog::chi1(theta);
    if (family == "chi2") return catalog::chi2(theta);
    if (family == "chi3") return catalog::chi3(theta);
    fail(errc::bad_range, "unknown family: " + family);
}

double evaluate_measure(const std::string& name, const PureState& psi, double epsilon_boundary,
                        double abs_tol) {
    if (name == "rem")
        return rem_two_qubit(psi, MetricConfig::bures(false, epsilon_boundary), abs_tol).value;
    if (name == "s") return von_neumann_entropy(reduced_density(psi, {0}));
    if (name == "c")
        return bipartite_concurrence(psi, enumerate_bipartitions(psi.n_qubits()).front());
    if (name == "ggm") return ggm(psi);
    if (name == "gmc") return gmc(psi);
    if (name == "fill") return concurrence_fill(psi);
    if (name == "gbc") return gbc(psi);
    if (name == "gbr") return gbr(psi).value;
    fail(errc::bad_range, "unknown measure: " + name);
}

SweepTable run_sweep(const SweepSpec& spec) {
    if (spec.steps < 2) fail(errc::bad_range, "sweep needs at least 2 steps");
    if (!is_theta_family(spec.family))
        fail(errc::bad_range, "family has no theta parameter: " + spec.family);
    if (spec.measures.empty()) fail(errc::bad_range, "no measures requested");
    for (const std::string& m : spec.measures)
        if (std::find(measure_names().begin(), measure_names().end(), m) == measure_names().end())
            fail(errc::bad_range, "unknown measure: " + m);

    SweepTable table;
    table.columns.push_back("theta");
    table.columns.insert(table.columns.end(), spec.measures.begin(), spec.measures.end());
    table.rows.reserve(static_cast<std::size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) {
        const double theta = spec.theta_from + (spec.theta_to - spec.theta_from) *
                                                   static_cast<double>(i) / (spec.steps - 1);
        const PureState psi = make_family_state(spec.family, theta, 3);
        std::vector<double> row;
        row.reserve(spec.measures.size() + 1);
        row.push_back(theta);
        for (const std::string& m : spec.measures)
            row.push_back(evaluate_measure(m, psi, spec.epsilon_boundary, spec.abs_tol));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ",";
        out += table.columns[i];
    }
    out += "\n";
    for (const std::vector<double>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ",";
            out += format_fixed6(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::vector<std::string> write_figure_csvs(const std::string& figure, const std::string& out_dir,
                                           int points, double epsilon_boundary, double abs_tol) {
    if (points < 2) fail(errc::bad_range, "figure grids need at least 2 points");
    const double pi = std::numbers::pi;
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& text) {
        write_text_file(out_dir + "/" + name, text);
        written.push_back(name);
    };

    if (figure == "fig1") {
        const MetricConfig cfg = MetricConfig::bures(false, epsilon_boundary);
        std::string csv = "r,length\n";
        for (int i = 0; i < points; ++i) {
            const double r = 0.999 * static_cast<double>(i) / (points - 1);
            csv += format_fixed6(r) + "," +
                   format_fixed6(geodesic_length_radial(0.0, r, cfg, abs_tol)) + "\n";
        }
        csv += format_fixed6(1.0) + "," +
               format_fixed6(geodesic_length_radial(0.0, 1.0, cfg, abs_tol)) + "\n";
        emit("fig1.csv", csv);
    } else if (figure == "psi1" || figure == "psi2") {
        SweepSpec spec{figure, 0.0, pi, points, {"rem", "s", "c"}, epsilon_boundary, abs_tol};
        emit(figure + ".csv", to_csv(run_sweep(spec)));
    } else if (figure == "chi-compare") {
        for (const std::string fam : {"chi1", "chi2"}) {
            SweepSpec spec{fam, 0.0, 0.5 * pi, points, {"ggm", "gmc", "fill", "gbr"}};
            emit("chi_compare_" + fam + ".csv", to_csv(run_sweep(spec)));
        }
    } else if (figure == "chi3-smooth") {
        SweepSpec spec{"chi3", 0.0, 1.25, points, {"ggm", "gmc", "gbc", "gbr"}};
        emit("chi3_smooth.csv", to_csv(run_sweep(spec)));
    } else {
        fail(errc::bad_range, "unknown figure: " + figure);
    }
    return written;
}

}  // namespace qgeo
