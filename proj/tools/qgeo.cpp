// Command-line front end: measure reports, theta sweeps over the state
// catalog, figure datasets as CSV, and bipartition listings.
//
// Exit codes: 0 ok, 2 CLI misuse, 3 malformed state file, 4 numerical
// failure, 5 unwritable output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeo/baselines.hpp"
#include "qgeo/catalog.hpp"
#include "qgeo/measures.hpp"
#include "qgeo/oracle.hpp"
#include "qgeo/state_io.hpp"
#include "qgeo/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBadState = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitUnwritable = 5;

struct NumericsConfig {
    double eps = 1e-9;   // boundary epsilon for the r -> 1 limit
    double tol = 1e-10;  // quadrature absolute tolerance
};

double parse_env_double(const char* name, double fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0.0))
        throw CLI::ValidationError(std::string(name) + " must be a positive number");
    return v;
}

// Flag > environment > built-in default.
NumericsConfig resolve_numerics(const std::optional<double>& eps_flag,
                                const std::optional<double>& tol_flag) {
    NumericsConfig cfg;
    cfg.eps = eps_flag ? *eps_flag : parse_env_double("QGEO_EPS", 1e-9);
    cfg.tol = tol_flag ? *tol_flag : parse_env_double("QGEO_TOL", 1e-10);
    return cfg;
}

std::vector<std::string> split_csv_list(const std::string& raw) {
    std::vector<std::string> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

struct MeasureOptions {
    std::string state_path;
    std::string family;
    double theta = 0.0;
    int n = 3;
    std::string gsd_coeffs;
    std::string measures;
    bool verify = false;
    std::optional<double> eps_flag, tol_flag;
};

qgeo::PureState resolve_state(const MeasureOptions& opt) {
    if (!opt.state_path.empty()) return qgeo::load_state_file(opt.state_path);
    if (opt.family == "gsd") {
        std::vector<std::string> parts = split_csv_list(opt.gsd_coeffs);
        if (parts.size() != 5)
            throw CLI::ValidationError("--gsd-coeffs needs five comma-separated values");
        double l[5];
        for (int i = 0; i < 5; ++i) {
            try {
                l[i] = std::stod(parts[static_cast<std::size_t>(i)]);
            } catch (const std::exception&) {
                throw CLI::ValidationError("--gsd-coeffs values must be numbers");
            }
        }
        return qgeo::catalog::from_gsd({l[0], l[1], l[2], l[3], l[4]});
    }
    return qgeo::make_family_state(opt.family, opt.theta, opt.n);
}

int run_verify(const qgeo::PureState& psi, const NumericsConfig& cfg) {
    // Spot audit: closed-form Bures-to-center distance against the
    // Uhlmann-fidelity route on every bipartition reduction, plus the
    // brute-force product search for two qubits.
    double worst = 0.0;
    for (const qgeo::Bipartition& p : qgeo::enumerate_bipartitions(psi.n_qubits())) {
        const qgeo::DensityOperator rho = qgeo::reduced_for_bipartition(psi, p);
        const double closed = qgeo::bures_distance_to_max_mixed(rho);
        const int d = rho.dim();
        std::vector<qgeo::cplx> ident(static_cast<std::size_t>(d) * d);
        for (int i = 0; i < d; ++i) ident[static_cast<std::size_t>(i) * d + i] = 1.0 / d;
        const qgeo::DensityOperator max_mixed{qgeo::ComplexMatrix(d, std::move(ident))};
        const double fid = qgeo::oracle::uhlmann_fidelity(max_mixed, rho);
        const double via_oracle = std::sqrt(2.0 * std::max(0.0, 1.0 - std::sqrt(fid)));
        worst = std::max(worst, std::abs(closed - via_oracle));
        std::fprintf(stderr, "verify: %s closed-form %.12g oracle %.12g\n",
                     p.to_string().c_str(), closed, via_oracle);
    }
    if (psi.n_qubits() == 2) {
        const auto search = qgeo::oracle::closest_product_state_search(psi);
        const double rem = qgeo::rem_two_qubit(psi, qgeo::MetricConfig::bures(false, cfg.eps),
                                               cfg.tol)
                               .value;
        std::fprintf(stderr, "verify: product-search distance %.12g (rem %.12g)\n",
                     search.distance, rem);
    }
    std::fprintf(stderr, "verify: max closed-form vs oracle deviation %.3g\n", worst);
    if (worst > 1e-8) {
        std::fprintf(stderr, "verify: FAILED (deviation above 1e-8)\n");
        return kExitNumerical;
    }
    return 0;
}

int cmd_measure(const MeasureOptions& opt) {
    const NumericsConfig cfg = resolve_numerics(opt.eps_flag, opt.tol_flag);
    const qgeo::PureState psi = resolve_state(opt);

    std::vector<std::string> wanted = split_csv_list(opt.measures);
    if (wanted.empty()) {
        for (const auto& [name, value] : qgeo::compute_report(psi, "").values) {
            (void)value;
            wanted.push_back(name);
        }
    }

    std::string json = "{";
    for (std::size_t i = 0; i < wanted.size(); ++i) {
        const double v = qgeo::evaluate_measure(wanted[i], psi, cfg.eps, cfg.tol);
        if (i > 0) json += ", ";
        json += "\"" + wanted[i] + "\": " + format_sig12(v);
    }
    json += "}";
    std::cout << json << "\n";

    if (opt.verify) return run_verify(psi, cfg);
    return 0;
}

struct SweepOptions {
    std::string family;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
    std::string measures;
    std::string out_path;  // empty -> stdout
    std::optional<double> eps_flag, tol_flag;
};

int cmd_sweep(const SweepOptions& opt) {
    const NumericsConfig cfg = resolve_numerics(opt.eps_flag, opt.tol_flag);
    qgeo::SweepSpec spec{opt.family, opt.from,  opt.to, opt.steps,
                         split_csv_list(opt.measures), cfg.eps, cfg.tol};
    const std::string csv = qgeo::to_csv(qgeo::run_sweep(spec));
    if (opt.out_path.empty()) {
        std::cout << csv;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << opt.out_path << "\n";
        return kExitUnwritable;
    }
    out << csv;
    return out ? 0 : kExitUnwritable;
}

struct FigureOptions {
    std::string name;
    std::string out_dir;
    int points = 201;
    std::optional<double> eps_flag, tol_flag;
};

int cmd_figure(const FigureOptions& opt) {
    const NumericsConfig cfg = resolve_numerics(opt.eps_flag, opt.tol_flag);
    const bool known = opt.name == "fig1" || opt.name == "psi1" || opt.name == "psi2" ||
                       opt.name == "chi-compare" || opt.name == "chi3-smooth";
    if (!known) throw CLI::ValidationError("unknown figure: " + opt.name);

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec || !std::filesystem::is_directory(opt.out_dir)) {
        std::cerr << "error: cannot create output directory: " << opt.out_dir << "\n";
        return kExitUnwritable;
    }
    try {
        for (const std::string& name :
             qgeo::write_figure_csvs(opt.name, opt.out_dir, opt.points, cfg.eps, cfg.tol))
            std::cout << opt.out_dir << "/" << name << "\n";
    } catch (const qgeo::error& e) {
        // The name was validated above, so any failure here is an IO problem.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnwritable;
    }
    return 0;
}

int cmd_bipartitions(int n) {
    const std::vector<qgeo::Bipartition> parts = qgeo::enumerate_bipartitions(n);
    std::cout << "m=" << parts.size() << "\n";
    for (const qgeo::Bipartition& p : parts) std::cout << p.to_string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bloch-geometry entanglement measures for n-qubit pure states"};
    app.require_subcommand(1);

    MeasureOptions mopt;
    CLI::App* measure = app.add_subcommand("measure", "Compute measures for one state (JSON)");
    auto* state_opt = measure->add_option("--state", mopt.state_path, "State file (JSON schema)");
    auto* family_opt = measure->add_option("--family", mopt.family, "Catalog family name");
    state_opt->excludes(family_opt);
    measure->add_option("--theta", mopt.theta, "Family parameter in radians");
    measure->add_option("--n", mopt.n, "Qubit count for ghz/w")->check(CLI::Range(2, 6));
    measure->add_option("--gsd-coeffs", mopt.gsd_coeffs, "lambda0..lambda4 for --family gsd");
    measure->add_option("--measures", mopt.measures, "Comma-separated measure names");
    measure->add_flag("--verify", mopt.verify, "Cross-check against the brute-force oracles");
    double mv_eps = 0.0, mv_tol = 0.0;
    auto* m_eps = measure->add_option("--eps", mv_eps, "Boundary epsilon");
    auto* m_tol = measure->add_option("--tol", mv_tol, "Quadrature tolerance");

    SweepOptions sopt;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep theta over a family (CSV)");
    sweep->add_option("--family", sopt.family, "Theta-parameterized family")->required();
    sweep->add_option("--from", sopt.from, "Start angle (radians)")->required();
    sweep->add_option("--to", sopt.to, "End angle (radians)")->required();
    sweep->add_option("--steps", sopt.steps, "Grid points (inclusive)")->required();
    sweep->add_option("--measures", sopt.measures, "Comma-separated measure names")->required();
    sweep->add_option("--out", sopt.out_path, "Output CSV path (default stdout)");
    double sv_eps = 0.0, sv_tol = 0.0;
    auto* s_eps = sweep->add_option("--eps", sv_eps, "Boundary epsilon");
    auto* s_tol = sweep->add_option("--tol", sv_tol, "Quadrature tolerance");

    FigureOptions fopt;
    CLI::App* figure = app.add_subcommand("figure", "Write a figure dataset as CSV files");
    figure->add_option("--name", fopt.name, "fig1|psi1|psi2|chi-compare|chi3-smooth")->required();
    figure->add_option("--out", fopt.out_dir, "Output directory")->required();
    figure->add_option("--points", fopt.points, "Grid points per curve")->check(CLI::Range(2, 100001));
    double fv_eps = 0.0, fv_tol = 0.0;
    auto* f_eps = figure->add_option("--eps", fv_eps, "Boundary epsilon");
    auto* f_tol = figure->add_option("--tol", fv_tol, "Quadrature tolerance");

    int bip_n = 0;
    CLI::App* bipartitions = app.add_subcommand("bipartitions", "List canonical bipartitions");
    bipartitions->add_option("--n", bip_n, "Qubit count")->required()->check(CLI::Range(2, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message/help
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (measure->parsed()) {
            if (mopt.state_path.empty() && mopt.family.empty())
                throw CLI::ValidationError("need --state or --family");
            mopt.eps_flag = (*m_eps) ? std::optional<double>(mv_eps) : std::nullopt;
            mopt.tol_flag = (*m_tol) ? std::optional<double>(mv_tol) : std::nullopt;
            return cmd_measure(mopt);
        }
        if (sweep->parsed()) {
            sopt.eps_flag = (*s_eps) ? std::optional<double>(sv_eps) : std::nullopt;
            sopt.tol_flag = (*s_tol) ? std::optional<double>(sv_tol) : std::nullopt;
            return cmd_sweep(sopt);
        }
        if (figure->parsed()) {
            fopt.eps_flag = (*f_eps) ? std::optional<double>(fv_eps) : std::nullopt;
            fopt.tol_flag = (*f_tol) ? std::optional<double>(fv_tol) : std::nullopt;
            return cmd_figure(fopt);
        }
        if (bipartitions->parsed()) return cmd_bipartitions(bip_n);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qgeo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case qgeo::errc::malformed_state_file:
                return kExitBadState;
            case qgeo::errc::bad_range:
            case qgeo::errc::unsupported_n:
            case qgeo::errc::wrong_qubit_count:
            case qgeo::errc::bad_sizes:
            case qgeo::errc::not_normalized:
                return kExitUsage;
            default:
                return kExitNumerical;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
