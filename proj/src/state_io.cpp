#include "qgeo/state_io.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace qgeo {

PureState load_state(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::malformed_state_file, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes"))
        fail(errc::malformed_state_file, "state file needs \"n\" and \"amplitudes\"");
    if (!doc["n"].is_number_integer())
        fail(errc::malformed_state_file, "\"n\" must be an integer");
    const int n = doc["n"].get<int>();
    if (n < kMinQubits || n > kMaxQubits)
        fail(errc::malformed_state_file, "\"n\" must be in 2..6");

    const auto& arr = doc["amplitudes"];
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(1) << n)
        fail(errc::malformed_state_file, "\"amplitudes\" must hold exactly 2^n pairs");

    std::vector<cplx> amps;
    amps.reserve(arr.size());
    double norm_sq = 0.0;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            fail(errc::malformed_state_file, "each amplitude must be a [re, im] pair");
        const cplx a(pair[0].get<double>(), pair[1].get<double>());
        norm_sq += std::norm(a);
        amps.push_back(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-6)
        fail(errc::malformed_state_file, "state norm deviates from 1 by more than 1e-6");
    return PureState::normalized(n, std::move(amps));
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::malformed_state_file, "cannot open state file: " + path);
    return load_state(in);
}

void save_state(const PureState& psi, std::ostream& out) {
    nlohmann::json doc;
    doc["n"] = psi.n_qubits();
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& a : psi.amplitudes()) arr.push_back({a.real(), a.imag()});
    doc["amplitudes"] = std::move(arr);
    out << doc.dump(2) << "\n";
}

void save_state_file(const PureState& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::malformed_state_file, "cannot open output file: " + path);
    save_state(psi, out);
}

}  // namespace qgeo
