#pragma once

#include <iosfwd>
#include <string>

#include "qgeo/quantum_state.hpp"

namespace qgeo {

// State file schema: {"n": <int>, "amplitudes": [[re, im], ...]} with exactly
// 2^n pairs. The reader renormalizes when the norm deviates from 1 by at most
// 1e-6 and throws errc::malformed_state_file otherwise (or on any schema
// violation).
PureState load_state(std::istream& in);
PureState load_state_file(const std::string& path);

void save_state(const PureState& psi, std::ostream& out);
void save_state_file(const PureState& psi, const std::string& path);

}  // namespace qgeo
