#pragma once

#include <stdexcept>
#include <string>

namespace qgeo {

// One enumerator per contract violation so callers and tests can tell
// failure modes apart without parsing messages.
enum class errc {
    non_hermitian_input,
    no_convergence,
    negative_eigenvalue,
    dimension_overflow,
    not_normalized,
    bad_subset,
    unsupported_n,
    unsupported_dim,
    norm_too_large,
    boundary_point,
    bad_range,
    wrong_qubit_count,
    bad_sizes,
    dim_mismatch,
    malformed_state_file,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace qgeo
