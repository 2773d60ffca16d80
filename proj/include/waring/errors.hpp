#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Every failure mode the library reports. The names double as the
// machine-readable "error" field in CLI output.
enum class errc {
    syntax_error,
    nonzero_constant_term,
    zero_polynomial,
    dimension_mismatch,
    arity_mismatch,
    missing_assignment,
    zero_polynomial_input,
    pivot_zero,
    target_zero,
    degenerate_side_form,
    order_exceeds_cap,
    order_out_of_range,
    order_mismatch,
    target_not_in_band,
    zero_on_r_diagonal,
    internal_verification_failure,
    bad_input,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace waring
