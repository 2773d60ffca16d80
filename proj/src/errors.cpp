#include "waring/errors.hpp"

namespace waring {

const char* errc_name(errc code) {
    switch (code) {
        case errc::syntax_error: return "SyntaxError";
        case errc::nonzero_constant_term: return "NonzeroConstantTerm";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::missing_assignment: return "MissingAssignment";
        case errc::zero_polynomial_input: return "ZeroPolynomialInput";
        case errc::pivot_zero: return "PivotZero";
        case errc::target_zero: return "TargetZero";
        case errc::degenerate_side_form: return "DegenerateSideForm";
        case errc::order_exceeds_cap: return "OrderExceedsCap";
        case errc::order_out_of_range: return "OrderOutOfRange";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::target_not_in_band: return "TargetNotInBand";
        case errc::zero_on_r_diagonal: return "ZeroOnRDiagonal";
        case errc::internal_verification_failure: return "InternalVerificationFailure";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

} // namespace waring
