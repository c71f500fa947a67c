#ifndef AUTORES_ERRORS_HPP
#define AUTORES_ERRORS_HPP

#include <stdexcept>

namespace autores {

// Precondition / input violations. The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfDomain : ValidationError {
    using ValidationError::ValidationError;
};

struct AtBifurcation : ValidationError {
    using ValidationError::ValidationError;
};

struct PoleAtNonPositiveInteger : ValidationError {
    using ValidationError::ValidationError;
};

struct SpanTooShort : ValidationError {
    using ValidationError::ValidationError;
};

struct WindowTooShort : ValidationError {
    using ValidationError::ValidationError;
};

// Asked for capture data at a special (decay) phase.
struct SpecialPhase : ValidationError {
    using ValidationError::ValidationError;
};

struct NotCaptured : ValidationError {
    using ValidationError::ValidationError;
};

// Numeric failures. The CLI maps these to exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepUnderflow : NumericError {
    using NumericError::NumericError;
};

struct NonFiniteState : NumericError {
    using NumericError::NumericError;
};

struct FitDiverged : NumericError {
    using NumericError::NumericError;
};

// The connection formula left its regime (rho^2 < 0). Never clamped.
struct NegativeRho2 : NumericError {
    using NumericError::NumericError;
};

struct Overflow : NumericError {
    using NumericError::NumericError;
};

} // namespace autores

#endif
