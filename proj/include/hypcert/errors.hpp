#pragma once

#include <stdexcept>
#include <string>

namespace hypcert {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Modulus is not an odd prime coprime to 6.
struct invalid_modulus_error : error {
    using error::error;
};

// A stated precondition of an operation does not hold for the given inputs.
struct precondition_error : error {
    using error::error;
};

// p-adic valuation requested for zero.
struct undefined_valuation_error : error {
    using error::error;
};

// Curve with vanishing discriminant where a nonsingular model is required.
struct singular_curve_error : error {
    using error::error;
};

// A series coefficient turned out to have negative p-adic valuation. The
// fixed data used here have p-integral coefficients, so this signals a bug
// in the arithmetic kernels rather than bad user input.
struct integrality_error : error {
    using error::error;
};

// A computation would exceed the configured size bound.
struct resource_limit_error : error {
    using error::error;
};

// Malformed command line or configuration.
struct usage_error : error {
    using error::error;
};

} // namespace hypcert
