// errors.hpp - exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace phasespec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parameter set violates the squeezed-bath physicality bound |M| <= sqrt(N(N+1))
struct PhysicalityViolation : Error {
    using Error::Error;
};

// parameter outside its admissible range (|Gamma12| > Gamma, Gamma_d <= 0, N < 0, ...)
struct RangeViolation : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// steady-state coefficient matrix is not invertible
struct SingularSystem : Error {
    using Error::Error;
};

// density matrix has off-X elements above tolerance
struct NotXState : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

struct UnknownFigure : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace phasespec
