#ifndef SHOULDER_ERRORS_HPP
#define SHOULDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shoulder {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cone construction
struct InvalidLimits : Error { using Error::Error; };
struct DegenerateCone : Error { using Error::Error; };

// Inclusion testing
struct NoWedgeFound : Error { using Error::Error; };

// Profile / trajectory files
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };

// Coupling
struct OutOfRange : Error { using Error::Error; };
struct NeverActivates : Error { using Error::Error; };

// C-space
struct ResolutionMismatch : Error { using Error::Error; };

} // namespace shoulder

#endif
