#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apolar {

/// Mismatched ambient variable counts or incompatible shapes.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument violates a documented requirement (non-homogeneous input,
/// count out of range, unsupported order, ...).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural precondition fails (ideal not strongly stable, quotient not
/// Artinian, basis not certified, ...).
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

} // namespace apolar

#endif
