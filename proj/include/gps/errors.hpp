#pragma once

#include <stdexcept>
#include <string>

namespace gps {

/// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition or input contract was violated.
struct contract_error : error {
    using error::error;
};

/// The requested object would exceed platform capacity (e.g. a product with
/// more vertices than fit in an int).
struct capacity_error : contract_error {
    using contract_error::contract_error;
};

/// The instance is larger than the configured exact-search cap.
struct size_cap_error : contract_error {
    using contract_error::contract_error;
};

/// A randomized routine exhausted its draw budget without meeting its bound.
struct sampling_error : error {
    using error::error;
};

/// File or format problem.
struct io_error : error {
    using error::error;
};

/// Outcome of a non-throwing validation: ok, or the first violation found.
struct ValidationResult {
    bool ok = true;
    std::string violation;
};

} // namespace gps
