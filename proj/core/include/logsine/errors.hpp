#pragma once

#include <stdexcept>
#include <string>

namespace logsine {

/// A numeric result could not be certified to the requested absolute error.
class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature ran out of refinement levels before its error estimate met the target.
class refinement_exhausted : public certification_error {
public:
    using certification_error::certification_error;
};

} // namespace logsine
