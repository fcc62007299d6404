// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_ERRORS_HPP
#define GFMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfmix {

/// Transform argument outside a family's convergence strip. The message
/// names the strip boundary that was crossed.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation not defined for the requested family (e.g. Laplace transform
/// of a kernel whose support is not contained in the nonnegative reals).
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Quadrature or summation exhausted its budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gfmix

#endif
