// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_TOOLS_APP_HPP
#define GFMIX_TOOLS_APP_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gfmix::cli {

/// Inclusive evaluation grid `start:stop:step`.
struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    static Grid parse(const std::string& text); // throws std::invalid_argument
    std::size_t count() const;
    double at(std::size_t i) const;
};

/// Formats a value at 12 significant digits (the CSV emission width).
std::string format12(double v);

/// Runs one invocation. Exit codes: 0 success, 1 verification failure or
/// numeric non-convergence, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gfmix::cli

#endif
