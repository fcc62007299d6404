// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "app.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gfmix::cli::run(args, std::cout, std::cerr);
}
