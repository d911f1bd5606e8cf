// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "cli.hpp"

int main(int argc, char** argv) {
    return qfrac::cli::run_cli(argc, argv);
}
