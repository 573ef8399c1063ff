// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "sdg/io.hpp"

namespace sdg {

/// Options for the randomized invariant suite behind `sdgraph verify`.
struct SelfCheckOptions {
    Family family = Family::Directed;
    int max_n = 8;       // instance sizes drawn from [2, max_n]
    int trials = 50;     // random instances per suite
    std::uint64_t seed = 0;
};

struct SelfCheckResult {
    std::string report;  // deterministic for fixed options
    int checks = 0;
    int failures = 0;

    bool ok() const { return failures == 0; }
};

/// Runs every library invariant on random instances: metric axioms,
/// boundary-set containments, oracle agreement with the reference code
/// path, geodesic interval laws, and the corona closed-form/direct
/// equivalences for the selected family. Reproducible per seed.
SelfCheckResult run_selfcheck(const SelfCheckOptions& options);

}  // namespace sdg
