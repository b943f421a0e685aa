/*
 * Copyright 2026 The sdnguard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include "sdnguard/compliance.hpp"

namespace sdnguard {

struct BenchParams {
    std::uint32_t switches = 1;
    std::uint32_t terminals = 2;
    std::uint32_t pairs = 1;
    std::uint64_t seed = 0;
    std::uint32_t repeats = 5;
    std::uint32_t compliance_sample = 200;
};

/// Seconds, over the repeats of one measurement.
struct DurationStats {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    std::uint32_t samples = 0;
};

struct BenchResult {
    BenchParams params;
    std::size_t rspm_size = 0;
    std::size_t rules = 0;
    DurationStats transform;
    DurationStats synthesis;         // all allowed pairs, per repeat
    DurationStats packet_in_latency;  // per decision
    ComplianceReport compliance;

    /// (mean transform + mean synthesis) / pairs.
    double per_pair_seconds() const;
};

/// Generates a connected topology and a policy of `pairs` allow pairs from
/// the seed, times policy transformation and rule synthesis, drives every
/// allowed pair through the controller and then probes a sample of pairs for
/// compliance. Throws Error(GenerationFailure) for unsatisfiable sizes.
BenchResult run_bench(const BenchParams& params);

} // namespace sdnguard
