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
#include <random>

#include "sdnguard/deployment.hpp"

namespace sdnguard {

// Engine with a fixed, library-independent output sequence; all draws go
// through uniform_below() so results do not depend on the standard library's
// distribution implementations.
using Rng = std::mt19937_64;

/// Unbiased draw in [0, bound). bound must be > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct GeneratorParams {
    std::uint32_t switches = 1;
    std::uint32_t terminals = 2;
    std::uint32_t allow_pairs = 1;
    std::uint32_t deny_pairs = 0;
    std::uint32_t malicious = 0;
    // Inter-switch links beyond the spanning tree, as a fraction of switches.
    double extra_link_ratio = 0.5;
    // Skip some spanning-tree links so the fabric may be partitioned.
    bool allow_partition = false;
    std::uint32_t max_link_cost = 5;
    std::uint64_t seed = 0;
};

/// Random topology, principals and policy. Every terminal is attached to one
/// switch and hosts exactly one principal. Throws Error(GenerationFailure)
/// when the requested pairs cannot be drawn as distinct ordered pairs.
Fixture generate_fixture(const GeneratorParams& params);

} // namespace sdnguard
