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

// Independent reference computations for tests. Nothing here reuses the
// library's graph, routing or enforcement code.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdnguard/generator.hpp"
#include "sdnguard/model.hpp"
#include "sdnguard/policy.hpp"

namespace sdnguard::oracle {

struct ReferencePath {
    double cost = 0.0;
    std::vector<std::string> names;
};

/// Enumerates every simple path between two terminals that relays through
/// switch ports only, and returns the smallest by (cost, vertex count,
/// vertex names). Exponential; meant for small graphs.
std::optional<ReferencePath> brute_force_path(const TopologySpec& spec,
                                              const std::string& src,
                                              const std::string& dst);

/// Number of simple paths enumerated by the last brute_force_path call.
std::size_t last_enumerated_paths();

/// Breadth-first connectivity between two terminals without terminal relays.
bool connected(const TopologySpec& spec, const std::string& src, const std::string& dst);

/// Pairs that must be deliverable once every allowed pair has carried one
/// packet: allowed, connected pairs whose source is not blacklisted, plus
/// their responses unless a drop rule stops those.
std::set<TerminalPair> expected_reachable(const TopologySpec& spec, const Rspm& rspm);

/// Random RSPM over the terminals of `spec`, satisfying the upload
/// preconditions (no self pairs, allow and deny disjoint).
Rspm random_rspm(const TopologySpec& spec, Rng& rng, std::size_t max_allow, std::size_t max_deny,
                 std::size_t max_blacklisted);

/// Multi-switch topology with redundant links and small integer costs, at
/// most `max_vertices` vertices. Every terminal has one attachment; the
/// fabric may be disconnected.
TopologySpec random_routing_topology(Rng& rng, std::size_t max_vertices);

/// Fixture drawn with random small parameters; retried until the topology
/// has at most `max_vertices` vertices.
Fixture small_random_fixture(Rng& rng, std::size_t max_vertices, std::uint32_t max_terminals,
                             std::uint32_t max_switches, std::uint32_t max_allow);

} // namespace sdnguard::oracle
