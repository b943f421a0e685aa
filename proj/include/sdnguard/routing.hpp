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

#include <optional>
#include <string>
#include <vector>

#include "sdnguard/model.hpp"

namespace sdnguard {

struct Path {
    std::vector<Endpoint> vertices;
    double cost = 0.0;

    std::vector<std::string> names() const;
    Path reversed() const;
};

/// One traversal of a switch: the packet enters on `in` and leaves on `out`.
struct SwitchHop {
    SwitchId switch_id;
    PortNo in = 0;
    PortNo out = 0;
};

/// Consecutive port pairs of a terminal-to-terminal path, in travel order.
std::vector<SwitchHop> switch_hops(const Path& path);

/// Minimum-cost path between two distinct terminals.
///
/// Equal-cost candidates are ordered first by vertex count, then by
/// lexicographic comparison of their vertex-name sequences; the smallest
/// wins. Terminals never relay traffic, so only the endpoints may be
/// terminals. Costs are compared exactly.
///
/// Throws Error(UnknownVertex) for undeclared terminals and
/// Error(PreconditionViolated) when src == dst. Returns nullopt when the two
/// terminals are disconnected.
std::optional<Path> least_cost_path(const TopologyGraph& graph,
                                    const TerminalId& src,
                                    const TerminalId& dst);

} // namespace sdnguard
