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

#include "sdnguard/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "sdnguard/error.hpp"

namespace sdnguard {

std::vector<std::string> Path::names() const
{
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices)
        out.push_back(vertex_name(v));
    return out;
}

Path Path::reversed() const
{
    Path r{vertices, cost};
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

std::vector<SwitchHop> switch_hops(const Path& path)
{
    std::vector<SwitchHop> hops;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const auto* in = std::get_if<SwitchPort>(&path.vertices[i]);
        const auto* out = std::get_if<SwitchPort>(&path.vertices[i + 1]);
        if (in && out && in->switch_id == out->switch_id) {
            hops.push_back({in->switch_id, in->port_no, out->port_no});
            ++i;
        }
    }
    return hops;
}

namespace {

struct Distance {
    double cost = std::numeric_limits<double>::infinity();
    std::size_t hops = std::numeric_limits<std::size_t>::max();

    friend bool operator<(const Distance& a, const Distance& b)
    { return a.cost < b.cost || (a.cost == b.cost && a.hops < b.hops); }
    friend bool operator==(const Distance&, const Distance&) = default;
    bool finite() const { return hops != std::numeric_limits<std::size_t>::max(); }
};

Distance extend(const Distance& d, double cost) { return {cost + d.cost, d.hops + 1}; }

// Distance of every vertex *to* `target`. Terminals other than the target
// are reached but never relay.
std::vector<Distance> distances_to(const TopologyGraph& graph, TopologyGraph::Index target)
{
    using Item = std::pair<Distance, TopologyGraph::Index>;
    auto later = [](const Item& a, const Item& b) { return b.first < a.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);

    std::vector<Distance> dist(graph.vertex_count());
    dist[target] = {0.0, 0};
    queue.push({dist[target], target});
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (dist[u] < d)
            continue;
        if (u != target && graph.is_terminal(u))
            continue;
        for (const auto& edge : graph.neighbours(u)) {
            const Distance candidate = extend(d, edge.cost);
            if (candidate < dist[edge.to]) {
                dist[edge.to] = candidate;
                queue.push({candidate, edge.to});
            }
        }
    }
    return dist;
}

} // namespace

std::optional<Path> least_cost_path(const TopologyGraph& graph,
                                    const TerminalId& src,
                                    const TerminalId& dst)
{
    const auto from = graph.index_of(src);
    const auto to = graph.index_of(dst);
    if (!from)
        throw Error(ErrorCode::UnknownVertex, "unknown terminal '" + src.str() + "'");
    if (!to)
        throw Error(ErrorCode::UnknownVertex, "unknown terminal '" + dst.str() + "'");
    if (src == dst)
        throw Error(ErrorCode::PreconditionViolated,
                    "path endpoints must be distinct terminals (got '" + src.str() + "' twice)");

    const auto dist = distances_to(graph, *to);
    if (!dist[*from].finite())
        return std::nullopt;

    // Walk the shortest-path DAG greedily by smallest vertex name. Hop counts
    // strictly decrease along the walk, so it cannot revisit a vertex, and
    // greedy choice yields the lexicographically smallest optimal sequence.
    Path path;
    path.cost = dist[*from].cost;
    auto u = *from;
    path.vertices.push_back(graph.vertex(u));
    while (u != *to) {
        std::optional<TopologyGraph::Index> next;
        for (const auto& edge : graph.neighbours(u)) {
            const auto v = edge.to;
            if (v != *to && graph.is_terminal(v))
                continue;
            if (!dist[v].finite() || !(extend(dist[v], edge.cost) == dist[u]))
                continue;
            if (!next || graph.name(v) < graph.name(*next))
                next = v;
        }
        u = *next;
        path.vertices.push_back(graph.vertex(u));
    }
    return path;
}

} // namespace sdnguard
