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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "sdnguard/error.hpp"

namespace sdnguard::oracle {

namespace {

struct RefGraph {
    std::vector<std::string> names;
    std::vector<bool> terminal;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::map<std::string, std::size_t> index;

    std::size_t add(const std::string& name, bool is_terminal)
    {
        auto [it, fresh] = index.emplace(name, names.size());
        if (fresh) {
            names.push_back(name);
            terminal.push_back(is_terminal);
            adj.emplace_back();
        }
        return it->second;
    }
};

std::string port_name(const std::string& sw, PortNo p)
{
    return sw + ".p" + std::to_string(p);
}

RefGraph build(const TopologySpec& spec)
{
    RefGraph g;
    for (const auto& t : spec.terminals)
        g.add(t.id.str(), true);
    for (const auto& s : spec.switches) {
        std::vector<std::size_t> ports;
        for (auto p : s.ports)
            ports.push_back(g.add(port_name(s.id.str(), p), false));
        for (auto a : ports)
            for (auto b : ports)
                if (a != b)
                    g.adj[a].push_back({b, 0.0});
    }
    auto lookup = [&](const Endpoint& e) -> std::optional<std::size_t> {
        std::string name = std::holds_alternative<TerminalId>(e)
            ? std::get<TerminalId>(e).str()
            : port_name(std::get<SwitchPort>(e).switch_id.str(), std::get<SwitchPort>(e).port_no);
        auto it = g.index.find(name);
        if (it == g.index.end())
            return std::nullopt;
        return it->second;
    };
    for (const auto& l : spec.links) {
        auto a = lookup(l.a);
        auto b = lookup(l.b);
        if (!a || !b || *a == *b)
            continue;
        const auto* pa = std::get_if<SwitchPort>(&l.a);
        const auto* pb = std::get_if<SwitchPort>(&l.b);
        if (pa && pb && pa->switch_id == pb->switch_id)
            continue;
        g.adj[*a].push_back({*b, l.cost});
        g.adj[*b].push_back({*a, l.cost});
    }
    return g;
}

std::size_t enumerated = 0;

} // namespace

std::optional<ReferencePath> brute_force_path(const TopologySpec& spec, const std::string& src,
                                              const std::string& dst)
{
    const RefGraph g = build(spec);
    enumerated = 0;
    auto s = g.index.find(src);
    auto d = g.index.find(dst);
    if (s == g.index.end() || d == g.index.end() || s == d)
        return std::nullopt;

    std::optional<std::tuple<double, std::size_t, std::vector<std::string>>> best;
    std::vector<std::size_t> stack{s->second};
    std::vector<bool> on_path(g.names.size(), false);
    on_path[s->second] = true;

    auto dfs = [&](auto&& self, std::size_t u, double cost) -> void {
        if (u == d->second) {
            ++enumerated;
            std::vector<std::string> names;
            for (auto v : stack)
                names.push_back(g.names[v]);
            auto candidate = std::make_tuple(cost, stack.size(), std::move(names));
            if (!best || candidate < *best)
                best = std::move(candidate);
            return;
        }
        if (u != s->second && g.terminal[u])
            return;
        for (auto [v, c] : g.adj[u]) {
            if (on_path[v])
                continue;
            on_path[v] = true;
            stack.push_back(v);
            self(self, v, cost + c);
            stack.pop_back();
            on_path[v] = false;
        }
    };
    dfs(dfs, s->second, 0.0);
    if (!best)
        return std::nullopt;
    return ReferencePath{std::get<0>(*best), std::get<2>(*best)};
}

std::size_t last_enumerated_paths()
{
    return enumerated;
}

bool connected(const TopologySpec& spec, const std::string& src, const std::string& dst)
{
    const RefGraph g = build(spec);
    auto s = g.index.find(src);
    auto d = g.index.find(dst);
    if (s == g.index.end() || d == g.index.end() || s == d)
        return false;
    std::vector<bool> seen(g.names.size(), false);
    std::queue<std::size_t> q;
    q.push(s->second);
    seen[s->second] = true;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        if (u == d->second)
            return true;
        if (u != s->second && g.terminal[u])
            continue;
        for (auto [v, c] : g.adj[u])
            if (!seen[v]) {
                seen[v] = true;
                q.push(v);
            }
    }
    return false;
}

std::set<TerminalPair> expected_reachable(const TopologySpec& spec, const Rspm& rspm)
{
    auto dropped = [&](const TerminalPair& p) {
        return rspm.deny_all_from.count(p.src) || rspm.deny.count(p);
    };
    std::set<TerminalPair> out;
    for (const auto& p : rspm.allow) {
        if (dropped(p) || !connected(spec, p.src.str(), p.dst.str()))
            continue;
        out.insert(p);
        if (!dropped(p.reversed()))
            out.insert(p.reversed());
    }
    return out;
}

Rspm random_rspm(const TopologySpec& spec, Rng& rng, std::size_t max_allow, std::size_t max_deny,
                 std::size_t max_blacklisted)
{
    Rspm r;
    const auto& ts = spec.terminals;
    if (ts.size() < 2)
        return r;
    auto draw_pair = [&] {
        auto a = uniform_below(rng, ts.size());
        auto b = uniform_below(rng, ts.size() - 1);
        if (b >= a)
            ++b;
        return TerminalPair{ts[a].id, ts[b].id};
    };
    const auto allow = uniform_below(rng, max_allow + 1);
    for (std::size_t i = 0; i < allow; ++i)
        r.allow.insert(draw_pair());
    const auto deny = uniform_below(rng, max_deny + 1);
    for (std::size_t i = 0; i < deny; ++i)
        if (auto p = draw_pair(); !r.allow.count(p))
            r.deny.insert(p);
    const auto black = uniform_below(rng, max_blacklisted + 1);
    for (std::size_t i = 0; i < black; ++i)
        r.deny_all_from.insert(ts[uniform_below(rng, ts.size())].id);
    return r;
}

TopologySpec random_routing_topology(Rng& rng, std::size_t max_vertices)
{
    TopologySpec spec;
    const std::size_t terminals = 2 + uniform_below(rng, 3);
    const std::size_t switches = 2 + uniform_below(rng, 3);
    for (std::size_t s = 0; s < switches; ++s)
        spec.switches.push_back({SwitchId("sw" + std::to_string(s + 1)), {}});
    std::size_t vertices = terminals;
    auto new_port = [&](std::size_t s) {
        auto& sw = spec.switches[s];
        sw.ports.push_back(static_cast<PortNo>(sw.ports.size() + 1));
        ++vertices;
        return SwitchPort{sw.id, sw.ports.back()};
    };
    auto cost = [&] { return static_cast<double>(1 + uniform_below(rng, 4)); };
    for (std::size_t t = 0; t < terminals; ++t) {
        const auto k = static_cast<std::uint32_t>(t + 1);
        spec.terminals.push_back({TerminalId("t" + std::to_string(k)), Ipv4Address(0x0a000000u + k),
                                  MacAddress(k)});
        spec.links.push_back({spec.terminals.back().id, new_port(uniform_below(rng, switches)), cost()});
    }
    // Inter-switch links until the vertex budget runs out; some switches may
    // stay isolated.
    while (vertices + 2 <= max_vertices && uniform_below(rng, 6) != 0) {
        const auto a = uniform_below(rng, switches);
        auto b = uniform_below(rng, switches - 1);
        if (b >= a)
            ++b;
        spec.links.push_back({new_port(a), new_port(b), cost()});
    }
    return spec;
}

Fixture small_random_fixture(Rng& rng, std::size_t max_vertices, std::uint32_t max_terminals,
                             std::uint32_t max_switches, std::uint32_t max_allow)
{
    for (;;) {
        GeneratorParams p;
        p.switches = 1 + static_cast<std::uint32_t>(uniform_below(rng, max_switches));
        p.terminals = 2 + static_cast<std::uint32_t>(uniform_below(rng, max_terminals - 1));
        const std::uint32_t cap = std::min(max_allow, p.terminals * (p.terminals - 1) / 2);
        p.allow_pairs = 1 + static_cast<std::uint32_t>(uniform_below(rng, cap));
        p.deny_pairs = static_cast<std::uint32_t>(uniform_below(rng, 3));
        p.malicious = static_cast<std::uint32_t>(uniform_below(rng, 2));
        p.extra_link_ratio = static_cast<double>(uniform_below(rng, 3)) / 2.0;
        p.allow_partition = uniform_below(rng, 4) == 0;
        p.max_link_cost = 1 + static_cast<std::uint32_t>(uniform_below(rng, 3));
        p.seed = rng();
        Fixture f;
        try {
            f = generate_fixture(p);
        } catch (const Error&) {
            continue;
        }
        std::size_t vertices = f.topology.terminals.size();
        for (const auto& s : f.topology.switches)
            vertices += s.ports.size();
        if (vertices <= max_vertices)
            return f;
    }
}

} // namespace sdnguard::oracle
