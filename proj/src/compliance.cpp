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

#include "sdnguard/compliance.hpp"

#include <map>

#include "sdnguard/routing.hpp"

namespace sdnguard {

namespace {

constexpr const char* kProbePayload = "compliance-probe";

std::vector<TerminalPair> all_pairs(std::span<const Terminal> terminals)
{
    std::vector<TerminalPair> pairs;
    for (const auto& a : terminals)
        for (const auto& b : terminals)
            if (a.id != b.id)
                pairs.push_back({a.id, b.id});
    return pairs;
}

bool connected(const TopologyGraph& graph, const TerminalPair& pair)
{
    if (!graph.terminal(pair.src) || !graph.terminal(pair.dst))
        return false;
    return least_cost_path(graph, pair.src, pair.dst).has_value();
}

} // namespace

std::set<TerminalPair> probe_pairs(const Network& network,
                                   const Controller* controller,
                                   std::span<const TerminalPair> pairs,
                                   ProbeMode mode)
{
    const auto& graph = network.topology();
    std::set<TerminalPair> reached;
    for (const auto& pair : pairs) {
        const Terminal* src = graph.terminal(pair.src);
        const Terminal* dst = graph.terminal(pair.dst);
        if (!src || !dst || pair.src == pair.dst)
            continue;
        Network scratch = network;
        std::optional<Controller> brain;
        if (controller && mode == ProbeMode::WithController)
            brain.emplace(*controller);
        const auto trace = scratch.inject(pair.src, Packet{headers_between(*src, *dst), kProbePayload},
                                          brain ? &*brain : nullptr);
        if (trace.delivered() && trace.delivered_to == pair.dst)
            reached.insert(pair);
    }
    return reached;
}

std::set<TerminalPair> reachable_pairs(const Network& network,
                                       const Controller* controller,
                                       std::span<const Terminal> terminals,
                                       ProbeMode mode)
{
    const auto pairs = all_pairs(terminals);
    return probe_pairs(network, controller, pairs, mode);
}

ComplianceReport check_rspm_compliance(const Rspm& rspm,
                                       const Network& network,
                                       const Controller& controller,
                                       std::optional<std::span<const TerminalPair>> sample)
{
    const auto& graph = network.topology();
    std::vector<TerminalPair> pairs;
    if (sample)
        pairs.assign(sample->begin(), sample->end());
    else
        pairs = all_pairs(graph.spec().terminals);

    const auto reached = probe_pairs(network, &controller, pairs, ProbeMode::WithController);

    ComplianceReport report;
    report.probed_pairs = pairs.size();
    for (const auto& pair : pairs) {
        const ComplianceFinding finding{pair, {}, {}};
        if (reached.count(pair)) {
            if (rspm.allow.count(pair))
                report.allowed_reached.push_back(finding);
            else if (rspm.allow.count(pair.reversed()))
                report.reverse_of_allowed.push_back(finding);
            else
                report.leaks.push_back(finding);
        } else if (rspm.allow.count(pair) && connected(graph, pair)) {
            report.gaps.push_back(finding);
        }
    }
    return report;
}

ComplianceReport check_compliance(const Spm& spm,
                                  std::span<const WebService> services,
                                  std::span<const ServiceConsumer> consumers,
                                  const Network& network,
                                  const Controller& controller)
{
    const auto& graph = network.topology();
    std::map<TerminalId, Principal> hosted;
    std::map<Principal, TerminalId> placed;
    for (const auto& s : services) {
        hosted.emplace(s.terminal, Principal::service(s.id));
        placed.emplace(Principal::service(s.id), s.terminal);
    }
    for (const auto& c : consumers) {
        hosted.emplace(c.terminal, Principal::consumer(c.id));
        placed.emplace(Principal::consumer(c.id), c.terminal);
    }

    auto principal_at = [&](const TerminalId& t) -> const Principal* {
        auto it = hosted.find(t);
        return it == hosted.end() ? nullptr : &it->second;
    };
    auto allows = [&](const Principal* src, const Principal* dst) {
        return src && dst && dst->kind == Principal::Kind::Service
            && spm.allow.count(AccessPair{*src, ServiceId(dst->id)}) > 0;
    };
    auto finding = [&](const TerminalPair& pair) {
        const auto* a = principal_at(pair.src);
        const auto* b = principal_at(pair.dst);
        return ComplianceFinding{pair, a ? a->id : std::string(), b ? b->id : std::string()};
    };

    const auto pairs = all_pairs(graph.spec().terminals);
    const auto reached = probe_pairs(network, &controller, pairs, ProbeMode::WithController);

    ComplianceReport report;
    report.probed_pairs = pairs.size();
    for (const auto& pair : reached) {
        const auto* a = principal_at(pair.src);
        const auto* b = principal_at(pair.dst);
        if (allows(a, b))
            report.allowed_reached.push_back(finding(pair));
        else if (allows(b, a))
            report.reverse_of_allowed.push_back(finding(pair));
        else
            report.leaks.push_back(finding(pair));
    }
    for (const auto& access : spm.allow) {
        auto src = placed.find(access.src);
        auto dst = placed.find(Principal::service(access.dst));
        if (src == placed.end() || dst == placed.end())
            continue;
        const TerminalPair pair{src->second, dst->second};
        if (!reached.count(pair) && connected(graph, pair))
            report.gaps.push_back(finding(pair));
    }
    return report;
}

} // namespace sdnguard
