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

#include "sdnguard/controller.hpp"

#include <algorithm>

#include "sdnguard/error.hpp"

namespace sdnguard {

namespace {

FlowMatch exact_match(const Terminal& src, const Terminal& dst, PortNo in_port)
{
    return {src.mac, src.ip, dst.mac, dst.ip, in_port};
}

} // namespace

Controller::Controller(std::shared_ptr<const TopologyGraph> topology)
    : topology_(std::move(topology))
{
    if (!topology_)
        throw Error(ErrorCode::InvalidArgument, "controller needs a topology");
}

void Controller::check_terminals(const Rspm& rspm) const
{
    auto known = [&](const TerminalId& t) {
        if (!topology_->terminal(t))
            throw Error(ErrorCode::UnknownTerminal, "policy names undeclared terminal '" + t.str() + "'");
    };
    for (const auto* pairs : {&rspm.allow, &rspm.deny}) {
        for (const auto& p : *pairs) {
            known(p.src);
            known(p.dst);
            if (p.src == p.dst)
                throw Error(ErrorCode::PreconditionViolated,
                            "policy pairs terminal '" + p.src.str() + "' with itself");
        }
    }
    for (const auto& t : rspm.deny_all_from)
        known(t);
    for (const auto& p : rspm.allow)
        if (rspm.deny.count(p))
            throw Error(ErrorCode::PreconditionViolated,
                        "pair " + p.src.str() + " -> " + p.dst.str() + " is both allowed and denied");
}

RuleSet Controller::drop_rules(const Rspm& rspm) const
{
    RuleSet rules;
    for (const auto& t : rspm.deny_all_from) {
        const auto edge = topology_->attachment(t);
        if (!edge)
            continue;
        const Terminal& src = *topology_->terminal(t);
        FlowMatch match;
        match.src_mac = src.mac;
        match.src_ip = src.ip;
        rules[edge->switch_id].insert({match, FlowAction::drop()});
    }
    for (const auto& p : rspm.deny) {
        const auto edge = topology_->attachment(p.src);
        if (!edge)
            continue;
        const Terminal& src = *topology_->terminal(p.src);
        const Terminal& dst = *topology_->terminal(p.dst);
        FlowMatch match{src.mac, src.ip, dst.mac, dst.ip, std::nullopt};
        rules[edge->switch_id].insert({match, FlowAction::drop()});
    }
    return rules;
}

bool Controller::permits(const TerminalPair& pair) const
{
    return rspm_->allow.count(pair) && !rspm_->deny.count(pair)
        && !rspm_->deny_all_from.count(pair.src);
}

std::optional<Path> Controller::routing_path(const TerminalId& src, const TerminalId& dst) const
{
    if (src < dst)
        return least_cost_path(*topology_, src, dst);
    auto path = least_cost_path(*topology_, dst, src);
    if (!path)
        return std::nullopt;
    return path->reversed();
}

std::shared_ptr<const Controller::PairRules> Controller::build_pair(const TerminalPair& pair) const
{
    auto path = routing_path(pair.src, pair.dst);
    if (!path)
        throw Error(ErrorCode::NoPath, "no path between " + pair.src.str() + " and " + pair.dst.str());

    const Terminal& src = *topology_->terminal(pair.src);
    const Terminal& dst = *topology_->terminal(pair.dst);
    auto built = std::make_shared<PairRules>();
    for (const auto& hop : switch_hops(*path)) {
        built->rules.push_back({hop.switch_id, {exact_match(src, dst, hop.in), FlowAction::forward(hop.out)}});
        built->rules.push_back({hop.switch_id, {exact_match(dst, src, hop.out), FlowAction::forward(hop.in)}});
    }
    std::sort(built->rules.begin(), built->rules.end());
    built->path = std::move(*path);
    return built;
}

std::vector<SwitchRule> Controller::synthesize_flow_rules(const TerminalId& src,
                                                          const TerminalId& dst) const
{
    const TerminalPair pair{src, dst};
    if (!rspm_ || !rspm_->allow.count(pair))
        throw Error(ErrorCode::PreconditionViolated,
                    "pair " + src.str() + " -> " + dst.str() + " is not allowed by the policy");
    if (auto it = pairs_.find(pair); it != pairs_.end())
        return it->second->rules;
    return build_pair(pair)->rules;
}

RuleDelta Controller::upload_rspm(Rspm rspm)
{
    check_terminals(rspm);
    const RuleSet before = installed();
    drops_ = drop_rules(rspm);
    rspm_ = std::move(rspm);
    pairs_.clear();
    return diff_rules(before, installed());
}

RuleDelta Controller::apply_update(Rspm rspm)
{
    check_terminals(rspm);
    const RuleSet before = installed();
    drops_ = drop_rules(rspm);
    rspm_ = std::move(rspm);
    std::erase_if(pairs_, [&](const auto& entry) { return !permits(entry.first); });
    return diff_rules(before, installed());
}

Decision Controller::handle_packet_in(const PacketIn& packet_in)
{
    if (!rspm_)
        throw Error(ErrorCode::NoPolicyUploaded, "packet-in received before any policy upload");
    ++stats_.packet_ins;

    auto deny = [this] {
        ++stats_.denied;
        return Decision{};
    };

    const auto& h = packet_in.packet.headers;
    const Terminal* src = topology_->terminal_by_address(h.src_mac, h.src_ip);
    const Terminal* dst = topology_->terminal_by_address(h.dst_mac, h.dst_ip);
    if (!src || !dst || src->id == dst->id)
        return deny();
    const TerminalPair pair{src->id, dst->id};
    if (!permits(pair))
        return deny();

    std::shared_ptr<const PairRules> entry;
    if (auto it = pairs_.find(pair); it != pairs_.end()) {
        entry = it->second;
    } else {
        try {
            entry = build_pair(pair);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoPath)
                throw;
            return deny();
        }
    }

    // Headers alone do not authenticate: the packet must also enter the
    // fabric where the real source terminal would put it on this path.
    const auto hops = switch_hops(entry->path);
    const bool on_path = std::any_of(hops.begin(), hops.end(), [&](const SwitchHop& hop) {
        return hop.switch_id == packet_in.switch_id && hop.in == packet_in.in_port;
    });
    if (!on_path)
        return deny();

    if (pairs_.emplace(pair, entry).second)
        stats_.rules_installed += entry->rules.size();
    return Decision{Decision::Verdict::Permit, entry->rules, entry->path};
}

RuleSet Controller::installed() const
{
    RuleSet rules = drops_;
    for (const auto& [pair, entry] : pairs_)
        for (const auto& r : entry->rules)
            rules[r.switch_id].insert(r.rule);
    return rules;
}

std::vector<TerminalPair> Controller::installed_pairs() const
{
    std::vector<TerminalPair> out;
    out.reserve(pairs_.size());
    for (const auto& [pair, _] : pairs_)
        out.push_back(pair);
    return out;
}

const Rspm& Controller::rspm() const
{
    if (!rspm_)
        throw Error(ErrorCode::NoPolicyUploaded, "no policy uploaded");
    return *rspm_;
}

RuleSet compile_rules(std::shared_ptr<const TopologyGraph> topology, const Rspm& rspm)
{
    Controller controller(std::move(topology));
    controller.upload_rspm(rspm);
    RuleSet rules = controller.installed();
    for (const auto& pair : rspm.allow) {
        if (rspm.deny_all_from.count(pair.src))
            continue;
        try {
            for (const auto& r : controller.synthesize_flow_rules(pair.src, pair.dst))
                rules[r.switch_id].insert(r.rule);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoPath)
                throw;
        }
    }
    return rules;
}

} // namespace sdnguard
