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

#include "sdnguard/dataplane.hpp"

#include "sdnguard/error.hpp"

namespace sdnguard {

std::string_view to_string(TraceResult::Outcome outcome) noexcept
{
    switch (outcome) {
    case TraceResult::Outcome::Delivered: return "Delivered";
    case TraceResult::Outcome::DroppedAtSwitch: return "DroppedAtSwitch";
    case TraceResult::Outcome::EscalatedThenDelivered: return "EscalatedThenDelivered";
    case TraceResult::Outcome::EscalatedThenDenied: return "EscalatedThenDenied";
    }
    return "Unknown";
}

std::string_view to_string(TraceResult::DropReason reason) noexcept
{
    switch (reason) {
    case TraceResult::DropReason::None: return "None";
    case TraceResult::DropReason::DropEntry: return "DropEntry";
    case TraceResult::DropReason::NoMatchAfterPermit: return "NoMatchAfterPermit";
    case TraceResult::DropReason::UnlinkedPort: return "UnlinkedPort";
    case TraceResult::DropReason::Unattached: return "Unattached";
    }
    return "Unknown";
}

TraceResult::Outcome parse_outcome(std::string_view text)
{
    for (auto o : {TraceResult::Outcome::Delivered, TraceResult::Outcome::DroppedAtSwitch,
                   TraceResult::Outcome::EscalatedThenDelivered,
                   TraceResult::Outcome::EscalatedThenDenied})
        if (to_string(o) == text)
            return o;
    throw Error(ErrorCode::Parse, "unknown trace outcome '" + std::string(text) + "'");
}

PacketHeaders headers_between(const Terminal& src, const Terminal& dst)
{
    return {src.mac, src.ip, dst.mac, dst.ip};
}

Network::Network(std::shared_ptr<const TopologyGraph> topology) : topology_(std::move(topology))
{
    if (!topology_)
        throw Error(ErrorCode::InvalidArgument, "network needs a topology");
    tables_.reserve(topology_->switch_count());
    for (std::size_t i = 0; i < topology_->switch_count(); ++i)
        tables_.push_back(std::make_shared<FlowTable>());
}

std::size_t Network::switch_index(const SwitchId& switch_id) const
{
    const auto& switches = topology_->spec().switches;
    for (std::size_t i = 0; i < switches.size(); ++i)
        if (switches[i].id == switch_id)
            return i;
    throw Error(ErrorCode::UnknownSwitch, "unknown switch '" + switch_id.str() + "'");
}

FlowTable& Network::mutable_table(std::size_t index)
{
    auto& slot = tables_[index];
    if (slot.use_count() > 1)
        slot = std::make_shared<FlowTable>(*slot);
    return *slot;
}

void Network::install_entry(const SwitchId& switch_id, const FlowRule& rule)
{
    const std::size_t index = switch_index(switch_id);
    auto check_port = [&](PortNo port) {
        if (!topology_->has_port(switch_id, port))
            throw Error(ErrorCode::UnknownPort, "switch '" + switch_id.str() + "' has no port "
                        + std::to_string(port));
    };
    if (rule.match.in_port)
        check_port(*rule.match.in_port);
    if (!rule.action.is_drop()) {
        check_port(rule.action.out_port);
        const auto* decl = topology_->find_switch(switch_id);
        if (rule.match.in_port == rule.action.out_port && decl->ports.size() > 1)
            throw Error(ErrorCode::InvalidArgument, "rule on '" + switch_id.str()
                        + "' forwards back out of its ingress port");
    }
    if (tables_[index]->contains(rule))
        return;
    mutable_table(index).install(rule);
}

void Network::remove_entry(const SwitchId& switch_id, const FlowRule& rule)
{
    const std::size_t index = switch_index(switch_id);
    if (!tables_[index]->contains(rule))
        return;
    mutable_table(index).remove(rule);
}

void Network::apply(const RuleDelta& delta)
{
    for (const auto& [sw, rules] : delta.removed)
        for (const auto& r : rules)
            remove_entry(sw, r);
    for (const auto& [sw, rules] : delta.added)
        for (const auto& r : rules)
            install_entry(sw, r);
}

void Network::install(const std::vector<SwitchRule>& rules)
{
    for (const auto& r : rules)
        install_entry(r.switch_id, r.rule);
}

const FlowTable& Network::table(const SwitchId& switch_id) const
{
    return *tables_[switch_index(switch_id)];
}

OpenflowSwitch Network::get_switch(const SwitchId& switch_id) const
{
    const std::size_t index = switch_index(switch_id);
    return {&topology_->spec().switches[index], tables_[index].get()};
}

RuleSet Network::rules() const
{
    RuleSet out;
    const auto& switches = topology_->spec().switches;
    for (std::size_t i = 0; i < tables_.size(); ++i)
        for (const auto& e : tables_[i]->entries())
            out[switches[i].id].insert(e.rule);
    return out;
}

TraceResult Network::inject(const TerminalId& at, const Packet& packet, Controller* controller)
{
    if (!topology_->terminal(at))
        throw Error(ErrorCode::UnknownTerminal, "cannot inject at undeclared terminal '" + at.str() + "'");

    using Outcome = TraceResult::Outcome;
    using Reason = TraceResult::DropReason;

    TraceResult trace;
    trace.path.push_back(at.str());
    auto ingress = topology_->attachment(at);
    if (!ingress) {
        trace.outcome = Outcome::DroppedAtSwitch;
        trace.reason = Reason::Unattached;
        return trace;
    }

    const std::size_t guard = 4 * topology_->switch_count();
    std::size_t visits = 0;
    SwitchPort here = *ingress;
    trace.path.push_back(vertex_name(here));
    bool permitted_here = false;

    for (;;) {
        if (++visits > guard)
            throw Error(ErrorCode::ForwardingLoop, "packet from '" + at.str() + "' exceeded "
                        + std::to_string(guard) + " switch visits");
        const std::size_t index = switch_index(here.switch_id);
        auto hit = tables_[index]->peek(packet.headers, here.port_no)
            ? mutable_table(index).match(packet.headers, here.port_no)
            : std::nullopt;

        if (!hit) {
            if (permitted_here) {
                trace.outcome = Outcome::DroppedAtSwitch;
                trace.drop_switch = here.switch_id;
                trace.reason = Reason::NoMatchAfterPermit;
                return trace;
            }
            ++trace.escalations;
            if (!controller) {
                trace.outcome = Outcome::EscalatedThenDenied;
                return trace;
            }
            const Decision decision = controller->handle_packet_in({here.switch_id, here.port_no, packet});
            if (!decision.permitted()) {
                trace.outcome = Outcome::EscalatedThenDenied;
                return trace;
            }
            install(decision.rules);
            permitted_here = true;
            --visits;
            continue;
        }
        permitted_here = false;

        if (hit->action.is_drop()) {
            trace.outcome = Outcome::DroppedAtSwitch;
            trace.drop_switch = here.switch_id;
            trace.reason = Reason::DropEntry;
            return trace;
        }

        const SwitchPort out{here.switch_id, hit->action.out_port};
        trace.path.push_back(vertex_name(out));
        const auto next = topology_->peer(out);
        if (!next) {
            trace.outcome = Outcome::DroppedAtSwitch;
            trace.drop_switch = here.switch_id;
            trace.reason = Reason::UnlinkedPort;
            return trace;
        }
        trace.path.push_back(vertex_name(*next));
        if (const auto* terminal = std::get_if<TerminalId>(&*next)) {
            trace.delivered_to = *terminal;
            trace.outcome = trace.escalations > 0 ? Outcome::EscalatedThenDelivered : Outcome::Delivered;
            return trace;
        }
        here = std::get<SwitchPort>(*next);
    }
}

} // namespace sdnguard
