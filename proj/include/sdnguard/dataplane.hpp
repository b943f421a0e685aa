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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdnguard/controller.hpp"
#include "sdnguard/flow.hpp"
#include "sdnguard/model.hpp"

namespace sdnguard {

struct TraceResult {
    enum class Outcome : std::uint8_t {
        Delivered,
        DroppedAtSwitch,
        EscalatedThenDelivered,
        EscalatedThenDenied,
    };

    enum class DropReason : std::uint8_t {
        None,
        DropEntry,
        // The controller permitted the packet but the freshly installed rules
        // still did not match it at this switch.
        NoMatchAfterPermit,
        // Forward action towards a port with no external link.
        UnlinkedPort,
        // Injection terminal has no switch attachment.
        Unattached,
    };

    Outcome outcome = Outcome::EscalatedThenDenied;
    std::vector<std::string> path;  // vertex names in travel order
    std::optional<SwitchId> drop_switch;
    DropReason reason = DropReason::None;
    std::optional<TerminalId> delivered_to;
    std::uint32_t escalations = 0;

    bool delivered() const
    { return outcome == Outcome::Delivered || outcome == Outcome::EscalatedThenDelivered; }
};

std::string_view to_string(TraceResult::Outcome outcome) noexcept;
std::string_view to_string(TraceResult::DropReason reason) noexcept;
/// Throws Error(Parse) for unknown names.
TraceResult::Outcome parse_outcome(std::string_view text);

struct OpenflowSwitch {
    const Switch* decl = nullptr;
    const FlowTable* table = nullptr;
};

/// Deterministic data plane: switches with flow tables wired per topology.
/// Packet-ins are synchronous calls into the controller.
///
/// Tables are copy-on-write, so copying a Network to probe it is cheap and
/// never disturbs the original.
class Network {
public:
    explicit Network(std::shared_ptr<const TopologyGraph> topology);

    /// Set semantics: installing a present rule is a no-op.
    /// Throws Error(UnknownSwitch) / Error(UnknownPort).
    void install_entry(const SwitchId& switch_id, const FlowRule& rule);
    /// Removing an absent rule is a no-op. Throws Error(UnknownSwitch).
    void remove_entry(const SwitchId& switch_id, const FlowRule& rule);
    void apply(const RuleDelta& delta);
    void install(const std::vector<SwitchRule>& rules);

    const FlowTable& table(const SwitchId& switch_id) const;
    OpenflowSwitch get_switch(const SwitchId& switch_id) const;
    /// Current table contents as a canonical rule set (counters dropped).
    RuleSet rules() const;

    /// Walks a packet hop by hop from `at`. A table miss escalates to
    /// `controller`; with no controller the miss counts as a denial.
    ///
    /// Throws Error(UnknownTerminal) for an undeclared injection point and
    /// Error(ForwardingLoop) after 4 x |switches| switch visits.
    TraceResult inject(const TerminalId& at, const Packet& packet, Controller* controller);

    const TopologyGraph& topology() const noexcept { return *topology_; }

private:
    std::size_t switch_index(const SwitchId& switch_id) const;
    FlowTable& mutable_table(std::size_t index);

    std::shared_ptr<const TopologyGraph> topology_;
    std::vector<std::shared_ptr<FlowTable>> tables_;
};

/// Headers a terminal puts on a packet towards another terminal.
PacketHeaders headers_between(const Terminal& src, const Terminal& dst);

} // namespace sdnguard
