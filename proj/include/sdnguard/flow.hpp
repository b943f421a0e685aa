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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdnguard/address.hpp"
#include "sdnguard/ids.hpp"

namespace sdnguard {

struct PacketHeaders {
    MacAddress src_mac;
    Ipv4Address src_ip;
    MacAddress dst_mac;
    Ipv4Address dst_ip;

    friend auto operator<=>(const PacketHeaders&, const PacketHeaders&) = default;
};

struct Packet {
    PacketHeaders headers;
    std::string payload;  // application-layer content; switches never look at it
};

/// Escalation of an unmatched packet from a switch to the controller.
struct PacketIn {
    SwitchId switch_id;
    PortNo in_port = 0;
    Packet packet;
};

/// Exact match on every engaged field; a disengaged field is a wildcard.
/// Forwarding rules always engage all five fields.
struct FlowMatch {
    std::optional<MacAddress> src_mac;
    std::optional<Ipv4Address> src_ip;
    std::optional<MacAddress> dst_mac;
    std::optional<Ipv4Address> dst_ip;
    std::optional<PortNo> in_port;

    bool matches(const PacketHeaders& headers, PortNo port) const;
    bool fully_specified() const;

    friend auto operator<=>(const FlowMatch&, const FlowMatch&) = default;
};

struct FlowAction {
    // Declaration order doubles as table precedence: drops are consulted first.
    enum class Kind : std::uint8_t { Drop, Forward };

    Kind kind = Kind::Drop;
    PortNo out_port = 0;  // meaningful for Forward only

    static FlowAction forward(PortNo port) { return {Kind::Forward, port}; }
    static FlowAction drop() { return {Kind::Drop, 0}; }
    bool is_drop() const { return kind == Kind::Drop; }

    friend auto operator<=>(const FlowAction&, const FlowAction&) = default;
};

/// Match plus action; what the controller synthesises and installs.
struct FlowRule {
    FlowMatch match;
    FlowAction action;

    friend auto operator<=>(const FlowRule& a, const FlowRule& b)
    {
        if (auto c = a.action.kind <=> b.action.kind; c != 0)
            return c;
        if (auto c = a.match <=> b.match; c != 0)
            return c;
        return a.action.out_port <=> b.action.out_port;
    }
    friend bool operator==(const FlowRule&, const FlowRule&) = default;
};

/// Switch-resident entry: a rule and the number of packets it matched.
struct FlowEntry {
    FlowRule rule;
    std::uint64_t counter = 0;
};

/// Ordered flow table with set semantics on rules. Lookup consults drop
/// entries before forward entries, first match in insertion order within
/// each class.
class FlowTable {
public:
    /// Returns false if the rule was already present.
    bool install(const FlowRule& rule);
    /// Returns false if the rule was absent.
    bool remove(const FlowRule& rule);
    bool contains(const FlowRule& rule) const;

    /// Matching entry under table precedence; bumps its counter.
    std::optional<FlowRule> match(const PacketHeaders& headers, PortNo in_port);
    /// Same lookup without touching counters.
    const FlowEntry* peek(const PacketHeaders& headers, PortNo in_port) const;

    const std::vector<FlowEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::uint64_t counter(const FlowRule& rule) const;

private:
    std::size_t find_index(const PacketHeaders& headers, PortNo in_port) const;

    std::vector<FlowEntry> entries_;
    std::set<FlowRule> index_;
};

struct SwitchRule {
    SwitchId switch_id;
    FlowRule rule;

    friend auto operator<=>(const SwitchRule&, const SwitchRule&) = default;
};

/// Canonical per-switch rule sets (sorted, duplicate-free).
using RuleSet = std::map<SwitchId, std::set<FlowRule>>;

std::size_t rule_count(const RuleSet& rules);

/// Per-switch additions and removals between two rule sets.
struct RuleDelta {
    RuleSet added;
    RuleSet removed;

    bool empty() const { return added.empty() && removed.empty(); }
    std::size_t added_count() const { return rule_count(added); }
    std::size_t removed_count() const { return rule_count(removed); }

    friend bool operator==(const RuleDelta&, const RuleDelta&) = default;
};

RuleDelta diff_rules(const RuleSet& before, const RuleSet& after);
RuleSet apply_rule_delta(RuleSet rules, const RuleDelta& delta);

} // namespace sdnguard
