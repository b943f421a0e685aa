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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "sdnguard/address.hpp"
#include "sdnguard/ids.hpp"

namespace sdnguard {

/// Addressable endpoint of the data plane; the unit of enforcement.
struct Terminal {
    TerminalId id;
    Ipv4Address ip;
    MacAddress mac;
};

struct SwitchPort {
    SwitchId switch_id;
    PortNo port_no = 0;

    friend auto operator<=>(const SwitchPort&, const SwitchPort&) = default;
};

/// Declared switch. The flow table lives in the data-plane simulator.
struct Switch {
    SwitchId id;
    std::vector<PortNo> ports;
};

using Endpoint = std::variant<TerminalId, SwitchPort>;

/// "t1" for terminals, "sw1.p3" for switch ports.
std::string vertex_name(const Endpoint& endpoint);

struct Link {
    Endpoint a;
    Endpoint b;
    double cost = 1.0;
};

struct TopologySpec {
    std::vector<Terminal> terminals;
    std::vector<Switch> switches;
    std::vector<Link> links;
};

struct WebService {
    ServiceId id;
    std::string sppm;  // opaque privacy policy, never interpreted
    TerminalId terminal;
    std::string uri;
};

struct ServiceConsumer {
    ConsumerId id;
    std::string cppm;  // opaque privacy preferences
    TerminalId terminal;
};

struct Transition {
    ServiceId from;
    EventId event;
    ServiceId to;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Service composition as a finite state machine; a transition means the
/// source service invokes the destination service when the event fires.
struct Wsc {
    ServiceId initial;
    std::set<ServiceId> services;
    std::set<EventId> events;
    std::set<Transition> transitions;
};

struct Violation {
    std::string kind;
    std::vector<std::string> subjects;
    std::string message;

    friend auto operator<=>(const Violation& a, const Violation& b)
    { return std::tie(a.kind, a.subjects) <=> std::tie(b.kind, b.subjects); }
    friend bool operator==(const Violation& a, const Violation& b)
    { return a.kind == b.kind && a.subjects == b.subjects; }
};

/// Sorted, de-duplicated list of invariant violations. Empty means valid.
class ValidationReport {
public:
    void add(std::string kind, std::vector<std::string> subjects, std::string message);
    void merge(const ValidationReport& other);

    bool ok() const noexcept { return violations_.empty(); }
    std::size_t size() const noexcept { return violations_.size(); }
    const std::vector<Violation>& violations() const noexcept { return violations_; }
    bool contains(std::string_view kind) const;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;

private:
    std::vector<Violation> violations_;
};

/// Checks every uniqueness/attachment/cost invariant of the topology and the
/// principal declarations, plus injectivity of the principal-to-terminal map.
/// Never throws on malformed input; problems become report entries.
ValidationReport validate_model(const TopologySpec& topology,
                                std::span<const WebService> services,
                                std::span<const ServiceConsumer> consumers);

ValidationReport validate_wsc(const Wsc& wsc);

/// Also checks the composition only names declared services.
ValidationReport validate_wsc(const Wsc& wsc, std::span<const WebService> services);

/// Undirected weighted graph over terminals and switch ports. Every pair of
/// ports on the same switch is joined by an implicit zero-cost inner edge.
/// Construction is best-effort: links naming undeclared endpoints are skipped
/// (validate_model reports them).
class TopologyGraph {
public:
    using Index = std::size_t;

    struct Edge {
        Index to;
        double cost;
    };

    explicit TopologyGraph(TopologySpec spec);

    const TopologySpec& spec() const noexcept { return spec_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const Endpoint& vertex(Index i) const { return vertices_[i]; }
    const std::string& name(Index i) const { return names_[i]; }
    const std::vector<Edge>& neighbours(Index i) const { return adjacency_[i]; }
    bool is_terminal(Index i) const { return std::holds_alternative<TerminalId>(vertices_[i]); }

    std::optional<Index> index_of(const Endpoint& endpoint) const;

    const Terminal* terminal(const TerminalId& id) const;
    const Terminal* terminal_by_address(const MacAddress& mac, const Ipv4Address& ip) const;
    const Switch* find_switch(const SwitchId& id) const;
    bool has_port(const SwitchId& id, PortNo port) const;
    std::size_t switch_count() const noexcept { return spec_.switches.size(); }

    /// Port the terminal is attached to, if it has a single switch attachment.
    std::optional<SwitchPort> attachment(const TerminalId& id) const;

    /// Device on the far side of a port's external link, if any.
    std::optional<Endpoint> peer(const SwitchPort& port) const;

private:
    TopologySpec spec_;
    std::vector<Endpoint> vertices_;
    std::vector<std::string> names_;
    std::vector<std::vector<Edge>> adjacency_;
    std::map<TerminalId, Index> terminal_index_;
    std::map<SwitchPort, Index> port_index_;
    std::map<SwitchId, std::size_t> switch_index_;
    std::map<TerminalId, std::size_t> terminal_decl_;
    std::map<std::pair<MacAddress, Ipv4Address>, std::size_t> address_index_;
    std::map<SwitchPort, Endpoint> peers_;
    std::map<TerminalId, SwitchPort> attachments_;
};

} // namespace sdnguard
