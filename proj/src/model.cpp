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

#include "sdnguard/model.hpp"

#include <algorithm>
#include <cmath>

namespace sdnguard {

std::string vertex_name(const Endpoint& endpoint)
{
    if (const auto* t = std::get_if<TerminalId>(&endpoint))
        return t->str();
    const auto& port = std::get<SwitchPort>(endpoint);
    return port.switch_id.str() + ".p" + std::to_string(port.port_no);
}

void ValidationReport::add(std::string kind, std::vector<std::string> subjects, std::string message)
{
    Violation v{std::move(kind), std::move(subjects), std::move(message)};
    auto it = std::lower_bound(violations_.begin(), violations_.end(), v);
    if (it != violations_.end() && *it == v)
        return;
    violations_.insert(it, std::move(v));
}

void ValidationReport::merge(const ValidationReport& other)
{
    for (const auto& v : other.violations_)
        add(v.kind, v.subjects, v.message);
}

bool ValidationReport::contains(std::string_view kind) const
{
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.kind == kind; });
}

namespace {

template <class Key>
using Groups = std::map<Key, std::vector<std::string>>;

// Reports every key that more than one owner claims.
template <class Key, class Format>
void report_duplicates(ValidationReport& report, Groups<Key>& groups, const std::string& kind,
                       Format format_key, const std::string& what)
{
    for (auto& [key, owners] : groups) {
        if (owners.size() < 2)
            continue;
        std::sort(owners.begin(), owners.end());
        std::vector<std::string> subjects{format_key(key)};
        subjects.insert(subjects.end(), owners.begin(), owners.end());
        std::string message = what + " " + subjects.front() + " is shared by";
        for (const auto& o : owners)
            message += " " + o;
        report.add(kind, std::move(subjects), std::move(message));
    }
}

bool is_port(const Endpoint& e) { return std::holds_alternative<SwitchPort>(e); }

} // namespace

ValidationReport validate_model(const TopologySpec& topology,
                                std::span<const WebService> services,
                                std::span<const ServiceConsumer> consumers)
{
    ValidationReport report;

    Groups<std::string> terminal_ids;
    Groups<Ipv4Address> ips;
    Groups<MacAddress> macs;
    for (const auto& t : topology.terminals) {
        terminal_ids[t.id.str()].push_back(t.id.str());
        ips[t.ip].push_back(t.id.str());
        macs[t.mac].push_back(t.id.str());
    }
    auto same = [](const std::string& s) { return s; };
    report_duplicates(report, terminal_ids, "duplicate-terminal-id", same, "terminal id");
    report_duplicates(report, ips, "duplicate-ip",
                      [](const Ipv4Address& a) { return a.to_string(); }, "IP address");
    report_duplicates(report, macs, "duplicate-mac",
                      [](const MacAddress& a) { return a.to_string(); }, "MAC address");

    Groups<std::string> switch_ids;
    std::map<SwitchId, std::set<PortNo>> ports;
    for (const auto& sw : topology.switches) {
        switch_ids[sw.id.str()].push_back(sw.id.str());
        auto& declared = ports[sw.id];
        for (PortNo p : sw.ports) {
            if (p == 0)
                report.add("invalid-port-number", {sw.id.str()},
                           "switch " + sw.id.str() + " declares port 0; ports are numbered from 1");
            else if (!declared.insert(p).second)
                report.add("duplicate-port", {sw.id.str(), std::to_string(p)},
                           "switch " + sw.id.str() + " declares port " + std::to_string(p) + " twice");
        }
    }
    report_duplicates(report, switch_ids, "duplicate-switch-id", same, "switch id");

    std::set<TerminalId> declared_terminals;
    for (const auto& t : topology.terminals)
        declared_terminals.insert(t.id);

    auto resolves = [&](const Endpoint& e) {
        if (const auto* t = std::get_if<TerminalId>(&e))
            return declared_terminals.count(*t) > 0;
        const auto& sp = std::get<SwitchPort>(e);
        auto it = ports.find(sp.switch_id);
        return it != ports.end() && it->second.count(sp.port_no) > 0;
    };

    std::map<TerminalId, std::vector<const Link*>> terminal_links;
    std::map<SwitchPort, std::vector<std::string>> port_links;
    for (const auto& link : topology.links) {
        const std::string a = vertex_name(link.a);
        const std::string b = vertex_name(link.b);
        const std::vector<std::string> ends = a < b ? std::vector<std::string>{a, b}
                                                    : std::vector<std::string>{b, a};
        bool ok = true;
        for (const auto* e : {&link.a, &link.b}) {
            if (!resolves(*e)) {
                report.add("unknown-link-endpoint", {vertex_name(*e)},
                           "link endpoint " + vertex_name(*e) + " is not declared");
                ok = false;
            }
        }
        if (a == b) {
            report.add("self-link", {a}, "link joins " + a + " to itself");
            continue;
        }
        const bool inner = is_port(link.a) && is_port(link.b)
            && std::get<SwitchPort>(link.a).switch_id == std::get<SwitchPort>(link.b).switch_id;
        if (inner) {
            if (link.cost != 0.0)
                report.add("inner-link-cost", ends, "inner link " + ends[0] + " - " + ends[1]
                           + " must have cost 0");
            continue;
        }
        if (!std::isfinite(link.cost) || link.cost <= 0.0)
            report.add("link-cost", ends, "link " + ends[0] + " - " + ends[1]
                       + " between distinct devices must have a positive cost");
        if (!ok)
            continue;
        for (const auto* e : {&link.a, &link.b}) {
            if (const auto* t = std::get_if<TerminalId>(e))
                terminal_links[*t].push_back(&link);
            else
                port_links[std::get<SwitchPort>(*e)].push_back(e == &link.a ? b : a);
        }
    }

    for (const auto& id : declared_terminals) {
        auto it = terminal_links.find(id);
        const std::size_t n = it == terminal_links.end() ? 0 : it->second.size();
        bool to_port = false;
        if (n == 1) {
            const Link* l = it->second.front();
            to_port = is_port(l->a) || is_port(l->b);
        }
        if (n != 1 || !to_port)
            report.add("terminal-attachment", {id.str()},
                       "terminal " + id.str() + " must be attached to exactly one switch port (has "
                       + std::to_string(n) + " links" + (n == 1 ? ", not to a switch port)" : ")"));
    }
    for (auto& [port, peers] : port_links) {
        if (peers.size() < 2)
            continue;
        std::sort(peers.begin(), peers.end());
        std::vector<std::string> subjects{vertex_name(port)};
        subjects.insert(subjects.end(), peers.begin(), peers.end());
        report.add("port-multiple-links", subjects,
                   "port " + subjects.front() + " carries more than one external link");
    }

    Groups<std::string> service_ids;
    Groups<std::string> uris;
    Groups<std::string> principal_ids;
    Groups<std::string> by_terminal;
    for (const auto& s : services) {
        service_ids[s.id.str()].push_back(s.id.str());
        uris[s.uri].push_back(s.id.str());
        principal_ids[s.id.str()].push_back("service:" + s.id.str());
        if (!declared_terminals.count(s.terminal))
            report.add("unknown-service-terminal", {s.id.str(), s.terminal.str()},
                       "service " + s.id.str() + " is bound to undeclared terminal '"
                       + s.terminal.str() + "'");
        else
            by_terminal[s.terminal.str()].push_back(s.id.str());
    }
    report_duplicates(report, service_ids, "duplicate-service-id", same, "service id");
    report_duplicates(report, uris, "duplicate-uri", same, "URI");

    Groups<std::string> consumer_ids;
    for (const auto& c : consumers) {
        consumer_ids[c.id.str()].push_back(c.id.str());
        principal_ids[c.id.str()].push_back("consumer:" + c.id.str());
        if (!declared_terminals.count(c.terminal))
            report.add("unknown-consumer-terminal", {c.id.str(), c.terminal.str()},
                       "consumer " + c.id.str() + " is bound to undeclared terminal '"
                       + c.terminal.str() + "'");
        else
            by_terminal[c.terminal.str()].push_back(c.id.str());
    }
    report_duplicates(report, consumer_ids, "duplicate-consumer-id", same, "consumer id");

    for (auto& [id, owners] : principal_ids) {
        const bool mixed = std::any_of(owners.begin(), owners.end(),
                                       [](const std::string& o) { return o.rfind("service:", 0) == 0; })
            && std::any_of(owners.begin(), owners.end(),
                           [](const std::string& o) { return o.rfind("consumer:", 0) == 0; });
        if (mixed)
            report.add("principal-id-collision", {id},
                       "id " + id + " names both a service and a consumer");
    }
    report_duplicates(report, by_terminal, "non-injective-mapping", same, "terminal");
    return report;
}

ValidationReport validate_wsc(const Wsc& wsc)
{
    ValidationReport report;
    if (!wsc.services.count(wsc.initial))
        report.add("initial-not-member", {wsc.initial.str()},
                   "initial service " + wsc.initial.str() + " is not part of the composition");
    for (const auto& t : wsc.transitions) {
        const std::vector<std::string> subjects{t.from.str(), t.event.str(), t.to.str()};
        for (const auto* s : {&t.from, &t.to})
            if (!wsc.services.count(*s))
                report.add("undeclared-service", {s->str()},
                           "transition names service " + s->str() + " outside the composition");
        if (!wsc.events.count(t.event))
            report.add("undeclared-event", subjects,
                       "transition " + t.from.str() + " -" + t.event.str() + "-> " + t.to.str()
                       + " uses undeclared event " + t.event.str());
    }
    return report;
}

ValidationReport validate_wsc(const Wsc& wsc, std::span<const WebService> services)
{
    ValidationReport report = validate_wsc(wsc);
    std::set<ServiceId> declared;
    for (const auto& s : services)
        declared.insert(s.id);
    for (const auto& s : wsc.services)
        if (!declared.count(s))
            report.add("composition-unknown-service", {s.str()},
                       "composition member " + s.str() + " is not a declared service");
    return report;
}

TopologyGraph::TopologyGraph(TopologySpec spec) : spec_(std::move(spec))
{
    for (std::size_t i = 0; i < spec_.terminals.size(); ++i) {
        const auto& t = spec_.terminals[i];
        if (!terminal_decl_.emplace(t.id, i).second)
            continue;
        address_index_.emplace(std::pair{t.mac, t.ip}, i);
        terminal_index_.emplace(t.id, vertices_.size());
        vertices_.emplace_back(t.id);
    }
    for (std::size_t i = 0; i < spec_.switches.size(); ++i) {
        const auto& sw = spec_.switches[i];
        if (!switch_index_.emplace(sw.id, i).second)
            continue;
        std::vector<Index> members;
        for (PortNo p : sw.ports) {
            SwitchPort sp{sw.id, p};
            if (p == 0 || port_index_.count(sp))
                continue;
            port_index_.emplace(sp, vertices_.size());
            members.push_back(vertices_.size());
            vertices_.emplace_back(sp);
        }
        adjacency_.resize(vertices_.size());
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
                if (a != b)
                    adjacency_[members[a]].push_back({members[b], 0.0});
    }
    adjacency_.resize(vertices_.size());
    for (const auto& v : vertices_)
        names_.push_back(vertex_name(v));

    std::map<TerminalId, std::vector<Endpoint>> terminal_peers;
    for (const auto& link : spec_.links) {
        auto a = index_of(link.a);
        auto b = index_of(link.b);
        if (!a || !b || *a == *b)
            continue;
        if (is_port(link.a) && is_port(link.b)
            && std::get<SwitchPort>(link.a).switch_id == std::get<SwitchPort>(link.b).switch_id)
            continue;  // already covered by the implicit inner mesh
        adjacency_[*a].push_back({*b, link.cost});
        adjacency_[*b].push_back({*a, link.cost});
        for (auto [self, other] : {std::pair{&link.a, &link.b}, std::pair{&link.b, &link.a}}) {
            if (const auto* t = std::get_if<TerminalId>(self))
                terminal_peers[*t].push_back(*other);
            else
                peers_.emplace(std::get<SwitchPort>(*self), *other);
        }
    }
    for (const auto& [id, peers] : terminal_peers)
        if (peers.size() == 1 && is_port(peers.front()))
            attachments_.emplace(id, std::get<SwitchPort>(peers.front()));
}

std::optional<TopologyGraph::Index> TopologyGraph::index_of(const Endpoint& endpoint) const
{
    if (const auto* t = std::get_if<TerminalId>(&endpoint)) {
        auto it = terminal_index_.find(*t);
        if (it == terminal_index_.end())
            return std::nullopt;
        return it->second;
    }
    auto it = port_index_.find(std::get<SwitchPort>(endpoint));
    if (it == port_index_.end())
        return std::nullopt;
    return it->second;
}

const Terminal* TopologyGraph::terminal(const TerminalId& id) const
{
    auto it = terminal_decl_.find(id);
    return it == terminal_decl_.end() ? nullptr : &spec_.terminals[it->second];
}

const Terminal* TopologyGraph::terminal_by_address(const MacAddress& mac, const Ipv4Address& ip) const
{
    auto it = address_index_.find({mac, ip});
    return it == address_index_.end() ? nullptr : &spec_.terminals[it->second];
}

const Switch* TopologyGraph::find_switch(const SwitchId& id) const
{
    auto it = switch_index_.find(id);
    return it == switch_index_.end() ? nullptr : &spec_.switches[it->second];
}

bool TopologyGraph::has_port(const SwitchId& id, PortNo port) const
{
    return port_index_.count(SwitchPort{id, port}) > 0;
}

std::optional<SwitchPort> TopologyGraph::attachment(const TerminalId& id) const
{
    auto it = attachments_.find(id);
    if (it == attachments_.end())
        return std::nullopt;
    return it->second;
}

std::optional<Endpoint> TopologyGraph::peer(const SwitchPort& port) const
{
    auto it = peers_.find(port);
    if (it == peers_.end())
        return std::nullopt;
    return it->second;
}

} // namespace sdnguard
