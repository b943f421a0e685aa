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

#include "sdnguard/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>

#include "sdnguard/error.hpp"
#include "sdnguard/generator.hpp"

namespace sdnguard {

namespace {

constexpr std::string_view kRulesFormat = "sdnguard-rules/1";
constexpr std::string_view kRulesBundleFormat = "sdnguard-rules-bundle/1";

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw Error(ErrorCode::Schema, where + ": " + what);
}

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {})
{
    if (!j.is_object())
        schema_error(where, std::string("expected object, got ") + j.type_name());
    for (const auto& item : j.items()) {
        const auto& key = item.key();
        if (std::find(required.begin(), required.end(), key) == required.end()
            && std::find(optional.begin(), optional.end(), key) == optional.end())
            schema_error(where, "unknown field '" + key + "'");
    }
    for (auto key : required)
        if (!j.contains(key))
            schema_error(where, "missing field '" + std::string(key) + "'");
}

std::string sub(const std::string& where, std::string_view key)
{
    return where + "." + std::string(key);
}

std::string item(const std::string& where, std::size_t i)
{
    return where + "[" + std::to_string(i) + "]";
}

const Json& array_of(const Json& j, const std::string& where)
{
    if (!j.is_array())
        schema_error(where, std::string("expected array, got ") + j.type_name());
    return j;
}

std::string string_of(const Json& j, const std::string& where)
{
    if (!j.is_string())
        schema_error(where, std::string("expected string, got ") + j.type_name());
    return j.get<std::string>();
}

std::string id_of(const Json& j, const std::string& where)
{
    auto s = string_of(j, where);
    if (s.empty())
        schema_error(where, "identifier must not be empty");
    return s;
}

bool bool_of(const Json& j, const std::string& where)
{
    if (!j.is_boolean())
        schema_error(where, std::string("expected boolean, got ") + j.type_name());
    return j.get<bool>();
}

PortNo port_of(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        schema_error(where, std::string("expected integer, got ") + j.type_name());
    if (j.is_number_unsigned() && j.get<std::uint64_t>() <= std::numeric_limits<PortNo>::max())
        return static_cast<PortNo>(j.get<std::uint64_t>());
    // Port 0 parses; validation reports it.
    schema_error(where, "port number out of range");
}

double number_of(const Json& j, const std::string& where)
{
    if (!j.is_number())
        schema_error(where, std::string("expected number, got ") + j.type_name());
    return j.get<double>();
}

template <class T>
T address_of(const Json& j, const std::string& where)
{
    auto text = string_of(j, where);
    try {
        return T::parse(text);
    } catch (const Error& e) {
        schema_error(where, e.what());
    }
}

// Opaque privacy documents are carried as JSON text.
std::string opaque_of(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

Json opaque_to_json(const std::string& text)
{
    if (text.empty())
        return Json::object();
    auto parsed = Json::parse(text, nullptr, false);
    return parsed.is_discarded() ? Json(text) : parsed;
}

Endpoint endpoint_of(const Json& j, const std::string& where)
{
    if (j.is_object() && j.contains("terminal")) {
        check_keys(j, where, {"terminal"});
        return TerminalId(id_of(j["terminal"], sub(where, "terminal")));
    }
    check_keys(j, where, {"switch", "port"});
    return SwitchPort{SwitchId(id_of(j["switch"], sub(where, "switch"))),
                      port_of(j["port"], sub(where, "port"))};
}

Json endpoint_to_json(const Endpoint& e)
{
    Json j = Json::object();
    if (const auto* t = std::get_if<TerminalId>(&e)) {
        j["terminal"] = t->str();
    } else {
        const auto& p = std::get<SwitchPort>(e);
        j["switch"] = p.switch_id.str();
        j["port"] = p.port_no;
    }
    return j;
}

std::vector<std::string> strings_of(const Json& j, const std::string& where)
{
    std::vector<std::string> out;
    const auto& arr = array_of(j, where);
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(id_of(arr[i], item(where, i)));
    return out;
}

std::vector<PolicyEntry> entries_of(const Json& j, const std::string& where)
{
    std::vector<PolicyEntry> out;
    const auto& arr = array_of(j, where);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto w = item(where, i);
        check_keys(arr[i], w, {"src", "dst"});
        out.push_back({id_of(arr[i]["src"], sub(w, "src")), id_of(arr[i]["dst"], sub(w, "dst"))});
    }
    return out;
}

Wsc composition_of(const Json& j, const std::string& where)
{
    check_keys(j, where, {"initial", "services", "transitions"}, {"events"});
    Wsc wsc;
    wsc.initial = ServiceId(id_of(j["initial"], sub(where, "initial")));
    for (auto& s : strings_of(j["services"], sub(where, "services")))
        wsc.services.insert(ServiceId(s));
    const auto& ts = array_of(j["transitions"], sub(where, "transitions"));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto w = item(sub(where, "transitions"), i);
        check_keys(ts[i], w, {"from", "event", "to"});
        wsc.transitions.insert({ServiceId(id_of(ts[i]["from"], sub(w, "from"))),
                                EventId(id_of(ts[i]["event"], sub(w, "event"))),
                                ServiceId(id_of(ts[i]["to"], sub(w, "to")))});
    }
    if (j.contains("events")) {
        for (auto& e : strings_of(j["events"], sub(where, "events")))
            wsc.events.insert(EventId(e));
    } else {
        for (const auto& t : wsc.transitions)
            wsc.events.insert(t.event);
    }
    return wsc;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
    return buf.str();
}

template <class T>
Json optional_to_json(const std::optional<T>& v)
{
    if (!v)
        return nullptr;
    if constexpr (std::is_same_v<T, PortNo>)
        return *v;
    else
        return v->to_string();
}

Json pair_to_json(const TerminalPair& p)
{
    return Json::array({p.src.str(), p.dst.str()});
}

Json findings_to_json(const std::vector<ComplianceFinding>& findings)
{
    Json arr = Json::array();
    for (const auto& f : findings) {
        Json j;
        j["src"] = f.terminals.src.str();
        j["dst"] = f.terminals.dst.str();
        j["src_principal"] = f.src_principal.empty() ? Json(nullptr) : Json(f.src_principal);
        j["dst_principal"] = f.dst_principal.empty() ? Json(nullptr) : Json(f.dst_principal);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json rule_set_to_json(const RuleSet& rules)
{
    Json arr = Json::array();
    for (const auto& [sw, set] : rules) {
        Json entries = Json::array();
        for (const auto& r : set)
            entries.push_back(rule_to_json(r));
        arr.push_back({{"id", sw.str()}, {"entries", std::move(entries)}});
    }
    return arr;
}

Json duration_to_json(const DurationStats& d)
{
    return {{"min", d.min}, {"mean", d.mean}, {"max", d.max}, {"samples", d.samples}};
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    try {
        return parse_json_text(read_text(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse)
            throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
        throw;
    }
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

TopologySpec parse_topology(const Json& doc)
{
    const std::string root = "topology";
    check_keys(doc, root, {"terminals", "switches", "links"});
    TopologySpec spec;

    const auto& ts = array_of(doc["terminals"], sub(root, "terminals"));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        auto w = item(sub(root, "terminals"), i);
        check_keys(ts[i], w, {"id", "ip", "mac"});
        spec.terminals.push_back({TerminalId(id_of(ts[i]["id"], sub(w, "id"))),
                                  address_of<Ipv4Address>(ts[i]["ip"], sub(w, "ip")),
                                  address_of<MacAddress>(ts[i]["mac"], sub(w, "mac"))});
    }

    const auto& ss = array_of(doc["switches"], sub(root, "switches"));
    for (std::size_t i = 0; i < ss.size(); ++i) {
        auto w = item(sub(root, "switches"), i);
        check_keys(ss[i], w, {"id", "ports"});
        Switch sw{SwitchId(id_of(ss[i]["id"], sub(w, "id"))), {}};
        const auto& ps = array_of(ss[i]["ports"], sub(w, "ports"));
        for (std::size_t k = 0; k < ps.size(); ++k)
            sw.ports.push_back(port_of(ps[k], item(sub(w, "ports"), k)));
        spec.switches.push_back(std::move(sw));
    }

    const auto& ls = array_of(doc["links"], sub(root, "links"));
    for (std::size_t i = 0; i < ls.size(); ++i) {
        auto w = item(sub(root, "links"), i);
        check_keys(ls[i], w, {"a", "b"}, {"cost"});
        Link link{endpoint_of(ls[i]["a"], sub(w, "a")), endpoint_of(ls[i]["b"], sub(w, "b")), 1.0};
        if (ls[i].contains("cost"))
            link.cost = number_of(ls[i]["cost"], sub(w, "cost"));
        spec.links.push_back(std::move(link));
    }
    return spec;
}

ServiceCatalog parse_services(const Json& doc)
{
    const std::string root = "services";
    check_keys(doc, root, {"services", "consumers"}, {"composition"});
    ServiceCatalog catalog;

    const auto& ss = array_of(doc["services"], sub(root, "services"));
    for (std::size_t i = 0; i < ss.size(); ++i) {
        auto w = item(sub(root, "services"), i);
        check_keys(ss[i], w, {"id", "uri", "terminal"}, {"sppm"});
        catalog.services.push_back({ServiceId(id_of(ss[i]["id"], sub(w, "id"))),
                                    ss[i].contains("sppm") ? opaque_of(ss[i]["sppm"]) : "",
                                    TerminalId(id_of(ss[i]["terminal"], sub(w, "terminal"))),
                                    id_of(ss[i]["uri"], sub(w, "uri"))});
    }

    const auto& cs = array_of(doc["consumers"], sub(root, "consumers"));
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto w = item(sub(root, "consumers"), i);
        check_keys(cs[i], w, {"id", "terminal"}, {"cppm"});
        catalog.consumers.push_back({ConsumerId(id_of(cs[i]["id"], sub(w, "id"))),
                                     cs[i].contains("cppm") ? opaque_of(cs[i]["cppm"]) : "",
                                     TerminalId(id_of(cs[i]["terminal"], sub(w, "terminal")))});
    }

    if (doc.contains("composition"))
        catalog.composition = composition_of(doc["composition"], sub(root, "composition"));
    return catalog;
}

PolicyDocument parse_policy(const Json& doc)
{
    const std::string root = "policy";
    check_keys(doc, root, {}, {"allow", "deny", "malicious", "derive_from_composition"});
    PolicyDocument policy;
    if (doc.contains("allow"))
        policy.allow = entries_of(doc["allow"], sub(root, "allow"));
    if (doc.contains("deny"))
        policy.deny = entries_of(doc["deny"], sub(root, "deny"));
    if (doc.contains("malicious"))
        policy.malicious = strings_of(doc["malicious"], sub(root, "malicious"));
    if (doc.contains("derive_from_composition"))
        policy.derive_from_composition =
            bool_of(doc["derive_from_composition"], sub(root, "derive_from_composition"));
    return policy;
}

Json topology_to_json(const TopologySpec& topology)
{
    Json terminals = Json::array();
    for (const auto& t : topology.terminals)
        terminals.push_back({{"id", t.id.str()}, {"ip", t.ip.to_string()}, {"mac", t.mac.to_string()}});
    Json switches = Json::array();
    for (const auto& s : topology.switches)
        switches.push_back({{"id", s.id.str()}, {"ports", s.ports}});
    Json links = Json::array();
    for (const auto& l : topology.links)
        links.push_back({{"a", endpoint_to_json(l.a)}, {"b", endpoint_to_json(l.b)}, {"cost", l.cost}});
    return {{"terminals", std::move(terminals)}, {"switches", std::move(switches)},
            {"links", std::move(links)}};
}

Json services_to_json(const ServiceCatalog& catalog)
{
    Json services = Json::array();
    for (const auto& s : catalog.services)
        services.push_back({{"id", s.id.str()}, {"uri", s.uri}, {"terminal", s.terminal.str()},
                            {"sppm", opaque_to_json(s.sppm)}});
    Json consumers = Json::array();
    for (const auto& c : catalog.consumers)
        consumers.push_back({{"id", c.id.str()}, {"terminal", c.terminal.str()},
                             {"cppm", opaque_to_json(c.cppm)}});
    Json doc = {{"services", std::move(services)}, {"consumers", std::move(consumers)}};
    if (const auto& wsc = catalog.composition) {
        Json svc = Json::array();
        for (const auto& s : wsc->services)
            svc.push_back(s.str());
        Json events = Json::array();
        for (const auto& e : wsc->events)
            events.push_back(e.str());
        Json transitions = Json::array();
        for (const auto& t : wsc->transitions)
            transitions.push_back({{"from", t.from.str()}, {"event", t.event.str()}, {"to", t.to.str()}});
        doc["composition"] = {{"initial", wsc->initial.str()}, {"services", std::move(svc)},
                              {"events", std::move(events)}, {"transitions", std::move(transitions)}};
    }
    return doc;
}

Json policy_to_json(const PolicyDocument& policy)
{
    auto entries = [](const std::vector<PolicyEntry>& v) {
        Json arr = Json::array();
        for (const auto& e : v)
            arr.push_back({{"src", e.src}, {"dst", e.dst}});
        return arr;
    };
    return {{"allow", entries(policy.allow)}, {"deny", entries(policy.deny)},
            {"malicious", policy.malicious},
            {"derive_from_composition", policy.derive_from_composition}};
}

Fixture load_fixture(const std::filesystem::path& topology,
                     const std::filesystem::path& services,
                     const std::filesystem::path& policy)
{
    Fixture f;
    f.name = topology.stem().string();
    f.topology = parse_topology(read_json_file(topology));
    f.catalog = parse_services(read_json_file(services));
    f.policy = parse_policy(read_json_file(policy));
    return f;
}

Scenario parse_scenario(const Json& doc, const std::filesystem::path& base_dir)
{
    const std::string root = "scenario";
    check_keys(doc, root, {"name", "kind", "fixture", "injections"});
    Scenario s;
    s.name = id_of(doc["name"], sub(root, "name"));
    try {
        s.kind = parse_scenario_kind(string_of(doc["kind"], sub(root, "kind")));
    } catch (const Error& e) {
        schema_error(sub(root, "kind"), e.what());
    }

    const auto& fx = doc["fixture"];
    if (fx.is_string()) {
        try {
            s.fixture = builtin_fixture(fx.get<std::string>());
        } catch (const Error& e) {
            schema_error(sub(root, "fixture"), e.what());
        }
    } else {
        auto w = sub(root, "fixture");
        check_keys(fx, w, {"topology", "services", "policy"}, {"name"});
        auto path = [&](const char* key) {
            std::filesystem::path p = string_of(fx[key], sub(w, key));
            return p.is_absolute() ? p : base_dir / p;
        };
        s.fixture = load_fixture(path("topology"), path("services"), path("policy"));
        if (fx.contains("name"))
            s.fixture.name = id_of(fx["name"], sub(w, "name"));
    }

    const auto& is = array_of(doc["injections"], sub(root, "injections"));
    for (std::size_t i = 0; i < is.size(); ++i) {
        auto w = item(sub(root, "injections"), i);
        check_keys(is[i], w, {"src", "dst", "expect"}, {"at", "payload", "spoofed"});
        Injection inj;
        inj.src = TerminalId(id_of(is[i]["src"], sub(w, "src")));
        inj.dst = TerminalId(id_of(is[i]["dst"], sub(w, "dst")));
        inj.at = is[i].contains("at") ? TerminalId(id_of(is[i]["at"], sub(w, "at"))) : inj.src;
        if (is[i].contains("payload"))
            inj.payload = string_of(is[i]["payload"], sub(w, "payload"));
        if (is[i].contains("spoofed"))
            inj.spoofed = bool_of(is[i]["spoofed"], sub(w, "spoofed"));
        try {
            inj.expected = parse_outcome(string_of(is[i]["expect"], sub(w, "expect")));
        } catch (const Error& e) {
            schema_error(sub(w, "expect"), e.what());
        }
        s.injections.push_back(std::move(inj));
    }
    return s;
}

Scenario load_scenario_file(const std::filesystem::path& path)
{
    return parse_scenario(read_json_file(path), path.parent_path());
}

Json rule_to_json(const FlowRule& rule)
{
    const auto& m = rule.match;
    Json wildcards = Json::array();
    if (!m.src_mac) wildcards.push_back("src_mac");
    if (!m.src_ip) wildcards.push_back("src_ip");
    if (!m.dst_mac) wildcards.push_back("dst_mac");
    if (!m.dst_ip) wildcards.push_back("dst_ip");
    if (!m.in_port) wildcards.push_back("in_port");
    Json j;
    j["src_mac"] = optional_to_json(m.src_mac);
    j["src_ip"] = optional_to_json(m.src_ip);
    j["dst_mac"] = optional_to_json(m.dst_mac);
    j["dst_ip"] = optional_to_json(m.dst_ip);
    j["in_port"] = optional_to_json(m.in_port);
    j["action"] = rule.action.is_drop() ? "drop" : "forward";
    j["out_port"] = rule.action.is_drop() ? Json(nullptr) : Json(rule.action.out_port);
    j["wildcards"] = std::move(wildcards);
    return j;
}

FlowRule rule_from_json(const Json& doc)
{
    const std::string root = "rule";
    check_keys(doc, root, {"src_mac", "src_ip", "dst_mac", "dst_ip", "in_port", "action"},
               {"out_port", "wildcards"});
    FlowRule rule;
    auto& m = rule.match;
    if (!doc["src_mac"].is_null()) m.src_mac = address_of<MacAddress>(doc["src_mac"], sub(root, "src_mac"));
    if (!doc["src_ip"].is_null()) m.src_ip = address_of<Ipv4Address>(doc["src_ip"], sub(root, "src_ip"));
    if (!doc["dst_mac"].is_null()) m.dst_mac = address_of<MacAddress>(doc["dst_mac"], sub(root, "dst_mac"));
    if (!doc["dst_ip"].is_null()) m.dst_ip = address_of<Ipv4Address>(doc["dst_ip"], sub(root, "dst_ip"));
    if (!doc["in_port"].is_null()) m.in_port = port_of(doc["in_port"], sub(root, "in_port"));

    auto action = string_of(doc["action"], sub(root, "action"));
    bool has_out = doc.contains("out_port") && !doc["out_port"].is_null();
    if (action == "drop") {
        if (has_out)
            schema_error(sub(root, "out_port"), "drop rules carry no output port");
        rule.action = FlowAction::drop();
    } else if (action == "forward") {
        if (!has_out)
            schema_error(sub(root, "out_port"), "forward rules need an output port");
        rule.action = FlowAction::forward(port_of(doc["out_port"], sub(root, "out_port")));
    } else {
        schema_error(sub(root, "action"), "expected \"drop\" or \"forward\"");
    }

    if (doc.contains("wildcards")) {
        auto listed = strings_of(doc["wildcards"], sub(root, "wildcards"));
        std::sort(listed.begin(), listed.end());
        const Json canonical = rule_to_json(rule);
        std::vector<std::string> actual;
        for (const auto& item : canonical["wildcards"])
            actual.push_back(item.get<std::string>());
        std::sort(actual.begin(), actual.end());
        if (listed != actual)
            schema_error(sub(root, "wildcards"), "does not agree with the null match fields");
    }
    return rule;
}

Json rules_to_json(const TopologySpec& topology, const RuleSet& rules)
{
    std::vector<SwitchId> ids;
    for (const auto& s : topology.switches)
        ids.push_back(s.id);
    for (const auto& [sw, _] : rules)
        ids.push_back(sw);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Json switches = Json::array();
    for (const auto& id : ids) {
        Json entries = Json::array();
        if (auto it = rules.find(id); it != rules.end())
            for (const auto& r : it->second)
                entries.push_back(rule_to_json(r));
        switches.push_back({{"id", id.str()}, {"entries", std::move(entries)}});
    }
    return {{"format", kRulesFormat}, {"rule_count", rule_count(rules)},
            {"switches", std::move(switches)}};
}

Json rule_delta_to_json(const RuleDelta& delta)
{
    return {{"added_count", delta.added_count()}, {"removed_count", delta.removed_count()},
            {"added", rule_set_to_json(delta.added)}, {"removed", rule_set_to_json(delta.removed)}};
}

Json rspm_to_json(const Rspm& rspm)
{
    auto pairs = [](const std::set<TerminalPair>& v) {
        Json arr = Json::array();
        for (const auto& p : v)
            arr.push_back(pair_to_json(p));
        return arr;
    };
    Json deny_all = Json::array();
    for (const auto& t : rspm.deny_all_from)
        deny_all.push_back(t.str());
    return {{"allow", pairs(rspm.allow)}, {"deny", pairs(rspm.deny)},
            {"deny_all_from", std::move(deny_all)}};
}

Json validation_to_json(const ValidationReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations())
        violations.push_back({{"kind", v.kind}, {"subjects", v.subjects}, {"message", v.message}});
    return {{"valid", report.ok()}, {"violation_count", report.size()},
            {"violations", std::move(violations)}};
}

Json trace_to_json(const TraceResult& trace)
{
    Json j;
    j["outcome"] = to_string(trace.outcome);
    j["delivered_to"] = trace.delivered_to ? Json(trace.delivered_to->str()) : Json(nullptr);
    j["drop_switch"] = trace.drop_switch ? Json(trace.drop_switch->str()) : Json(nullptr);
    j["drop_reason"] = to_string(trace.reason);
    j["escalations"] = trace.escalations;
    j["path"] = trace.path;
    return j;
}

Json compliance_to_json(const ComplianceReport& report)
{
    return {{"compliant", report.compliant()},
            {"probed_pairs", report.probed_pairs},
            {"leak_count", report.leaks.size()},
            {"gap_count", report.gaps.size()},
            {"leaks", findings_to_json(report.leaks)},
            {"gaps", findings_to_json(report.gaps)},
            {"allowed_reached", findings_to_json(report.allowed_reached)},
            {"reverse_of_allowed", findings_to_json(report.reverse_of_allowed)}};
}

Json scenario_report_to_json(const ScenarioReport& report)
{
    Json steps = Json::array();
    for (const auto& s : report.steps) {
        const auto& inj = s.injection;
        steps.push_back({{"at", inj.at.str()},
                         {"src", inj.src.str()},
                         {"dst", inj.dst.str()},
                         {"payload", inj.payload},
                         {"spoofed", inj.spoofed},
                         {"expected", to_string(inj.expected)},
                         {"actual", to_string(s.actual.outcome)},
                         {"matched", s.matched},
                         {"trace", trace_to_json(s.actual)}});
    }
    return {{"name", report.name},
            {"kind", to_string(report.kind)},
            {"fixture", report.fixture},
            {"passed", report.passed},
            {"steps", std::move(steps)},
            {"compliance", compliance_to_json(report.compliance)}};
}

Json bench_results_to_json(const BenchResult& result)
{
    const auto& p = result.params;
    return {{"params", {{"switches", p.switches},
                        {"terminals", p.terminals},
                        {"pairs", p.pairs},
                        {"seed", p.seed},
                        {"repeats", p.repeats},
                        {"compliance_sample", p.compliance_sample}}},
            {"rspm_size", result.rspm_size},
            {"rules", result.rules},
            {"compliance", compliance_to_json(result.compliance)}};
}

Json bench_timing_to_json(const BenchResult& result)
{
    return {{"transform_seconds", duration_to_json(result.transform)},
            {"synthesis_seconds", duration_to_json(result.synthesis)},
            {"packet_in_latency_seconds", duration_to_json(result.packet_in_latency)},
            {"per_pair_seconds", result.per_pair_seconds()}};
}

Json bench_report_to_json(const BenchResult& result)
{
    return {{"results", bench_results_to_json(result)}, {"timing", bench_timing_to_json(result)}};
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

SuiteOutput run_suite(std::uint64_t seed)
{
    SuiteOutput out;
    bool passed = true;

    Json scenarios = Json::array();
    for (const auto& s : builtin_scenarios()) {
        auto report = run_scenario(s);
        passed = passed && report.passed;
        scenarios.push_back(scenario_report_to_json(report));
    }

    Json rule_images = Json::object();
    Json verification = Json::array();
    auto add_fixture = [&](const Fixture& fixture) {
        Deployment d(fixture);
        rule_images[fixture.name] = rules_to_json(fixture.topology, d.compiled_rules());
        d.deploy();
        d.exercise_allowed();
        auto report = d.verify();
        passed = passed && report.compliant();
        verification.push_back({{"fixture", fixture.name},
                                {"installed", rules_to_json(fixture.topology, d.network().rules())},
                                {"compliance", compliance_to_json(report)}});
    };
    for (const auto& name : builtin_fixture_names())
        add_fixture(builtin_fixture(name));

    GeneratorParams g;
    g.switches = 4;
    g.terminals = 10;
    g.allow_pairs = 16;
    g.deny_pairs = 6;
    g.malicious = 1;
    g.seed = seed;
    auto generated = generate_fixture(g);
    generated.name = "generated";
    add_fixture(generated);

    BenchParams bp;
    bp.switches = 10;
    bp.terminals = 50;
    bp.pairs = 200;
    bp.seed = seed;
    auto bench = run_bench(bp);
    passed = passed && bench.compliance.compliant();

    out.passed = passed;
    out.rules = dump({{"format", kRulesBundleFormat}, {"seed", seed}, {"fixtures", std::move(rule_images)}});
    out.report = dump({{"seed", seed},
                       {"passed", passed},
                       {"scenarios", std::move(scenarios)},
                       {"verification", std::move(verification)},
                       {"bench", bench_results_to_json(bench)}});
    out.timing = dump({{"seed", seed}, {"bench", bench_timing_to_json(bench)}});
    return out;
}

} // namespace sdnguard
