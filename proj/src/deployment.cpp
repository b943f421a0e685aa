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

#include "sdnguard/deployment.hpp"

#include <map>

#include "sdnguard/error.hpp"

namespace sdnguard {

Spm build_spm(const PolicyDocument& policy, const ServiceCatalog& catalog)
{
    std::set<std::string> services;
    std::set<std::string> consumers;
    for (const auto& s : catalog.services)
        services.insert(s.id.str());
    for (const auto& c : catalog.consumers)
        consumers.insert(c.id.str());

    auto principal = [&](const std::string& id) {
        if (services.count(id))
            return Principal{Principal::Kind::Service, id};
        if (consumers.count(id))
            return Principal{Principal::Kind::Consumer, id};
        throw Error(ErrorCode::UndeclaredPrincipal, "policy names undeclared principal '" + id + "'");
    };
    auto target = [&](const std::string& id) {
        if (!services.count(id))
            throw Error(ErrorCode::UndeclaredPrincipal, "policy target '" + id + "' is not a declared service");
        return ServiceId(id);
    };

    std::set<ConsumerId> malicious;
    for (const auto& id : policy.malicious) {
        if (!consumers.count(id))
            throw Error(ErrorCode::UndeclaredPrincipal, "malicious principal '" + id + "' is not a declared consumer");
        malicious.insert(ConsumerId(id));
    }

    std::set<ConsumerGrant> grants;
    std::set<AccessPair> service_allows;
    for (const auto& entry : policy.allow) {
        const Principal src = principal(entry.src);
        const ServiceId dst = target(entry.dst);
        if (src.kind == Principal::Kind::Consumer)
            grants.insert({ConsumerId(src.id), dst});
        else
            service_allows.insert({src, dst});
    }

    Spm spm;
    if (policy.derive_from_composition) {
        if (!catalog.composition)
            throw Error(ErrorCode::InvalidArgument,
                        "policy derives from the composition but none is declared");
        spm = derive_spm(*catalog.composition, catalog.consumers, grants, malicious);
    } else {
        for (const auto& [consumer, service] : grants) {
            if (malicious.count(consumer))
                throw Error(ErrorCode::GrantToMaliciousConsumer,
                            "consumer '" + consumer.str() + "' is both granted access and malicious");
            spm.allow.insert({Principal::consumer(consumer), service});
        }
        spm.malicious = malicious;
    }
    spm.allow.insert(service_allows.begin(), service_allows.end());
    for (const auto& entry : policy.deny)
        spm.deny.insert({principal(entry.src), target(entry.dst)});
    return spm;
}

namespace {

Terminal numbered_terminal(int k)
{
    return {TerminalId("t" + std::to_string(k)), Ipv4Address(0x0a000000u + static_cast<std::uint32_t>(k)),
            MacAddress(static_cast<std::uint64_t>(k))};
}

Link attach(const std::string& terminal, const std::string& sw, PortNo port)
{
    return {TerminalId(terminal), SwitchPort{SwitchId(sw), port}, 1.0};
}

Link trunk(const std::string& a, PortNo pa, const std::string& b, PortNo pb)
{
    return {SwitchPort{SwitchId(a), pa}, SwitchPort{SwitchId(b), pb}, 1.0};
}

WebService service(const std::string& id, int terminal, const std::string& uri)
{
    return {ServiceId(id), "{}", TerminalId("t" + std::to_string(terminal)), uri};
}

ServiceConsumer consumer(const std::string& id, int terminal)
{
    return {ConsumerId(id), "{}", TerminalId("t" + std::to_string(terminal))};
}

Wsc three_service_composition()
{
    Wsc wsc;
    wsc.initial = ServiceId("s1");
    wsc.services = {ServiceId("s1"), ServiceId("s2"), ServiceId("s3")};
    wsc.events = {EventId("c1"), EventId("c2")};
    wsc.transitions = {{ServiceId("s1"), EventId("c1"), ServiceId("s2")},
                       {ServiceId("s1"), EventId("c2"), ServiceId("s3")}};
    return wsc;
}

} // namespace

Fixture fig2_fixture()
{
    Fixture f;
    f.name = "fig2";
    for (int k : {1, 2, 3, 5, 6})
        f.topology.terminals.push_back(numbered_terminal(k));
    f.topology.switches = {{SwitchId("sw1"), {1, 2, 3, 4}}, {SwitchId("sw2"), {1, 2, 3}}};
    f.topology.links = {attach("t1", "sw1", 1), attach("t2", "sw1", 2), attach("t3", "sw1", 3),
                        trunk("sw1", 4, "sw2", 1), attach("t5", "sw2", 2), attach("t6", "sw2", 3)};
    f.catalog.services = {service("s1", 1, "/fig2/s1"), service("s2", 2, "/fig2/s2"),
                          service("s3", 3, "/fig2/s3")};
    f.catalog.consumers = {consumer("sc1", 5)};
    f.catalog.composition = three_service_composition();
    f.policy.allow = {{"sc1", "s3"}};
    f.policy.derive_from_composition = true;
    return f;
}

Fixture fig4_fixture()
{
    Fixture f;
    f.name = "fig4";
    for (int k = 1; k <= 6; ++k)
        f.topology.terminals.push_back(numbered_terminal(k));
    f.topology.switches = {{SwitchId("sw1"), {1, 2, 3, 4}}, {SwitchId("sw2"), {1, 2, 3, 4}}};
    f.topology.links = {attach("t1", "sw1", 1), attach("t2", "sw1", 2), attach("t3", "sw1", 3),
                        trunk("sw1", 4, "sw2", 1), attach("t4", "sw2", 2), attach("t5", "sw2", 3),
                        attach("t6", "sw2", 4)};
    f.catalog.services = {service("s1", 1, "/fig4/s1"), service("s2", 2, "/fig4/s2"),
                          service("s3", 3, "/fig4/s3")};
    f.catalog.consumers = {consumer("sc1", 6), consumer("sc2", 5)};
    f.catalog.composition = three_service_composition();
    f.policy.allow = {{"sc1", "s3"}};
    f.policy.malicious = {"sc2"};
    f.policy.derive_from_composition = true;
    return f;
}

Fixture spms_fixture()
{
    Fixture f;
    f.name = "spms";
    for (int k = 1; k <= 7; ++k)
        f.topology.terminals.push_back(numbered_terminal(k));
    f.topology.switches = {{SwitchId("sw1"), {1, 2, 3, 4}}, {SwitchId("sw2"), {1, 2, 3, 4, 5}}};
    f.topology.links = {attach("t1", "sw1", 1), attach("t2", "sw1", 2), attach("t3", "sw1", 3),
                        trunk("sw1", 4, "sw2", 1), attach("t4", "sw2", 2), attach("t5", "sw2", 3),
                        attach("t6", "sw2", 4), attach("t7", "sw2", 5)};
    f.catalog.services = {service("s1", 1, "/SOA/login"), service("s2", 2, "/SOA/monitoring"),
                          service("s3", 3, "/SOA/heart rate"), service("s4", 4, "/SOA/temperature"),
                          service("s5", 5, "/SOA/alarming")};
    f.catalog.consumers = {consumer("patient", 6), consumer("physician", 7)};

    Wsc wsc;
    wsc.initial = ServiceId("s1");
    for (int k = 1; k <= 5; ++k)
        wsc.services.insert(ServiceId("s" + std::to_string(k)));
    for (int k = 1; k <= 4; ++k)
        wsc.events.insert(EventId("c" + std::to_string(k)));
    wsc.transitions = {{ServiceId("s1"), EventId("c1"), ServiceId("s2")},
                       {ServiceId("s3"), EventId("c2"), ServiceId("s2")},
                       {ServiceId("s4"), EventId("c3"), ServiceId("s2")},
                       {ServiceId("s2"), EventId("c4"), ServiceId("s5")}};
    f.catalog.composition = std::move(wsc);
    f.policy.allow = {{"patient", "s1"}, {"physician", "s1"}};
    f.policy.derive_from_composition = true;
    return f;
}

Fixture builtin_fixture(const std::string& name)
{
    if (name == "fig2")
        return fig2_fixture();
    if (name == "fig4")
        return fig4_fixture();
    if (name == "spms")
        return spms_fixture();
    throw Error(ErrorCode::InvalidArgument, "unknown built-in fixture '" + name + "'");
}

std::vector<std::string> builtin_fixture_names()
{
    return {"fig2", "fig4", "spms"};
}

Deployment::Deployment(Fixture fixture)
    : fixture_(std::move(fixture)),
      graph_(std::make_shared<const TopologyGraph>(fixture_.topology)),
      network_(graph_),
      controller_(graph_)
{ }

ValidationReport Deployment::validate() const
{
    const auto& catalog = fixture_.catalog;
    ValidationReport report = validate_model(fixture_.topology, catalog.services, catalog.consumers);
    if (catalog.composition)
        report.merge(validate_wsc(*catalog.composition, catalog.services));
    try {
        report.merge(validate_spm(build_spm(fixture_.policy, catalog), catalog.services,
                                  catalog.consumers));
    } catch (const Error& e) {
        report.add("policy-error", {std::string(to_string(e.code()))}, e.what());
    }
    return report;
}

void Deployment::deploy()
{
    if (auto report = validate(); !report.ok())
        throw Error(ErrorCode::InvalidModel, std::to_string(report.size())
                    + " model violation(s), first: " + report.violations().front().message);
    const auto& catalog = fixture_.catalog;
    spm_ = build_spm(fixture_.policy, catalog);
    rspm_ = transform_spm_to_rspm(*spm_, catalog.services, catalog.consumers);
    network_.apply(controller_.upload_rspm(*rspm_));
    deployed_ = true;
}

void Deployment::require_deployed() const
{
    if (!deployed_)
        throw Error(ErrorCode::NoPolicyUploaded, "deployment has not been deployed yet");
}

const Spm& Deployment::spm() const
{
    require_deployed();
    return *spm_;
}

const Rspm& Deployment::rspm() const
{
    require_deployed();
    return *rspm_;
}

RuleSet Deployment::compiled_rules() const
{
    if (auto report = validate(); !report.ok())
        throw Error(ErrorCode::InvalidModel, std::to_string(report.size())
                    + " model violation(s), first: " + report.violations().front().message);
    const auto& catalog = fixture_.catalog;
    const Spm spm = build_spm(fixture_.policy, catalog);
    return compile_rules(graph_, transform_spm_to_rspm(spm, catalog.services, catalog.consumers));
}

TraceResult Deployment::inject(const TerminalId& at, const TerminalId& src, const TerminalId& dst,
                               const std::string& payload)
{
    const Terminal* s = graph_->terminal(src);
    const Terminal* d = graph_->terminal(dst);
    if (!s)
        throw Error(ErrorCode::UnknownTerminal, "unknown terminal '" + src.str() + "'");
    if (!d)
        throw Error(ErrorCode::UnknownTerminal, "unknown terminal '" + dst.str() + "'");
    return inject(at, Packet{headers_between(*s, *d), payload});
}

TraceResult Deployment::inject(const TerminalId& at, const Packet& packet)
{
    return network_.inject(at, packet, &controller_);
}

RuleDelta Deployment::update_policy(const PolicyDocument& policy)
{
    require_deployed();
    const auto& catalog = fixture_.catalog;
    Spm spm = build_spm(policy, catalog);
    if (auto report = validate_spm(spm, catalog.services, catalog.consumers); !report.ok())
        throw Error(ErrorCode::InvalidModel, "updated policy is invalid: "
                    + report.violations().front().message);
    Rspm rspm = transform_spm_to_rspm(spm, catalog.services, catalog.consumers);
    RuleDelta delta = controller_.apply_update(rspm);
    network_.apply(delta);
    fixture_.policy = policy;
    spm_ = std::move(spm);
    rspm_ = std::move(rspm);
    return delta;
}

std::vector<TraceResult> Deployment::exercise_allowed()
{
    require_deployed();
    std::vector<TraceResult> traces;
    for (const auto& pair : rspm_->allow)
        traces.push_back(inject(pair.src, pair.src, pair.dst, "exercise"));
    return traces;
}

ComplianceReport Deployment::verify() const
{
    require_deployed();
    return check_compliance(*spm_, fixture_.catalog.services, fixture_.catalog.consumers, network_,
                            controller_);
}

} // namespace sdnguard
