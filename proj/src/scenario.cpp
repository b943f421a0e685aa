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

#include "sdnguard/scenario.hpp"

#include <set>

#include "sdnguard/error.hpp"

namespace sdnguard {

std::string_view to_string(ScenarioKind kind) noexcept
{
    switch (kind) {
    case ScenarioKind::IllegalNetworkAccess: return "IllegalNetworkAccess";
    case ScenarioKind::IdentityTheft: return "IdentityTheft";
    case ScenarioKind::ServiceLeakage: return "ServiceLeakage";
    case ScenarioKind::LegitimateAccess: return "LegitimateAccess";
    }
    return "Unknown";
}

ScenarioKind parse_scenario_kind(std::string_view text)
{
    for (auto k : {ScenarioKind::IllegalNetworkAccess, ScenarioKind::IdentityTheft,
                   ScenarioKind::ServiceLeakage, ScenarioKind::LegitimateAccess})
        if (to_string(k) == text)
            return k;
    throw Error(ErrorCode::Parse, "unknown scenario kind '" + std::string(text) + "'");
}

ScenarioReport run_scenario(const Scenario& scenario)
{
    std::set<TerminalId> terminals;
    for (const auto& t : scenario.fixture.topology.terminals)
        terminals.insert(t.id);
    for (const auto& inj : scenario.injections) {
        for (const auto* id : {&inj.at, &inj.src, &inj.dst})
            if (!terminals.count(*id))
                throw Error(ErrorCode::FixtureMismatch, "scenario '" + scenario.name
                            + "' references terminal '" + id->str() + "' absent from fixture '"
                            + scenario.fixture.name + "'");
        if (inj.at != inj.src && !inj.spoofed)
            throw Error(ErrorCode::FixtureMismatch, "scenario '" + scenario.name + "' injects "
                        + inj.src.str() + "'s headers at " + inj.at.str()
                        + " without marking the injection as spoofed");
    }

    Deployment deployment(scenario.fixture);
    deployment.deploy();

    ScenarioReport report;
    report.name = scenario.name;
    report.kind = scenario.kind;
    report.fixture = scenario.fixture.name;
    bool all_matched = true;
    for (const auto& inj : scenario.injections) {
        ScenarioStep step{inj, deployment.inject(inj.at, inj.src, inj.dst, inj.payload), false};
        step.matched = step.actual.outcome == inj.expected;
        all_matched = all_matched && step.matched;
        report.steps.push_back(std::move(step));
    }
    report.compliance = deployment.verify();
    report.passed = all_matched && report.compliance.compliant();
    return report;
}

namespace {

using Outcome = TraceResult::Outcome;

Injection inject(const char* at, const char* src, const char* dst, Outcome expected,
                 std::string payload = {}, bool spoofed = false)
{
    return {TerminalId(at), TerminalId(src), TerminalId(dst), std::move(payload), spoofed, expected};
}

} // namespace

std::vector<Scenario> builtin_scenarios()
{
    std::vector<Scenario> out;

    // An attacker on s2's machine goes straight for s3's machine, bypassing
    // the application plane. A legitimate s1 -> s3 flow in between must not
    // open the door for t2.
    out.push_back({"illegal-network-access", ScenarioKind::IllegalNetworkAccess, fig2_fixture(), {
        inject("t2", "t2", "t3", Outcome::EscalatedThenDenied, "GET /fig2/s3/records"),
        inject("t1", "t1", "t3", Outcome::EscalatedThenDelivered, "GET /fig2/s3"),
        inject("t2", "t2", "t3", Outcome::EscalatedThenDenied, "GET /fig2/s3/records"),
    }});

    // Stolen credentials of sc1 presented from t6, first with t6's own
    // headers, then with t5's forged headers.
    out.push_back({"identity-theft", ScenarioKind::IdentityTheft, fig2_fixture(), {
        inject("t5", "t5", "t3", Outcome::EscalatedThenDelivered, "GET /fig2/s3 credential=sc1"),
        inject("t6", "t6", "t3", Outcome::EscalatedThenDenied, "GET /fig2/s3 credential=sc1"),
        inject("t6", "t5", "t3", Outcome::EscalatedThenDenied, "GET /fig2/s3 credential=sc1", true),
    }});

    // A provider-controlled machine calls hidden interfaces of the services.
    out.push_back({"service-leakage", ScenarioKind::ServiceLeakage, fig4_fixture(), {
        inject("t4", "t4", "t3", Outcome::EscalatedThenDenied, "GET /fig4/s3/hidden/export"),
        inject("t4", "t4", "t1", Outcome::EscalatedThenDenied, "GET /fig4/s1/hidden/debug"),
    }});

    out.push_back({"legitimate-access", ScenarioKind::LegitimateAccess, fig2_fixture(), {
        inject("t1", "t1", "t2", Outcome::EscalatedThenDelivered, "GET /fig2/s2"),
        inject("t1", "t1", "t3", Outcome::EscalatedThenDelivered, "GET /fig2/s3"),
        inject("t5", "t5", "t3", Outcome::EscalatedThenDelivered, "GET /fig2/s3"),
        inject("t1", "t1", "t2", Outcome::Delivered, "GET /fig2/s2"),
        inject("t2", "t2", "t1", Outcome::Delivered, "200 OK"),
        inject("t3", "t3", "t5", Outcome::Delivered, "200 OK"),
    }});

    out.push_back({"spms-invocations", ScenarioKind::LegitimateAccess, spms_fixture(), {
        inject("t6", "t6", "t1", Outcome::EscalatedThenDelivered, "POST /SOA/login"),
        inject("t1", "t1", "t2", Outcome::EscalatedThenDelivered, "GET /SOA/monitoring"),
        inject("t3", "t3", "t2", Outcome::EscalatedThenDelivered, "hr=1"),
        inject("t4", "t4", "t2", Outcome::EscalatedThenDelivered, "te=0"),
        inject("t2", "t2", "t5", Outcome::EscalatedThenDelivered, "POST /SOA/alarming"),
        inject("t6", "t6", "t2", Outcome::EscalatedThenDenied, "GET /SOA/monitoring"),
    }});

    // Requests of a consumer the owner flagged as malicious never reach the
    // controller.
    out.push_back({"malicious-consumer", ScenarioKind::IllegalNetworkAccess, fig4_fixture(), {
        inject("t5", "t5", "t3", Outcome::DroppedAtSwitch, "GET /fig4/s3"),
        inject("t6", "t6", "t3", Outcome::EscalatedThenDelivered, "GET /fig4/s3"),
        inject("t5", "t5", "t1", Outcome::DroppedAtSwitch, "GET /fig4/s1"),
    }});

    return out;
}

Scenario builtin_scenario(std::string_view name)
{
    for (auto& s : builtin_scenarios())
        if (s.name == name)
            return s;
    throw Error(ErrorCode::InvalidArgument, "unknown built-in scenario '" + std::string(name) + "'");
}

} // namespace sdnguard
