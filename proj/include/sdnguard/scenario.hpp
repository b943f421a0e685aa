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
#include <string>
#include <string_view>
#include <vector>

#include "sdnguard/compliance.hpp"
#include "sdnguard/dataplane.hpp"
#include "sdnguard/deployment.hpp"

namespace sdnguard {

enum class ScenarioKind : std::uint8_t {
    IllegalNetworkAccess,
    IdentityTheft,
    ServiceLeakage,
    LegitimateAccess,
};

std::string_view to_string(ScenarioKind kind) noexcept;
ScenarioKind parse_scenario_kind(std::string_view text);

/// One packet of a scenario. Headers are those of `src` -> `dst`; injecting
/// at a terminal other than `src` is only legal when `spoofed` is set.
struct Injection {
    TerminalId at;
    TerminalId src;
    TerminalId dst;
    std::string payload;
    bool spoofed = false;
    TraceResult::Outcome expected = TraceResult::Outcome::EscalatedThenDenied;
};

struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::LegitimateAccess;
    Fixture fixture;
    std::vector<Injection> injections;
};

struct ScenarioStep {
    Injection injection;
    TraceResult actual;
    bool matched = false;
};

struct ScenarioReport {
    std::string name;
    ScenarioKind kind = ScenarioKind::LegitimateAccess;
    std::string fixture;
    std::vector<ScenarioStep> steps;
    ComplianceReport compliance;
    bool passed = false;
};

/// Runs the injections in order against a fresh deployment, then checks
/// compliance. Passes iff every outcome matches and no leak or gap remains.
/// Throws Error(FixtureMismatch) when an injection does not fit the fixture.
ScenarioReport run_scenario(const Scenario& scenario);

/// Built-in suite: the three attack scenarios, legitimate access on the two
/// small fixtures, and malicious-consumer blocking.
std::vector<Scenario> builtin_scenarios();
/// Throws Error(InvalidArgument) for unknown names.
Scenario builtin_scenario(std::string_view name);

} // namespace sdnguard
