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
#include <filesystem>
#include <string>

#include <json.hpp>

#include "sdnguard/bench.hpp"
#include "sdnguard/compliance.hpp"
#include "sdnguard/deployment.hpp"
#include "sdnguard/scenario.hpp"

namespace sdnguard {

// Output documents keep insertion order so files diff cleanly.
using Json = nlohmann::ordered_json;

// ---- input documents -------------------------------------------------------
//
// Parsing is strict: unknown keys and wrong types raise Error(Schema), broken
// JSON raises Error(Parse), unreadable files Error(Io).

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

TopologySpec parse_topology(const Json& doc);
ServiceCatalog parse_services(const Json& doc);
PolicyDocument parse_policy(const Json& doc);

Json topology_to_json(const TopologySpec& topology);
Json services_to_json(const ServiceCatalog& catalog);
Json policy_to_json(const PolicyDocument& policy);

Fixture load_fixture(const std::filesystem::path& topology,
                     const std::filesystem::path& services,
                     const std::filesystem::path& policy);

/// Scenario file; paths inside are resolved against `base_dir`.
Scenario parse_scenario(const Json& doc, const std::filesystem::path& base_dir);
Scenario load_scenario_file(const std::filesystem::path& path);

// ---- output documents ------------------------------------------------------

Json rule_to_json(const FlowRule& rule);
FlowRule rule_from_json(const Json& doc);
/// rules.json: every switch of the topology, entries in canonical order.
Json rules_to_json(const TopologySpec& topology, const RuleSet& rules);
Json rule_delta_to_json(const RuleDelta& delta);
Json rspm_to_json(const Rspm& rspm);
Json validation_to_json(const ValidationReport& report);
Json trace_to_json(const TraceResult& trace);
Json compliance_to_json(const ComplianceReport& report);
Json scenario_report_to_json(const ScenarioReport& report);

/// Deterministic part of a bench run (sizes, compliance).
Json bench_results_to_json(const BenchResult& result);
/// Wall-clock part, kept apart so reports can be compared byte for byte.
Json bench_timing_to_json(const BenchResult& result);
/// {"results": ..., "timing": ...}
Json bench_report_to_json(const BenchResult& result);

/// Canonical text of a document: two-space indent, trailing newline.
std::string dump(const Json& doc);

struct SuiteOutput {
    std::string rules;   // rules.json
    std::string report;  // report.json, no timings
    std::string timing;  // timing.json
    bool passed = false;
};

/// Every built-in scenario, eager compilation and compliance verification of
/// every built-in fixture, and one small bench at `seed`.
SuiteOutput run_suite(std::uint64_t seed);

} // namespace sdnguard
