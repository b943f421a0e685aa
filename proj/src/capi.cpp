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

#include "sdnguard/sdnguard.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "sdnguard/error.hpp"
#include "sdnguard/io.hpp"

using namespace sdnguard;

struct sg_system {
    Deployment deployment;
};

namespace {

thread_local std::string last_error;

sg_status status_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return SG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return SG_ERR_IO;
    case ErrorCode::Parse: return SG_ERR_PARSE;
    case ErrorCode::Schema: return SG_ERR_SCHEMA;
    case ErrorCode::InvalidModel: return SG_ERR_INVALID_MODEL;
    case ErrorCode::UnknownVertex: return SG_ERR_UNKNOWN_VERTEX;
    case ErrorCode::UnknownTerminal: return SG_ERR_UNKNOWN_TERMINAL;
    case ErrorCode::UnknownSwitch: return SG_ERR_UNKNOWN_SWITCH;
    case ErrorCode::UnknownPort: return SG_ERR_UNKNOWN_PORT;
    case ErrorCode::UndeclaredPrincipal: return SG_ERR_UNDECLARED_PRINCIPAL;
    case ErrorCode::GrantToMaliciousConsumer: return SG_ERR_GRANT_TO_MALICIOUS;
    case ErrorCode::MappingIncomplete: return SG_ERR_MAPPING_INCOMPLETE;
    case ErrorCode::NoPolicyUploaded: return SG_ERR_NO_POLICY;
    case ErrorCode::NoPath: return SG_ERR_NO_PATH;
    case ErrorCode::PreconditionViolated: return SG_ERR_PRECONDITION;
    case ErrorCode::ForwardingLoop: return SG_ERR_FORWARDING_LOOP;
    case ErrorCode::FixtureMismatch: return SG_ERR_FIXTURE_MISMATCH;
    case ErrorCode::GenerationFailure: return SG_ERR_GENERATION_FAILURE;
    }
    return SG_ERR_INTERNAL;
}

template <class F>
sg_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        body();
        return SG_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SG_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SG_ERR_INTERNAL;
    }
}

void require(const void* p, const char* name)
{
    if (!p)
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

char* copy_out(const std::string& text)
{
    auto* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void emit(char** out, const Json& doc)
{
    if (out)
        *out = copy_out(dump(doc));
}

void ensure_deployed(sg_system* sys)
{
    if (!sys->deployment.deployed())
        sys->deployment.deploy();
}

sg_system* open(Fixture fixture)
{
    return new sg_system{Deployment(std::move(fixture))};
}

} // namespace

extern "C" {

const char* sg_version(void)
{
    return "1.0.0";
}

const char* sg_status_name(sg_status status)
{
    switch (status) {
    case SG_OK: return "ok";
    case SG_ERR_INTERNAL: return "internal";
    default: break;
    }
    for (int c = 0; c <= static_cast<int>(ErrorCode::GenerationFailure); ++c)
        if (status_of(static_cast<ErrorCode>(c)) == status)
            return to_string(static_cast<ErrorCode>(c)).data();
    return "unknown";
}

const char* sg_last_error(void)
{
    return last_error.c_str();
}

void sg_string_free(char* str)
{
    std::free(str);
}

sg_status sg_system_open_files(const char* topology_path, const char* services_path,
                               const char* policy_path, sg_system** out)
{
    return guarded([&] {
        require(topology_path, "topology_path");
        require(services_path, "services_path");
        require(policy_path, "policy_path");
        require(out, "out");
        *out = open(load_fixture(topology_path, services_path, policy_path));
    });
}

sg_status sg_system_open_json(const char* topology_json, const char* services_json,
                              const char* policy_json, sg_system** out)
{
    return guarded([&] {
        require(topology_json, "topology_json");
        require(services_json, "services_json");
        require(policy_json, "policy_json");
        require(out, "out");
        Fixture f;
        f.name = "inline";
        f.topology = parse_topology(parse_json_text(topology_json));
        f.catalog = parse_services(parse_json_text(services_json));
        f.policy = parse_policy(parse_json_text(policy_json));
        *out = open(std::move(f));
    });
}

sg_status sg_system_open_builtin(const char* name, sg_system** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = open(builtin_fixture(name));
    });
}

void sg_system_close(sg_system* system)
{
    delete system;
}

sg_status sg_system_validate(const sg_system* system, size_t* violations, char** report_json)
{
    return guarded([&] {
        require(system, "system");
        auto report = system->deployment.validate();
        if (violations)
            *violations = report.size();
        emit(report_json, validation_to_json(report));
    });
}

sg_status sg_system_compile(const sg_system* system, char** rules_json)
{
    return guarded([&] {
        require(system, "system");
        require(rules_json, "rules_json");
        const auto& d = system->deployment;
        auto report = d.validate();
        if (!report.ok())
            throw Error(ErrorCode::InvalidModel, report.violations().front().message);
        emit(rules_json, rules_to_json(d.fixture().topology, d.compiled_rules()));
    });
}

sg_status sg_system_deploy(sg_system* system)
{
    return guarded([&] {
        require(system, "system");
        system->deployment.deploy();
    });
}

sg_status sg_system_inject(sg_system* system, const char* at_terminal, const char* src_terminal,
                           const char* dst_terminal, const char* payload, char** trace_json)
{
    return guarded([&] {
        require(system, "system");
        require(at_terminal, "at_terminal");
        require(src_terminal, "src_terminal");
        require(dst_terminal, "dst_terminal");
        ensure_deployed(system);
        auto trace = system->deployment.inject(TerminalId(at_terminal), TerminalId(src_terminal),
                                               TerminalId(dst_terminal), payload ? payload : "");
        emit(trace_json, trace_to_json(trace));
    });
}

sg_status sg_system_update_policy(sg_system* system, const char* policy_json, char** delta_json)
{
    return guarded([&] {
        require(system, "system");
        require(policy_json, "policy_json");
        ensure_deployed(system);
        auto delta = system->deployment.update_policy(parse_policy(parse_json_text(policy_json)));
        emit(delta_json, rule_delta_to_json(delta));
    });
}

sg_status sg_system_install_rule(sg_system* system, const char* switch_id, const char* rule_json)
{
    return guarded([&] {
        require(system, "system");
        require(switch_id, "switch_id");
        require(rule_json, "rule_json");
        ensure_deployed(system);
        system->deployment.network().install_entry(SwitchId(switch_id),
                                                   rule_from_json(parse_json_text(rule_json)));
    });
}

sg_status sg_system_installed_rules(const sg_system* system, char** rules_json)
{
    return guarded([&] {
        require(system, "system");
        require(rules_json, "rules_json");
        const auto& d = system->deployment;
        emit(rules_json, rules_to_json(d.fixture().topology, d.network().rules()));
    });
}

sg_status sg_system_verify(sg_system* system, int* compliant, char** report_json)
{
    return guarded([&] {
        require(system, "system");
        ensure_deployed(system);
        system->deployment.exercise_allowed();
        auto report = system->deployment.verify();
        if (compliant)
            *compliant = report.compliant() ? 1 : 0;
        emit(report_json, compliance_to_json(report));
    });
}

sg_status sg_run_scenario(const char* name_or_path, int* passed, char** report_json)
{
    return guarded([&] {
        require(name_or_path, "name_or_path");
        std::optional<Scenario> scenario;
        for (auto& s : builtin_scenarios())
            if (s.name == name_or_path)
                scenario = std::move(s);
        if (!scenario)
            scenario = load_scenario_file(name_or_path);
        auto report = run_scenario(*scenario);
        if (passed)
            *passed = report.passed ? 1 : 0;
        emit(report_json, scenario_report_to_json(report));
    });
}

sg_status sg_list_scenarios(char** names_json)
{
    return guarded([&] {
        require(names_json, "names_json");
        Json names = Json::array();
        for (const auto& s : builtin_scenarios())
            names.push_back(s.name);
        emit(names_json, names);
    });
}

sg_status sg_run_bench(const sg_bench_params* params, int* compliant, char** report_json)
{
    return guarded([&] {
        require(params, "params");
        BenchParams p;
        p.switches = params->switches;
        p.terminals = params->terminals;
        p.pairs = params->pairs;
        p.seed = params->seed;
        if (params->repeats)
            p.repeats = params->repeats;
        if (params->compliance_sample)
            p.compliance_sample = params->compliance_sample;
        auto result = run_bench(p);
        if (compliant)
            *compliant = result.compliance.compliant() ? 1 : 0;
        emit(report_json, bench_report_to_json(result));
    });
}

sg_status sg_run_suite(uint64_t seed, int* passed, char** rules_json, char** report_json,
                       char** timing_json)
{
    return guarded([&] {
        auto out = run_suite(seed);
        if (passed)
            *passed = out.passed ? 1 : 0;
        // Allocate everything before handing anything out.
        std::unique_ptr<char, decltype(&std::free)> rules(copy_out(out.rules), &std::free);
        std::unique_ptr<char, decltype(&std::free)> report(copy_out(out.report), &std::free);
        std::unique_ptr<char, decltype(&std::free)> timing(copy_out(out.timing), &std::free);
        if (rules_json)
            *rules_json = rules.release();
        if (report_json)
            *report_json = report.release();
        if (timing_json)
            *timing_json = timing.release();
    });
}

} // extern "C"
