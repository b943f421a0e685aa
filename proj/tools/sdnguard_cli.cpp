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

// Command-line front end. Talks to the library through its C interface only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdnguard/sdnguard.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

struct Failure {
    int exit_code;
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { sg_string_free(ptr); }
    char** out() { return &ptr; }
    std::string str() const { return ptr ? ptr : ""; }
};

struct SystemHandle {
    sg_system* ptr = nullptr;
    ~SystemHandle() { sg_system_close(ptr); }
};

void check(sg_status status, const char* what)
{
    if (status == SG_OK)
        return;
    std::cerr << "error: " << what << ": " << sg_status_name(status) << ": " << sg_last_error() << "\n";
    throw Failure{status == SG_ERR_INVALID_MODEL ? kViolations : kInputError};
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        throw Failure{kInputError};
    }
}

// Inputs: either three files (topology, services, policy) or a built-in fixture.
struct Inputs {
    std::vector<std::string> files;
    std::string fixture;

    void bind(CLI::App* cmd)
    {
        cmd->add_option("files", files, "topology.json services.json policy.json")->expected(0, 3);
        cmd->add_option("--fixture", fixture, "built-in fixture instead of files (fig2, fig4, spms)");
    }

    void open(SystemHandle& sys) const
    {
        if (!fixture.empty() && files.empty()) {
            check(sg_system_open_builtin(fixture.c_str(), &sys.ptr), "loading fixture");
            return;
        }
        if (files.size() != 3 || !fixture.empty()) {
            std::cerr << "error: give either three input files or --fixture\n";
            throw Failure{kInputError};
        }
        check(sg_system_open_files(files[0].c_str(), files[1].c_str(), files[2].c_str(), &sys.ptr),
              "loading inputs");
    }
};

void print_findings(const Json& list, const char* label)
{
    for (const auto& f : list)
        std::cout << "  " << label << ": " << f["src"].get<std::string>() << " -> "
                  << f["dst"].get<std::string>() << "\n";
}

void print_compliance(const Json& c)
{
    std::cout << "compliance: " << (c["compliant"].get<bool>() ? "PASS" : "FAIL")
              << " (probed " << c["probed_pairs"] << ", allowed reached "
              << c["allowed_reached"].size() << ", responses " << c["reverse_of_allowed"].size()
              << ", leaks " << c["leak_count"] << ", gaps " << c["gap_count"] << ")\n";
    print_findings(c["leaks"], "leak");
    print_findings(c["gaps"], "gap");
}

int cmd_validate(const Inputs& in, const std::string& report)
{
    SystemHandle sys;
    in.open(sys);
    std::size_t n = 0;
    OwnedString doc;
    check(sg_system_validate(sys.ptr, &n, doc.out()), "validating");
    auto j = Json::parse(doc.str());
    for (const auto& v : j["violations"])
        std::cout << v["kind"].get<std::string>() << ": " << v["message"].get<std::string>() << "\n";
    std::cout << (n == 0 ? "valid" : std::to_string(n) + " violation(s)") << "\n";
    if (!report.empty())
        write_file(report, doc.str());
    return n == 0 ? kPass : kViolations;
}

int cmd_compile(const Inputs& in, const std::string& out)
{
    SystemHandle sys;
    in.open(sys);
    std::size_t n = 0;
    OwnedString validation;
    check(sg_system_validate(sys.ptr, &n, validation.out()), "validating");
    if (n != 0) {
        for (const auto& v : Json::parse(validation.str())["violations"])
            std::cout << v["kind"].get<std::string>() << ": " << v["message"].get<std::string>() << "\n";
        std::cout << n << " violation(s); nothing compiled\n";
        return kViolations;
    }
    OwnedString rules;
    check(sg_system_compile(sys.ptr, rules.out()), "compiling");
    write_file(out, rules.str());
    auto j = Json::parse(rules.str());
    std::cout << j["rule_count"] << " rule(s) over " << j["switches"].size() << " switch(es) written to "
              << out << "\n";
    return kPass;
}

int cmd_run_scenario(const std::string& name, const std::string& report)
{
    int passed = 0;
    OwnedString doc;
    check(sg_run_scenario(name.c_str(), &passed, doc.out()), "running scenario");
    auto j = Json::parse(doc.str());
    std::cout << "scenario " << j["name"].get<std::string>() << " (" << j["kind"].get<std::string>()
              << ") on " << j["fixture"].get<std::string>() << "\n";
    for (const auto& s : j["steps"]) {
        std::cout << "  " << (s["matched"].get<bool>() ? "ok  " : "FAIL") << " "
                  << s["src"].get<std::string>() << " -> " << s["dst"].get<std::string>();
        if (s["spoofed"].get<bool>())
            std::cout << " (spoofed at " << s["at"].get<std::string>() << ")";
        std::cout << ": expected " << s["expected"].get<std::string>() << ", got "
                  << s["actual"].get<std::string>() << "\n";
    }
    print_compliance(j["compliance"]);
    std::cout << (passed ? "PASS" : "FAIL") << "\n";
    if (!report.empty())
        write_file(report, doc.str());
    return passed ? kPass : kViolations;
}

int cmd_list_scenarios()
{
    OwnedString doc;
    check(sg_list_scenarios(doc.out()), "listing scenarios");
    for (const auto& n : Json::parse(doc.str()))
        std::cout << n.get<std::string>() << "\n";
    return kPass;
}

int cmd_verify(const Inputs& in, const std::string& report)
{
    SystemHandle sys;
    in.open(sys);
    std::size_t n = 0;
    OwnedString validation;
    check(sg_system_validate(sys.ptr, &n, validation.out()), "validating");
    if (n != 0) {
        std::cout << n << " violation(s); run validate for details\n";
        return kViolations;
    }
    int compliant = 0;
    OwnedString doc;
    check(sg_system_verify(sys.ptr, &compliant, doc.out()), "verifying");
    print_compliance(Json::parse(doc.str()));
    if (!report.empty())
        write_file(report, doc.str());
    return compliant ? kPass : kViolations;
}

int cmd_bench(const sg_bench_params& params, const std::string& report)
{
    int compliant = 0;
    OwnedString doc;
    check(sg_run_bench(&params, &compliant, doc.out()), "running bench");
    auto j = Json::parse(doc.str());
    const auto& r = j["results"];
    const auto& t = j["timing"];
    std::cout << "rspm size " << r["rspm_size"] << ", rules installed " << r["rules"] << "\n";
    auto line = [&](const char* label, const Json& d) {
        std::printf("%-18s min %.6f s  mean %.6f s  max %.6f s\n", label, d["min"].get<double>(),
                    d["mean"].get<double>(), d["max"].get<double>());
    };
    line("transform", t["transform_seconds"]);
    line("synthesis", t["synthesis_seconds"]);
    line("packet-in latency", t["packet_in_latency_seconds"]);
    std::printf("per pair           %.9f s\n", t["per_pair_seconds"].get<double>());
    std::fflush(stdout);
    print_compliance(r["compliance"]);
    if (!report.empty())
        write_file(report, doc.str());
    return compliant ? kPass : kViolations;
}

int cmd_suite(std::uint64_t seed, const std::string& out_dir)
{
    int passed = 0;
    OwnedString rules, report, timing;
    check(sg_run_suite(seed, &passed, rules.out(), report.out(), timing.out()), "running suite");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create '" << out_dir << "': " << ec.message() << "\n";
        return kInputError;
    }
    const std::filesystem::path dir(out_dir);
    write_file((dir / "rules.json").string(), rules.str());
    write_file((dir / "report.json").string(), report.str());
    write_file((dir / "timing.json").string(), timing.str());
    auto j = Json::parse(report.str());
    for (const auto& s : j["scenarios"])
        std::cout << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << "scenario " << s["name"].get<std::string>() << "\n";
    for (const auto& v : j["verification"])
        std::cout << (v["compliance"]["compliant"].get<bool>() ? "PASS " : "FAIL ") << "verify "
                  << v["fixture"].get<std::string>() << "\n";
    std::cout << (j["bench"]["compliance"]["compliant"].get<bool>() ? "PASS " : "FAIL ") << "bench\n";
    std::cout << (passed ? "suite passed" : "suite failed") << "; output in " << out_dir << "\n";
    return passed ? kPass : kViolations;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Access control for composed Web services on a simulated OpenFlow network"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sg_version()));

    Inputs validate_in, compile_in, verify_in;
    std::string report, out = "rules.json", scenario, out_dir = "suite-out";
    bool list = false;
    sg_bench_params bench{};
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "check model, composition and policy invariants");
    validate_in.bind(validate);
    validate->add_option("--report", report, "write the violation report as JSON");

    auto* compile = app.add_subcommand("compile", "write the eager rule image of the policy");
    compile_in.bind(compile);
    compile->add_option("--out", out, "output rules.json")->capture_default_str();

    auto* run = app.add_subcommand("run-scenario", "run a built-in scenario or a scenario file");
    run->add_option("scenario", scenario, "scenario name or path");
    run->add_flag("--list", list, "list built-in scenarios");
    run->add_option("--report", report, "write the scenario report as JSON");

    auto* verify = app.add_subcommand("verify", "exercise allowed flows and check reachability against the policy");
    verify_in.bind(verify);
    verify->add_option("--report", report, "write the compliance report as JSON");

    auto* bench_cmd = app.add_subcommand("bench", "time transformation and rule synthesis on a generated instance");
    bench_cmd->add_option("--switches", bench.switches)->required();
    bench_cmd->add_option("--terminals", bench.terminals)->required();
    bench_cmd->add_option("--pairs", bench.pairs)->required();
    bench_cmd->add_option("--seed", bench.seed)->required();
    bench_cmd->add_option("--repeats", bench.repeats, "timing repeats (default 5)");
    bench_cmd->add_option("--sample", bench.compliance_sample, "pairs probed for compliance (default 200)");
    bench_cmd->add_option("--report", report, "write results and timings as JSON");

    auto* suite = app.add_subcommand("suite", "run everything and write rules.json, report.json and timing.json");
    suite->add_option("--seed", seed)->capture_default_str();
    suite->add_option("--out-dir", out_dir)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kInputError;
    }

    try {
        if (*validate)
            return cmd_validate(validate_in, report);
        if (*compile)
            return cmd_compile(compile_in, out);
        if (*run) {
            if (list)
                return cmd_list_scenarios();
            if (scenario.empty()) {
                std::cerr << "error: scenario name or path required\n";
                return kInputError;
            }
            return cmd_run_scenario(scenario, report);
        }
        if (*verify)
            return cmd_verify(verify_in, report);
        if (*bench_cmd)
            return cmd_bench(bench, report);
        if (*suite)
            return cmd_suite(seed, out_dir);
    } catch (const Failure& f) {
        return f.exit_code;
    }
    return kInputError;
}
