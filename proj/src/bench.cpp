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

#include "sdnguard/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sdnguard/error.hpp"
#include "sdnguard/generator.hpp"

namespace sdnguard {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

DurationStats summarise(const std::vector<double>& samples)
{
    DurationStats d;
    if (samples.empty())
        return d;
    d.samples = static_cast<std::uint32_t>(samples.size());
    d.min = *std::min_element(samples.begin(), samples.end());
    d.max = *std::max_element(samples.begin(), samples.end());
    d.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    return d;
}

// Half drawn from the allowed pairs, the rest uniformly over ordered pairs.
std::vector<TerminalPair> compliance_sample(const Rspm& rspm, const std::vector<Terminal>& terminals,
                                            std::size_t want, std::uint64_t seed)
{
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::set<TerminalPair> chosen;
    std::vector<TerminalPair> allowed(rspm.allow.begin(), rspm.allow.end());
    const std::size_t n = terminals.size();
    const std::size_t universe = n * (n - 1);
    want = std::min(want, universe);

    for (std::size_t i = 0; i < allowed.size() && chosen.size() < want / 2; ++i) {
        auto j = i + uniform_below(rng, allowed.size() - i);
        std::swap(allowed[i], allowed[j]);
        chosen.insert(allowed[i]);
    }
    while (chosen.size() < want) {
        auto a = uniform_below(rng, n);
        auto b = uniform_below(rng, n - 1);
        if (b >= a)
            ++b;
        chosen.insert({terminals[a].id, terminals[b].id});
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

double BenchResult::per_pair_seconds() const
{
    if (params.pairs == 0)
        return 0.0;
    return (transform.mean + synthesis.mean) / static_cast<double>(params.pairs);
}

BenchResult run_bench(const BenchParams& params)
{
    if (params.switches < 1 || params.terminals < 1 || params.pairs < 1)
        throw Error(ErrorCode::GenerationFailure, "bench sizes must be at least 1");

    GeneratorParams g;
    g.switches = params.switches;
    g.terminals = params.terminals;
    g.allow_pairs = params.pairs;
    g.seed = params.seed;
    const Fixture fixture = generate_fixture(g);
    auto graph = std::make_shared<const TopologyGraph>(fixture.topology);
    const Spm spm = build_spm(fixture.policy, fixture.catalog);

    BenchResult result;
    result.params = params;
    const std::uint32_t repeats = std::max<std::uint32_t>(1, params.repeats);
    result.params.repeats = repeats;

    std::vector<double> samples;
    Rspm rspm;
    for (std::uint32_t r = 0; r < repeats; ++r) {
        auto start = Clock::now();
        rspm = transform_spm_to_rspm(spm, fixture.catalog.services, fixture.catalog.consumers);
        samples.push_back(seconds_since(start));
    }
    result.transform = summarise(samples);
    result.rspm_size = rspm.allow.size() + rspm.deny.size();

    samples.clear();
    for (std::uint32_t r = 0; r < repeats; ++r) {
        Controller controller(graph);
        controller.upload_rspm(rspm);
        auto start = Clock::now();
        for (const auto& pair : rspm.allow)
            controller.synthesize_flow_rules(pair.src, pair.dst);
        samples.push_back(seconds_since(start));
    }
    result.synthesis = summarise(samples);

    // Drive every allowed pair through the controller as the first packet of
    // its flow would.
    Network network(graph);
    Controller controller(graph);
    network.apply(controller.upload_rspm(rspm));
    samples.clear();
    for (const auto& pair : rspm.allow) {
        const auto* src = graph->terminal(pair.src);
        const auto* dst = graph->terminal(pair.dst);
        auto at = graph->attachment(pair.src);
        if (!src || !dst || !at)
            continue;
        PacketIn in{at->switch_id, at->port_no, {headers_between(*src, *dst), "bench"}};
        auto start = Clock::now();
        auto decision = controller.handle_packet_in(in);
        samples.push_back(seconds_since(start));
        network.install(decision.rules);
    }
    result.packet_in_latency = summarise(samples);
    result.rules = rule_count(network.rules());

    auto sample = compliance_sample(rspm, fixture.topology.terminals,
                                    params.compliance_sample ? params.compliance_sample : 200,
                                    params.seed);
    result.compliance = check_rspm_compliance(rspm, network, controller,
                                              std::span<const TerminalPair>(sample));
    return result;
}

} // namespace sdnguard
