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

#include "sdnguard/generator.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "sdnguard/error.hpp"

namespace sdnguard {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    // rejection sampling on the top of the range removes modulo bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
        - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

constexpr std::uint64_t kEnumerationLimit = 4'000'000;

struct Candidate {
    std::uint32_t src;  // index into principal list
    std::uint32_t dst;  // index into principal list, always a service
};

[[noreturn]] void fail(const std::string& why)
{
    throw Error(ErrorCode::GenerationFailure, why);
}

} // namespace

Fixture generate_fixture(const GeneratorParams& p)
{
    if (p.switches < 1 || p.terminals < 1)
        fail("at least one switch and one terminal are required");
    const std::uint64_t t = p.terminals;
    const std::uint64_t wanted = std::uint64_t(p.allow_pairs) + p.deny_pairs;
    if (std::uint64_t(p.allow_pairs) > t * (t - 1))
        fail(std::to_string(p.allow_pairs) + " allow pairs exceed the " + std::to_string(t * (t - 1))
             + " ordered pairs of " + std::to_string(t) + " terminals");
    if (p.malicious > p.terminals)
        fail("more malicious consumers than terminals");

    // Consumers can only originate requests, so keep as many as the pair
    // budget tolerates (at most a quarter of the terminals).
    const std::uint64_t m = p.malicious;
    const std::uint64_t most = std::min(t, std::max(t / 4, m));
    std::optional<std::uint64_t> consumers;
    for (std::uint64_t c = most + 1; c-- > m;) {
        const std::uint64_t s = t - c;
        if (s * (s ? s - 1 : 0) + (c - m) * s >= wanted) {
            consumers = c;
            break;
        }
    }
    if (!consumers)
        fail("cannot draw " + std::to_string(wanted) + " distinct policy pairs from "
             + std::to_string(t) + " terminals");

    Rng rng(p.seed);
    Fixture f;
    f.name = "generated-" + std::to_string(p.seed);

    std::vector<PortNo> next_port(p.switches, 1);
    auto port_on = [&](std::uint32_t sw) {
        return SwitchPort{SwitchId("sw" + std::to_string(sw + 1)), next_port[sw]++};
    };
    auto cost = [&] { return 1.0 + static_cast<double>(uniform_below(rng, std::max(1u, p.max_link_cost))); };

    for (std::uint32_t i = 1; i < p.switches; ++i) {
        const auto j = static_cast<std::uint32_t>(uniform_below(rng, i));
        if (p.allow_partition && uniform_below(rng, 4) == 0)
            continue;
        f.topology.links.push_back({port_on(i), port_on(j), cost()});
    }
    if (p.switches > 1) {
        const auto extra = static_cast<std::uint32_t>(p.extra_link_ratio * p.switches);
        for (std::uint32_t e = 0; e < extra; ++e) {
            const auto a = static_cast<std::uint32_t>(uniform_below(rng, p.switches));
            auto b = static_cast<std::uint32_t>(uniform_below(rng, p.switches - 1));
            if (b >= a)
                ++b;
            f.topology.links.push_back({port_on(a), port_on(b), cost()});
        }
    }
    for (std::uint32_t k = 1; k <= p.terminals; ++k) {
        Terminal term{TerminalId("t" + std::to_string(k)), Ipv4Address(0x0a000000u + k),
                      MacAddress(0x020000000000ULL | k)};
        const auto sw = k <= p.switches ? k - 1 : static_cast<std::uint32_t>(uniform_below(rng, p.switches));
        f.topology.links.push_back({term.id, port_on(sw), 1.0});
        f.topology.terminals.push_back(std::move(term));
    }
    for (std::uint32_t i = 0; i < p.switches; ++i) {
        Switch sw{SwitchId("sw" + std::to_string(i + 1)), {}};
        for (PortNo port = 1; port < next_port[i]; ++port)
            sw.ports.push_back(port);
        f.topology.switches.push_back(std::move(sw));
    }

    // Principal placement: a random permutation of terminals, consumers first.
    std::vector<std::uint32_t> order(p.terminals);
    for (std::uint32_t k = 0; k < p.terminals; ++k)
        order[k] = k + 1;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(rng, i)]);

    std::vector<std::string> names;
    std::vector<std::uint32_t> service_index;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::string n = std::to_string(order[i]);
        const TerminalId terminal("t" + n);
        if (i < *consumers) {
            names.push_back("c" + n);
            f.catalog.consumers.push_back({ConsumerId("c" + n), "{}", terminal});
            if (i < m)
                f.policy.malicious.push_back("c" + n);
        } else {
            names.push_back("s" + n);
            service_index.push_back(static_cast<std::uint32_t>(i));
            f.catalog.services.push_back({ServiceId("s" + n), "{}", terminal, "/svc/s" + n});
        }
    }

    const std::uint64_t s = service_index.size();
    const std::uint64_t sources = t - m;
    auto candidate_at = [&](std::uint64_t x) {
        // sources are principal indices m..t-1, destinations are services
        const auto src = static_cast<std::uint32_t>(m + x / s);
        return Candidate{src, service_index[x % s]};
    };
    // services never target themselves
    auto valid = [](const Candidate& c) { return c.src != c.dst; };

    std::vector<Candidate> drawn;
    if (sources * s <= kEnumerationLimit) {
        std::vector<Candidate> all;
        for (std::uint64_t x = 0; x < sources * s; ++x)
            if (auto c = candidate_at(x); valid(c))
                all.push_back(c);
        for (std::size_t i = 0; i < wanted; ++i) {
            std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
            drawn.push_back(all[i]);
        }
    } else {
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        while (drawn.size() < wanted) {
            const auto c = candidate_at(uniform_below(rng, sources * s));
            if (valid(c) && seen.insert({c.src, c.dst}).second)
                drawn.push_back(c);
        }
    }

    for (std::size_t i = 0; i < drawn.size(); ++i) {
        PolicyEntry entry{names[drawn[i].src], names[drawn[i].dst]};
        (i < p.allow_pairs ? f.policy.allow : f.policy.deny).push_back(std::move(entry));
    }
    return f;
}

} // namespace sdnguard
