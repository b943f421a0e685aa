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

#include <gtest/gtest.h>

#include <charconv>

#include "sdnguard/controller.hpp"
#include "sdnguard/deployment.hpp"
#include "sdnguard/error.hpp"
#include "support/oracles.hpp"

using namespace sdnguard;

namespace {

TerminalPair tp(const char* a, const char* b)
{
    return {TerminalId(a), TerminalId(b)};
}

std::shared_ptr<const TopologyGraph> graph_of(const Fixture& f)
{
    return std::make_shared<const TopologyGraph>(f.topology);
}

const Terminal& find_terminal(const TopologySpec& spec, const TerminalId& id)
{
    for (const auto& t : spec.terminals)
        if (t.id == id)
            return t;
    throw std::logic_error("no terminal " + id.str());
}

PacketIn packet_in(const TopologySpec& spec, const char* sw, PortNo port, const char* src, const char* dst)
{
    return {SwitchId(sw), port,
            {headers_between(find_terminal(spec, TerminalId(src)), find_terminal(spec, TerminalId(dst))), ""}};
}

// "sw1.p3" -> (sw1, 3)
std::optional<SwitchPort> parse_port(const std::string& name)
{
    auto dot = name.rfind(".p");
    if (dot == std::string::npos)
        return std::nullopt;
    PortNo p = 0;
    std::from_chars(name.data() + dot + 2, name.data() + name.size(), p);
    return SwitchPort{SwitchId(name.substr(0, dot)), p};
}

// Rule image built from first principles: drops at the source's edge, and
// forward/reverse entries along the exhaustive-search path of each pair's
// canonical orientation.
RuleSet reference_image(const TopologySpec& spec, const Rspm& rspm)
{
    RuleSet out;
    auto edge_switch = [&](const TerminalId& t) -> std::optional<SwitchId> {
        for (const auto& l : spec.links) {
            const auto* a = std::get_if<TerminalId>(&l.a);
            const auto* b = std::get_if<TerminalId>(&l.b);
            if (a && *a == t && std::holds_alternative<SwitchPort>(l.b))
                return std::get<SwitchPort>(l.b).switch_id;
            if (b && *b == t && std::holds_alternative<SwitchPort>(l.a))
                return std::get<SwitchPort>(l.a).switch_id;
        }
        return std::nullopt;
    };
    for (const auto& t : rspm.deny_all_from) {
        const auto& term = find_terminal(spec, t);
        if (auto sw = edge_switch(t))
            out[*sw].insert({{term.mac, term.ip, std::nullopt, std::nullopt, std::nullopt}, FlowAction::drop()});
    }
    for (const auto& p : rspm.deny) {
        const auto& s = find_terminal(spec, p.src);
        const auto& d = find_terminal(spec, p.dst);
        if (auto sw = edge_switch(p.src))
            out[*sw].insert({{s.mac, s.ip, d.mac, d.ip, std::nullopt}, FlowAction::drop()});
    }
    for (const auto& p : rspm.allow) {
        if (rspm.deny_all_from.count(p.src))
            continue;
        const bool flip = p.dst < p.src;
        auto ref = flip ? oracle::brute_force_path(spec, p.dst.str(), p.src.str())
                        : oracle::brute_force_path(spec, p.src.str(), p.dst.str());
        if (!ref)
            continue;
        auto names = ref->names;
        if (flip)
            std::reverse(names.begin(), names.end());
        const auto& s = find_terminal(spec, p.src);
        const auto& d = find_terminal(spec, p.dst);
        for (std::size_t i = 1; i + 2 < names.size(); i += 2) {
            auto in = parse_port(names[i]);
            auto outp = parse_port(names[i + 1]);
            EXPECT_TRUE(in && outp && in->switch_id == outp->switch_id);
            out[in->switch_id].insert({{s.mac, s.ip, d.mac, d.ip, in->port_no}, FlowAction::forward(outp->port_no)});
            out[in->switch_id].insert({{d.mac, d.ip, s.mac, s.ip, outp->port_no}, FlowAction::forward(in->port_no)});
        }
    }
    return out;
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Controller, NeedsPolicyFirst)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    EXPECT_EQ(code_of([&] { c.handle_packet_in(packet_in(f.topology, "sw1", 1, "t1", "t2")); }),
              ErrorCode::NoPolicyUploaded);
}

TEST(Controller, UploadChecksTerminals)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t9")};
    EXPECT_EQ(code_of([&] { c.upload_rspm(r); }), ErrorCode::UnknownTerminal);
    r.allow = {tp("t1", "t1")};
    EXPECT_EQ(code_of([&] { c.upload_rspm(r); }), ErrorCode::PreconditionViolated);
    r.allow = {tp("t1", "t2")};
    r.deny = {tp("t1", "t2")};
    EXPECT_EQ(code_of([&] { c.upload_rspm(r); }), ErrorCode::PreconditionViolated);
}

TEST(Controller, UploadInstallsDropRulesOnly)
{
    auto f = fig4_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t6", "t3")};
    r.deny = {tp("t2", "t3")};
    r.deny_all_from = {TerminalId("t5")};
    auto delta = c.upload_rspm(r);
    EXPECT_TRUE(delta.removed.empty());
    ASSERT_EQ(delta.added_count(), 2u);
    const auto& sw2 = delta.added.at(SwitchId("sw2"));
    ASSERT_EQ(sw2.size(), 1u);
    const auto& black = *sw2.begin();
    EXPECT_TRUE(black.action.is_drop());
    EXPECT_TRUE(black.match.src_mac && black.match.src_ip);
    EXPECT_FALSE(black.match.dst_mac || black.match.dst_ip || black.match.in_port);
    const auto& pair_drop = *delta.added.at(SwitchId("sw1")).begin();
    EXPECT_TRUE(pair_drop.match.dst_ip);
    EXPECT_FALSE(pair_drop.match.in_port);
}

TEST(Controller, PermitsAllowedPairOnItsPath)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5")};
    c.upload_rspm(r);
    auto d = c.handle_packet_in(packet_in(f.topology, "sw1", 1, "t1", "t5"));
    ASSERT_TRUE(d.permitted());
    ASSERT_TRUE(d.path);
    EXPECT_EQ(d.path->names(), c.routing_path(TerminalId("t1"), TerminalId("t5"))->names());
    EXPECT_EQ(d.rules.size(), 4u);
    for (const auto& sr : d.rules) {
        EXPECT_TRUE(sr.rule.match.fully_specified());
        EXPECT_FALSE(sr.rule.action.is_drop());
    }
    // The second switch on the path may ask as well.
    EXPECT_TRUE(c.handle_packet_in(packet_in(f.topology, "sw2", 1, "t1", "t5")).permitted());
    EXPECT_EQ(c.installed_pairs(), std::vector<TerminalPair>{tp("t1", "t5")});
    EXPECT_EQ(c.stats().packet_ins, 2u);
}

TEST(Controller, DeniesEverythingElse)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5")};
    c.upload_rspm(r);
    // Not allowed.
    EXPECT_FALSE(c.handle_packet_in(packet_in(f.topology, "sw1", 2, "t2", "t5")).permitted());
    // Responses are never asked for: the forward pair's reverse entries carry them.
    EXPECT_FALSE(c.handle_packet_in(packet_in(f.topology, "sw2", 2, "t5", "t1")).permitted());
    // Allowed headers entering where t1 cannot be.
    EXPECT_FALSE(c.handle_packet_in(packet_in(f.topology, "sw1", 2, "t1", "t5")).permitted());
    EXPECT_FALSE(c.handle_packet_in(packet_in(f.topology, "sw2", 3, "t1", "t5")).permitted());
    // Unknown addresses.
    auto in = packet_in(f.topology, "sw1", 1, "t1", "t5");
    in.packet.headers.dst_ip = Ipv4Address::parse("192.168.0.1");
    EXPECT_FALSE(c.handle_packet_in(in).permitted());
    EXPECT_EQ(c.stats().denied, 5u);
    EXPECT_TRUE(c.installed_pairs().empty());
}

TEST(Controller, SynthesisIsSymmetric)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5"), tp("t5", "t1")};
    c.upload_rspm(r);
    auto ab = c.synthesize_flow_rules(TerminalId("t1"), TerminalId("t5"));
    auto ba = c.synthesize_flow_rules(TerminalId("t5"), TerminalId("t1"));
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(code_of([&] { c.synthesize_flow_rules(TerminalId("t2"), TerminalId("t1")); }),
              ErrorCode::PreconditionViolated);
}

TEST(Controller, NoPathIsDenialAtRuntime)
{
    auto f = fig2_fixture();
    f.topology.links.erase(f.topology.links.begin() + 3);  // the trunk
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5")};
    c.upload_rspm(r);
    EXPECT_EQ(code_of([&] { c.synthesize_flow_rules(TerminalId("t1"), TerminalId("t5")); }),
              ErrorCode::NoPath);
    EXPECT_FALSE(c.handle_packet_in(packet_in(f.topology, "sw1", 1, "t1", "t5")).permitted());
}

TEST(Controller, UploadForgetsForwardingRules)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5")};
    c.upload_rspm(r);
    c.handle_packet_in(packet_in(f.topology, "sw1", 1, "t1", "t5"));
    auto delta = c.upload_rspm(r);
    EXPECT_EQ(delta.removed_count(), 4u);
    EXPECT_TRUE(c.installed().empty());
}

TEST(Controller, UpdateKeepsStillPermittedPairs)
{
    auto f = fig2_fixture();
    Controller c(graph_of(f));
    Rspm r;
    r.allow = {tp("t1", "t5"), tp("t2", "t3")};
    c.upload_rspm(r);
    c.handle_packet_in(packet_in(f.topology, "sw1", 1, "t1", "t5"));
    c.handle_packet_in(packet_in(f.topology, "sw1", 2, "t2", "t3"));
    Rspm next;
    next.allow = {tp("t1", "t5")};
    next.deny_all_from = {TerminalId("t6")};
    auto delta = c.apply_update(next);
    EXPECT_EQ(c.installed_pairs(), std::vector<TerminalPair>{tp("t1", "t5")});
    EXPECT_EQ(delta.removed_count(), 2u);
    EXPECT_EQ(delta.added_count(), 1u);
}

TEST(CompileRules, MatchesReferenceImage)
{
    Rng rng(314);
    for (int i = 0; i < 80; ++i) {
        auto f = oracle::small_random_fixture(rng, 14, 5, 3, 6);
        auto rspm = oracle::random_rspm(f.topology, rng, 10, 3, 1);
        auto graph = graph_of(f);
        EXPECT_EQ(compile_rules(graph, rspm), reference_image(f.topology, rspm));
    }
}
