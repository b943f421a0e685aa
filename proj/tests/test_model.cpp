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

#include "sdnguard/deployment.hpp"
#include "sdnguard/model.hpp"

using namespace sdnguard;

namespace {

ValidationReport check(const Fixture& f)
{
    return validate_model(f.topology, f.catalog.services, f.catalog.consumers);
}

Terminal& terminal(Fixture& f, const char* id)
{
    for (auto& t : f.topology.terminals)
        if (t.id.str() == id)
            return t;
    throw std::logic_error("no terminal");
}

} // namespace

TEST(ValidateModel, BuiltinFixturesAreClean)
{
    for (const auto& name : builtin_fixture_names()) {
        auto f = builtin_fixture(name);
        EXPECT_TRUE(check(f).ok()) << name;
        ASSERT_TRUE(f.catalog.composition) << name;
        EXPECT_TRUE(validate_wsc(*f.catalog.composition, f.catalog.services).ok()) << name;
    }
}

TEST(ValidateModel, DuplicateAddresses)
{
    auto f = fig2_fixture();
    terminal(f, "t2").ip = terminal(f, "t1").ip;
    terminal(f, "t3").mac = terminal(f, "t1").mac;
    auto r = check(f);
    EXPECT_TRUE(r.contains("duplicate-ip"));
    EXPECT_TRUE(r.contains("duplicate-mac"));
    EXPECT_EQ(r.size(), 2u);
}

TEST(ValidateModel, DuplicateTerminalAndSwitchIds)
{
    auto f = fig2_fixture();
    f.topology.terminals.push_back({TerminalId("t1"), Ipv4Address::parse("10.9.9.9"),
                                    MacAddress::parse("00:00:00:00:09:09")});
    f.topology.switches.push_back({SwitchId("sw1"), {9}});
    auto r = check(f);
    EXPECT_TRUE(r.contains("duplicate-terminal-id"));
    EXPECT_TRUE(r.contains("duplicate-switch-id"));
}

TEST(ValidateModel, PortsMustBePositiveAndUnique)
{
    auto f = fig2_fixture();
    f.topology.switches[0].ports.push_back(0);
    f.topology.switches[1].ports.push_back(1);
    auto r = check(f);
    EXPECT_TRUE(r.contains("invalid-port-number"));
    EXPECT_TRUE(r.contains("duplicate-port"));
}

TEST(ValidateModel, TerminalNeedsExactlyOneAttachment)
{
    auto f = fig2_fixture();
    f.topology.links.push_back({TerminalId("t1"), SwitchPort{SwitchId("sw2"), 9}, 1.0});
    f.topology.switches[1].ports.push_back(9);
    f.topology.terminals.push_back({TerminalId("t9"), Ipv4Address::parse("10.0.0.9"),
                                    MacAddress::parse("00:00:00:00:00:09")});
    auto r = check(f);
    ASSERT_TRUE(r.contains("terminal-attachment"));
    std::vector<std::vector<std::string>> subjects;
    for (const auto& v : r.violations())
        if (v.kind == "terminal-attachment")
            subjects.push_back(v.subjects);
    EXPECT_EQ(subjects, (std::vector<std::vector<std::string>>{{"t1"}, {"t9"}}));
}

TEST(ValidateModel, TerminalToTerminalLinkIsNotAnAttachment)
{
    auto f = fig2_fixture();
    f.topology.terminals.push_back({TerminalId("t9"), Ipv4Address::parse("10.0.0.9"),
                                    MacAddress::parse("00:00:00:00:00:09")});
    f.topology.links.push_back({TerminalId("t9"), TerminalId("t1"), 1.0});
    auto r = check(f);
    EXPECT_TRUE(r.contains("terminal-attachment"));
}

TEST(ValidateModel, LinkShapeAndCost)
{
    auto f = fig2_fixture();
    f.topology.links.push_back({SwitchPort{SwitchId("sw1"), 4}, SwitchPort{SwitchId("sw1"), 4}, 1.0});
    f.topology.links.push_back({SwitchPort{SwitchId("sw1"), 1}, SwitchPort{SwitchId("sw1"), 2}, 3.0});
    f.topology.links.push_back({SwitchPort{SwitchId("sw9"), 1}, SwitchPort{SwitchId("sw1"), 2}, 1.0});
    auto r = check(f);
    EXPECT_TRUE(r.contains("self-link"));
    EXPECT_TRUE(r.contains("inner-link-cost"));
    EXPECT_TRUE(r.contains("unknown-link-endpoint"));

    auto g = fig2_fixture();
    g.topology.links.back().cost = 0.0;
    EXPECT_TRUE(check(g).contains("link-cost"));
    g.topology.links.back().cost = -1.0;
    EXPECT_TRUE(check(g).contains("link-cost"));
}

TEST(ValidateModel, PortCarriesOneExternalLink)
{
    auto f = fig2_fixture();
    f.topology.switches[1].ports.push_back(7);
    f.topology.links.push_back({SwitchPort{SwitchId("sw1"), 4}, SwitchPort{SwitchId("sw2"), 7}, 1.0});
    EXPECT_TRUE(check(f).contains("port-multiple-links"));
}

TEST(ValidateModel, PrincipalMapping)
{
    auto f = fig2_fixture();
    f.catalog.consumers.push_back({ConsumerId("sc2"), "", TerminalId("t1")});
    f.catalog.consumers.push_back({ConsumerId("s2"), "", TerminalId("t6")});
    f.catalog.services.push_back({ServiceId("s9"), "", TerminalId("t42"), f.catalog.services[0].uri});
    auto r = check(f);
    EXPECT_TRUE(r.contains("non-injective-mapping"));
    EXPECT_TRUE(r.contains("principal-id-collision"));
    EXPECT_TRUE(r.contains("unknown-service-terminal"));
    EXPECT_TRUE(r.contains("duplicate-uri"));
}

TEST(ValidateModel, ReportIsSortedAndDeduplicated)
{
    ValidationReport r;
    r.add("b", {"x"}, "second");
    r.add("a", {"y"}, "first");
    r.add("b", {"x"}, "again");
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.violations()[0].kind, "a");
    EXPECT_EQ(r.violations()[1].kind, "b");
}

TEST(ValidateWsc, StructuralChecks)
{
    Wsc wsc;
    wsc.initial = ServiceId("s0");
    wsc.services = {ServiceId("s1"), ServiceId("s2")};
    wsc.events = {EventId("e1")};
    wsc.transitions = {{ServiceId("s1"), EventId("e2"), ServiceId("s3")}};
    auto r = validate_wsc(wsc);
    EXPECT_TRUE(r.contains("initial-not-member"));
    EXPECT_TRUE(r.contains("undeclared-service"));
    EXPECT_TRUE(r.contains("undeclared-event"));

    auto f = fig2_fixture();
    auto comp = *f.catalog.composition;
    comp.services.insert(ServiceId("s77"));
    EXPECT_TRUE(validate_wsc(comp, f.catalog.services).contains("composition-unknown-service"));
}

TEST(TopologyGraph, AttachmentsAndPeers)
{
    TopologyGraph g(fig2_fixture().topology);
    EXPECT_EQ(g.vertex_count(), 5u + 7u);
    auto a = g.attachment(TerminalId("t5"));
    ASSERT_TRUE(a);
    EXPECT_EQ(vertex_name(*a), "sw2.p2");
    auto peer = g.peer({SwitchId("sw1"), 4});
    ASSERT_TRUE(peer);
    EXPECT_EQ(vertex_name(*peer), "sw2.p1");
    EXPECT_FALSE(g.peer({SwitchId("sw1"), 9}));
    const auto* t = g.terminal_by_address(MacAddress::parse("00:00:00:00:00:03"), Ipv4Address::parse("10.0.0.3"));
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->id.str(), "t3");
    EXPECT_EQ(g.terminal_by_address(MacAddress::parse("00:00:00:00:00:03"), Ipv4Address::parse("10.0.0.2")), nullptr);
}
