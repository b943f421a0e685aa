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

#include "sdnguard/flow.hpp"
#include "sdnguard/generator.hpp"

using namespace sdnguard;

namespace {

PacketHeaders headers(int src, int dst)
{
    auto mac = [](int k) { return MacAddress::parse("00:00:00:00:00:0" + std::to_string(k)); };
    auto ip = [](int k) { return Ipv4Address::parse("10.0.0." + std::to_string(k)); };
    return {mac(src), ip(src), mac(dst), ip(dst)};
}

FlowRule forward(int src, int dst, PortNo in, PortNo out)
{
    auto h = headers(src, dst);
    return {{h.src_mac, h.src_ip, h.dst_mac, h.dst_ip, in}, FlowAction::forward(out)};
}

FlowRule drop_from(int src)
{
    auto h = headers(src, 1);
    return {{h.src_mac, h.src_ip, std::nullopt, std::nullopt, std::nullopt}, FlowAction::drop()};
}

} // namespace

TEST(FlowMatch, ExactAndWildcard)
{
    auto f = forward(1, 2, 3, 4);
    EXPECT_TRUE(f.match.fully_specified());
    EXPECT_TRUE(f.match.matches(headers(1, 2), 3));
    EXPECT_FALSE(f.match.matches(headers(1, 2), 4));
    EXPECT_FALSE(f.match.matches(headers(2, 1), 3));

    auto d = drop_from(1);
    EXPECT_FALSE(d.match.fully_specified());
    EXPECT_TRUE(d.match.matches(headers(1, 5), 9));
    EXPECT_FALSE(d.match.matches(headers(2, 5), 9));
    // Source MAC and IP must both agree.
    auto mixed = headers(1, 5);
    mixed.src_ip = Ipv4Address::parse("10.0.0.7");
    EXPECT_FALSE(d.match.matches(mixed, 9));
}

TEST(FlowTable, DropsTakePrecedence)
{
    FlowTable t;
    EXPECT_TRUE(t.install(forward(1, 2, 3, 4)));
    EXPECT_TRUE(t.install(drop_from(1)));
    auto hit = t.match(headers(1, 2), 3);
    ASSERT_TRUE(hit);
    EXPECT_TRUE(hit->action.is_drop());
    EXPECT_EQ(t.counter(drop_from(1)), 1u);
    EXPECT_EQ(t.counter(forward(1, 2, 3, 4)), 0u);
}

TEST(FlowTable, FirstMatchInInsertionOrder)
{
    FlowTable t;
    auto a = forward(1, 2, 3, 4);
    auto b = forward(1, 2, 3, 5);
    t.install(a);
    t.install(b);
    EXPECT_EQ(t.match(headers(1, 2), 3)->action.out_port, 4u);
    t.remove(a);
    EXPECT_EQ(t.match(headers(1, 2), 3)->action.out_port, 5u);
    t.install(a);
    EXPECT_EQ(t.match(headers(1, 2), 3)->action.out_port, 5u);
}

TEST(FlowTable, SetSemanticsAndCounters)
{
    FlowTable t;
    auto a = forward(1, 2, 3, 4);
    EXPECT_TRUE(t.install(a));
    EXPECT_FALSE(t.install(a));
    EXPECT_EQ(t.size(), 1u);
    EXPECT_TRUE(t.contains(a));
    t.match(headers(1, 2), 3);
    t.match(headers(1, 2), 3);
    EXPECT_EQ(t.counter(a), 2u);
    EXPECT_NE(t.peek(headers(1, 2), 3), nullptr);
    EXPECT_EQ(t.counter(a), 2u);
    EXPECT_FALSE(t.match(headers(2, 1), 3));
    EXPECT_TRUE(t.remove(a));
    EXPECT_FALSE(t.remove(a));
    EXPECT_TRUE(t.empty());
}

TEST(RuleDelta, DiffRoundTripProperty)
{
    Rng rng(7);
    auto random_set = [&] {
        RuleSet s;
        const auto n = uniform_below(rng, 12);
        for (std::uint64_t i = 0; i < n; ++i) {
            SwitchId sw("sw" + std::to_string(uniform_below(rng, 3)));
            const int src = 1 + static_cast<int>(uniform_below(rng, 4));
            const int dst = 1 + static_cast<int>(uniform_below(rng, 4));
            s[sw].insert(uniform_below(rng, 4) == 0
                             ? drop_from(src)
                             : forward(src, dst, 1 + static_cast<PortNo>(uniform_below(rng, 3)),
                                       1 + static_cast<PortNo>(uniform_below(rng, 3))));
        }
        return s;
    };
    for (int i = 0; i < 300; ++i) {
        auto before = random_set();
        auto after = random_set();
        auto delta = diff_rules(before, after);
        EXPECT_EQ(apply_rule_delta(before, delta), after);
        EXPECT_EQ(diff_rules(after, after), RuleDelta{});
        for (const auto& [sw, rules] : delta.added)
            for (const auto& r : rules) {
                auto it = before.find(sw);
                EXPECT_FALSE(it != before.end() && it->second.count(r));
            }
    }
}
