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
#include "sdnguard/error.hpp"
#include "sdnguard/generator.hpp"
#include "sdnguard/policy.hpp"
#include "support/oracles.hpp"

using namespace sdnguard;

namespace {

AccessPair svc(const char* a, const char* b)
{
    return {Principal::service(ServiceId(a)), ServiceId(b)};
}

TerminalPair tp(const char* a, const char* b)
{
    return {TerminalId(a), TerminalId(b)};
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

TEST(DeriveSpm, SpmsTransitionsOnly)
{
    auto f = spms_fixture();
    auto spm = derive_spm(*f.catalog.composition, f.catalog.consumers, {}, {});
    EXPECT_EQ(spm.allow, (std::set<AccessPair>{svc("s1", "s2"), svc("s3", "s2"), svc("s4", "s2"),
                                                svc("s2", "s5")}));
    EXPECT_TRUE(spm.deny.empty());
    EXPECT_TRUE(spm.malicious.empty());
}

TEST(DeriveSpm, GrantsAndMalicious)
{
    auto f = fig4_fixture();
    const auto& wsc = *f.catalog.composition;
    auto spm = derive_spm(wsc, f.catalog.consumers, {{ConsumerId("sc1"), ServiceId("s3")}},
                          {ConsumerId("sc2")});
    EXPECT_EQ(spm.allow.size(), 3u);
    EXPECT_TRUE(spm.allow.count({Principal::consumer(ConsumerId("sc1")), ServiceId("s3")}));
    EXPECT_EQ(spm.malicious, std::set<ConsumerId>{ConsumerId("sc2")});

    EXPECT_EQ(code_of([&] {
                  derive_spm(wsc, f.catalog.consumers, {{ConsumerId("sc2"), ServiceId("s1")}},
                             {ConsumerId("sc2")});
              }),
              ErrorCode::GrantToMaliciousConsumer);
    EXPECT_EQ(code_of([&] {
                  derive_spm(wsc, f.catalog.consumers, {{ConsumerId("ghost"), ServiceId("s1")}}, {});
              }),
              ErrorCode::UndeclaredPrincipal);
    EXPECT_EQ(code_of([&] { derive_spm(wsc, f.catalog.consumers, {}, {ConsumerId("ghost")}); }),
              ErrorCode::UndeclaredPrincipal);
}

TEST(DeriveSpm, SelfInvocationIsNotAPair)
{
    Wsc wsc;
    wsc.initial = ServiceId("s1");
    wsc.services = {ServiceId("s1"), ServiceId("s2")};
    wsc.events = {EventId("e")};
    wsc.transitions = {{ServiceId("s1"), EventId("e"), ServiceId("s1")},
                       {ServiceId("s1"), EventId("e"), ServiceId("s2")}};
    auto spm = derive_spm(wsc, {}, {}, {});
    EXPECT_EQ(spm.allow, std::set<AccessPair>{svc("s1", "s2")});
}

TEST(ValidateSpm, Invariants)
{
    auto f = fig2_fixture();
    Spm spm;
    spm.allow = {svc("s1", "s2"), svc("s1", "s1"), svc("s1", "s9")};
    spm.deny = {svc("s1", "s2")};
    spm.malicious = {ConsumerId("sc1")};
    spm.allow.insert({Principal::consumer(ConsumerId("sc1")), ServiceId("s3")});
    auto r = validate_spm(spm, f.catalog.services, f.catalog.consumers);
    EXPECT_TRUE(r.contains("self-pair"));
    EXPECT_TRUE(r.contains("undeclared-principal"));
    EXPECT_TRUE(r.contains("allow-deny-overlap"));
    EXPECT_TRUE(r.contains("malicious-granted"));
}

TEST(TransformSpm, Fig2)
{
    auto f = fig2_fixture();
    auto spm = build_spm(f.policy, f.catalog);
    auto rspm = transform_spm_to_rspm(spm, f.catalog.services, f.catalog.consumers);
    EXPECT_EQ(rspm.allow, (std::set<TerminalPair>{tp("t1", "t2"), tp("t1", "t3"), tp("t5", "t3")}));
    EXPECT_TRUE(rspm.deny.empty());
    EXPECT_TRUE(rspm.deny_all_from.empty());
}

TEST(TransformSpm, MaliciousBecomesBlacklistedTerminal)
{
    auto f = fig4_fixture();
    auto rspm = transform_spm_to_rspm(build_spm(f.policy, f.catalog), f.catalog.services,
                                      f.catalog.consumers);
    EXPECT_EQ(rspm.deny_all_from, std::set<TerminalId>{TerminalId("t5")});
    EXPECT_TRUE(rspm.allow.count(tp("t6", "t3")));
}

TEST(TransformSpm, Errors)
{
    auto f = fig2_fixture();
    Spm spm;
    spm.allow = {svc("s1", "s7")};
    EXPECT_EQ(code_of([&] { transform_spm_to_rspm(spm, f.catalog.services, f.catalog.consumers); }),
              ErrorCode::MappingIncomplete);
    auto services = f.catalog.services;
    services[1].terminal = services[0].terminal;
    spm.allow = {svc("s1", "s3")};
    EXPECT_EQ(code_of([&] { transform_spm_to_rspm(spm, services, f.catalog.consumers); }),
              ErrorCode::PreconditionViolated);
}

// With an injective principal map, the image of every allow/deny pair is
// exactly one terminal pair and nothing else appears.
TEST(TransformSpm, InjectiveImageProperty)
{
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        auto f = oracle::small_random_fixture(rng, 40, 8, 3, 10);
        auto spm = build_spm(f.policy, f.catalog);
        auto rspm = transform_spm_to_rspm(spm, f.catalog.services, f.catalog.consumers);
        std::map<std::string, TerminalId> where;
        for (const auto& s : f.catalog.services)
            where.emplace(s.id.str(), s.terminal);
        for (const auto& c : f.catalog.consumers)
            where.emplace(c.id.str(), c.terminal);
        std::set<TerminalPair> allow, deny;
        for (const auto& p : spm.allow)
            allow.insert({where.at(p.src.id), where.at(p.dst.str())});
        for (const auto& p : spm.deny)
            deny.insert({where.at(p.src.id), where.at(p.dst.str())});
        EXPECT_EQ(rspm.allow, allow);
        EXPECT_EQ(rspm.deny, deny);
        EXPECT_EQ(rspm.allow.size(), spm.allow.size());
        EXPECT_EQ(rspm.deny_all_from.size(), spm.malicious.size());
    }
}

TEST(RspmDelta, RoundTripProperty)
{
    Rng rng(5);
    auto f = fig4_fixture();
    for (int i = 0; i < 200; ++i) {
        auto a = oracle::random_rspm(f.topology, rng, 8, 4, 2);
        auto b = oracle::random_rspm(f.topology, rng, 8, 4, 2);
        auto d = diff_rspm(a, b);
        EXPECT_EQ(apply_rspm_delta(a, d), b);
        EXPECT_TRUE(diff_rspm(b, b).empty());
        EXPECT_EQ(d.empty(), a == b);
    }
}
