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

#include "sdnguard/policy.hpp"

#include <algorithm>
#include <map>

#include "sdnguard/error.hpp"

namespace sdnguard {

namespace {

std::string describe(const Principal& p)
{
    return (p.kind == Principal::Kind::Service ? "service " : "consumer ") + p.id;
}

std::string describe(const AccessPair& pair)
{
    return pair.src.id + " -> " + pair.dst.str();
}

template <class T>
std::set<T> set_minus(const std::set<T>& a, const std::set<T>& b)
{
    std::set<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

template <class T>
void apply_set_delta(std::set<T>& target, const std::set<T>& added, const std::set<T>& removed)
{
    for (const auto& x : removed)
        target.erase(x);
    target.insert(added.begin(), added.end());
}

} // namespace

Spm derive_spm(const Wsc& wsc,
               std::span<const ServiceConsumer> consumers,
               const std::set<ConsumerGrant>& grants,
               const std::set<ConsumerId>& malicious)
{
    if (auto report = validate_wsc(wsc); !report.ok())
        throw Error(ErrorCode::PreconditionViolated,
                    "composition is not well formed: " + report.violations().front().message);

    std::set<ConsumerId> declared;
    for (const auto& c : consumers)
        declared.insert(c.id);

    Spm spm;
    for (const auto& t : wsc.transitions)
        if (t.from != t.to)
            spm.allow.insert({Principal::service(t.from), t.to});

    for (const auto& c : malicious) {
        if (!declared.count(c))
            throw Error(ErrorCode::UndeclaredPrincipal,
                        "malicious consumer '" + c.str() + "' is not declared");
        spm.malicious.insert(c);
    }
    for (const auto& [consumer, service] : grants) {
        if (!declared.count(consumer))
            throw Error(ErrorCode::UndeclaredPrincipal,
                        "granted consumer '" + consumer.str() + "' is not declared");
        if (!wsc.services.count(service))
            throw Error(ErrorCode::UndeclaredPrincipal,
                        "granted service '" + service.str() + "' is not part of the composition");
        if (malicious.count(consumer))
            throw Error(ErrorCode::GrantToMaliciousConsumer,
                        "consumer '" + consumer.str() + "' is both granted access and malicious");
        spm.allow.insert({Principal::consumer(consumer), service});
    }
    return spm;
}

ValidationReport validate_spm(const Spm& spm,
                              std::span<const WebService> services,
                              std::span<const ServiceConsumer> consumers)
{
    ValidationReport report;
    std::set<std::string> service_ids;
    std::set<std::string> consumer_ids;
    for (const auto& s : services)
        service_ids.insert(s.id.str());
    for (const auto& c : consumers)
        consumer_ids.insert(c.id.str());

    auto declared = [&](const Principal& p) {
        return p.kind == Principal::Kind::Service ? service_ids.count(p.id) > 0
                                                  : consumer_ids.count(p.id) > 0;
    };
    auto check = [&](const AccessPair& pair, const char* list) {
        if (!declared(pair.src))
            report.add("undeclared-principal", {pair.src.id},
                       std::string(list) + " pair names undeclared " + describe(pair.src));
        if (!service_ids.count(pair.dst.str()))
            report.add("undeclared-principal", {pair.dst.str()},
                       std::string(list) + " pair targets undeclared service " + pair.dst.str());
        if (pair.src.kind == Principal::Kind::Service && pair.src.id == pair.dst.str())
            report.add("self-pair", {pair.src.id},
                       std::string(list) + " pair " + describe(pair) + " grants access to itself");
    };
    for (const auto& pair : spm.allow) {
        check(pair, "allow");
        if (spm.deny.count(pair))
            report.add("allow-deny-overlap", {pair.src.id, pair.dst.str()},
                       "pair " + describe(pair) + " is both allowed and denied");
        if (pair.src.kind == Principal::Kind::Consumer
            && spm.malicious.count(ConsumerId(pair.src.id)))
            report.add("malicious-granted", {pair.src.id, pair.dst.str()},
                       "malicious consumer " + pair.src.id + " is granted " + pair.dst.str());
    }
    for (const auto& pair : spm.deny)
        check(pair, "deny");
    for (const auto& c : spm.malicious)
        if (!consumer_ids.count(c.str()))
            report.add("undeclared-principal", {c.str()},
                       "malicious consumer " + c.str() + " is not declared");
    return report;
}

Rspm transform_spm_to_rspm(const Spm& spm,
                           std::span<const WebService> services,
                           std::span<const ServiceConsumer> consumers)
{
    std::map<Principal, TerminalId> binding;
    std::map<TerminalId, Principal> owner;
    auto bind = [&](const Principal& p, const TerminalId& t) {
        if (t.empty())
            return;
        auto [it, fresh] = owner.emplace(t, p);
        if (!fresh && !(it->second == p))
            throw Error(ErrorCode::PreconditionViolated,
                        describe(it->second) + " and " + describe(p) + " share terminal " + t.str());
        binding.emplace(p, t);
    };
    for (const auto& s : services)
        bind(Principal::service(s.id), s.terminal);
    for (const auto& c : consumers)
        bind(Principal::consumer(c.id), c.terminal);

    auto terminal_of = [&](const Principal& p) -> const TerminalId& {
        auto it = binding.find(p);
        if (it == binding.end())
            throw Error(ErrorCode::MappingIncomplete, describe(p) + " has no terminal binding");
        return it->second;
    };
    auto map_pair = [&](const AccessPair& pair) {
        return TerminalPair{terminal_of(pair.src), terminal_of(Principal::service(pair.dst))};
    };

    Rspm rspm;
    for (const auto& pair : spm.allow)
        rspm.allow.insert(map_pair(pair));
    for (const auto& pair : spm.deny)
        rspm.deny.insert(map_pair(pair));
    for (const auto& c : spm.malicious)
        rspm.deny_all_from.insert(terminal_of(Principal::consumer(c)));
    return rspm;
}

bool RspmDelta::empty() const
{
    return added_allow.empty() && removed_allow.empty() && added_deny.empty()
        && removed_deny.empty() && added_deny_all.empty() && removed_deny_all.empty();
}

RspmDelta diff_rspm(const Rspm& before, const Rspm& after)
{
    return {
        set_minus(after.allow, before.allow),
        set_minus(before.allow, after.allow),
        set_minus(after.deny, before.deny),
        set_minus(before.deny, after.deny),
        set_minus(after.deny_all_from, before.deny_all_from),
        set_minus(before.deny_all_from, after.deny_all_from),
    };
}

Rspm apply_rspm_delta(Rspm rspm, const RspmDelta& delta)
{
    apply_set_delta(rspm.allow, delta.added_allow, delta.removed_allow);
    apply_set_delta(rspm.deny, delta.added_deny, delta.removed_deny);
    apply_set_delta(rspm.deny_all_from, delta.added_deny_all, delta.removed_deny_all);
    return rspm;
}

} // namespace sdnguard
