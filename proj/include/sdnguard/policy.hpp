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

#include <compare>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "sdnguard/model.hpp"

namespace sdnguard {

struct Principal {
    enum class Kind : std::uint8_t { Service, Consumer };

    Kind kind = Kind::Service;
    std::string id;

    static Principal service(const ServiceId& s) { return {Kind::Service, s.str()}; }
    static Principal consumer(const ConsumerId& c) { return {Kind::Consumer, c.str()}; }

    friend auto operator<=>(const Principal&, const Principal&) = default;
};

/// Ordered application-plane pair: `src` may access service `dst`.
struct AccessPair {
    Principal src;
    ServiceId dst;

    friend auto operator<=>(const AccessPair&, const AccessPair&) = default;
};

/// Owner-authored policy. Anything not in `allow` is denied; `deny` records
/// explicit denials that get enforced at the source's edge switch, and every
/// request from a `malicious` consumer is dropped there.
struct Spm {
    std::set<AccessPair> allow;
    std::set<AccessPair> deny;
    std::set<ConsumerId> malicious;

    friend bool operator==(const Spm&, const Spm&) = default;
};

struct TerminalPair {
    TerminalId src;
    TerminalId dst;

    TerminalPair reversed() const { return {dst, src}; }

    friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

/// The policy's image over data-plane terminals.
struct Rspm {
    std::set<TerminalPair> allow;
    std::set<TerminalPair> deny;
    std::set<TerminalId> deny_all_from;

    bool empty() const { return allow.empty() && deny.empty() && deny_all_from.empty(); }

    friend bool operator==(const Rspm&, const Rspm&) = default;
};

struct RspmDelta {
    std::set<TerminalPair> added_allow;
    std::set<TerminalPair> removed_allow;
    std::set<TerminalPair> added_deny;
    std::set<TerminalPair> removed_deny;
    std::set<TerminalId> added_deny_all;
    std::set<TerminalId> removed_deny_all;

    bool empty() const;

    friend bool operator==(const RspmDelta&, const RspmDelta&) = default;
};

using ConsumerGrant = std::pair<ConsumerId, ServiceId>;

/// Builds the SPM from the composition: one allow pair per distinct
/// (invoker, invoked) service pair, plus the consumer grants.
///
/// Throws Error(UndeclaredPrincipal) when a grant or malicious entry names a
/// consumer outside `consumers` or a service outside the composition, and
/// Error(GrantToMaliciousConsumer) when a consumer is both granted and
/// malicious.
Spm derive_spm(const Wsc& wsc,
               std::span<const ServiceConsumer> consumers,
               const std::set<ConsumerGrant>& grants,
               const std::set<ConsumerId>& malicious);

/// SPM invariants: disjoint allow/deny, declared principals, no self pairs,
/// malicious consumers are never granted access.
ValidationReport validate_spm(const Spm& spm,
                              std::span<const WebService> services,
                              std::span<const ServiceConsumer> consumers);

/// Maps every principal onto its terminal. Throws Error(MappingIncomplete) if
/// a principal has no binding and Error(PreconditionViolated) if two
/// principals share a terminal.
Rspm transform_spm_to_rspm(const Spm& spm,
                           std::span<const WebService> services,
                           std::span<const ServiceConsumer> consumers);

RspmDelta diff_rspm(const Rspm& before, const Rspm& after);
Rspm apply_rspm_delta(Rspm rspm, const RspmDelta& delta);

} // namespace sdnguard
