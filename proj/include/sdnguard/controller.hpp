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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sdnguard/flow.hpp"
#include "sdnguard/model.hpp"
#include "sdnguard/policy.hpp"
#include "sdnguard/routing.hpp"

namespace sdnguard {

struct ControllerStats {
    std::uint64_t packet_ins = 0;
    std::uint64_t rules_installed = 0;
    std::uint64_t denied = 0;
};

struct Decision {
    enum class Verdict : std::uint8_t { Deny, Permit };

    Verdict verdict = Verdict::Deny;
    std::vector<SwitchRule> rules;  // empty on Deny
    std::optional<Path> path;       // path the rules realise, on Permit

    bool permitted() const { return verdict == Verdict::Permit; }
};

/// Access-control application of the SDN controller.
///
/// Holds the uploaded terminal-level policy, decides packet-ins and keeps the
/// set of rules it has asked the switches to hold. Drop rules for explicit
/// and malicious-source denials are produced at upload time; forwarding rules
/// for allowed pairs are produced on the first packet-in of the pair.
///
/// Operations on one instance must be serialised. Copies are cheap: the
/// per-pair rule sets are shared between copies.
class Controller {
public:
    explicit Controller(std::shared_ptr<const TopologyGraph> topology);

    /// Replaces the policy and forgets every forwarding rule. The returned
    /// delta takes the switches from the previous installed state to the new
    /// one. Throws Error(UnknownTerminal).
    RuleDelta upload_rspm(Rspm rspm);

    /// Throws Error(NoPolicyUploaded) before the first upload.
    Decision handle_packet_in(const PacketIn& packet_in);

    /// Forward and reverse rules for every switch on the pair's path.
    /// Throws Error(PreconditionViolated) unless the pair is allowed, and
    /// Error(NoPath) if the topology does not connect it.
    std::vector<SwitchRule> synthesize_flow_rules(const TerminalId& src,
                                                  const TerminalId& dst) const;

    /// Swaps in a new policy, keeping forwarding rules of pairs that are
    /// still permitted. Throws Error(UnknownTerminal).
    RuleDelta apply_update(Rspm rspm);

    /// Path used for a pair's rules. Both orientations of a pair share one
    /// path so their forward and reverse rules coincide.
    std::optional<Path> routing_path(const TerminalId& src, const TerminalId& dst) const;

    /// Rule set the switches are expected to hold.
    RuleSet installed() const;
    std::vector<TerminalPair> installed_pairs() const;

    bool has_policy() const noexcept { return rspm_.has_value(); }
    const Rspm& rspm() const;
    const ControllerStats& stats() const noexcept { return stats_; }
    const TopologyGraph& topology() const noexcept { return *topology_; }

private:
    struct PairRules {
        Path path;
        std::vector<SwitchRule> rules;
    };

    void check_terminals(const Rspm& rspm) const;
    RuleSet drop_rules(const Rspm& rspm) const;
    bool permits(const TerminalPair& pair) const;
    std::shared_ptr<const PairRules> build_pair(const TerminalPair& pair) const;

    std::shared_ptr<const TopologyGraph> topology_;
    std::optional<Rspm> rspm_;
    RuleSet drops_;
    std::map<TerminalPair, std::shared_ptr<const PairRules>> pairs_;
    ControllerStats stats_;
};

/// Rules a controller would hold after permitting every allowed, connected
/// pair of `rspm`: the eager image of the policy.
RuleSet compile_rules(std::shared_ptr<const TopologyGraph> topology, const Rspm& rspm);

} // namespace sdnguard
