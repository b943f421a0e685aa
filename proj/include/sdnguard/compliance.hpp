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

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sdnguard/controller.hpp"
#include "sdnguard/dataplane.hpp"
#include "sdnguard/policy.hpp"

namespace sdnguard {

enum class ProbeMode { WithController, TablesOnly };

/// Injects one canonical packet per ordered pair of distinct terminals, each
/// on a private copy of the network and controller, and collects the pairs
/// that got through. TablesOnly leaves misses unanswered.
std::set<TerminalPair> reachable_pairs(const Network& network,
                                       const Controller* controller,
                                       std::span<const Terminal> terminals,
                                       ProbeMode mode);

/// Same probe restricted to the listed pairs.
std::set<TerminalPair> probe_pairs(const Network& network,
                                   const Controller* controller,
                                   std::span<const TerminalPair> pairs,
                                   ProbeMode mode);

struct ComplianceFinding {
    TerminalPair terminals;
    std::string src_principal;  // empty when the terminal hosts no principal
    std::string dst_principal;
};

struct ComplianceReport {
    std::vector<ComplianceFinding> leaks;             // reachable, not allowed
    std::vector<ComplianceFinding> gaps;              // allowed, connected, unreachable
    std::vector<ComplianceFinding> reverse_of_allowed;  // response traffic, conformant
    std::vector<ComplianceFinding> allowed_reached;
    std::size_t probed_pairs = 0;

    bool compliant() const { return leaks.empty() && gaps.empty(); }
};

/// Compares dynamic reachability against the principal-level policy.
ComplianceReport check_compliance(const Spm& spm,
                                  std::span<const WebService> services,
                                  std::span<const ServiceConsumer> consumers,
                                  const Network& network,
                                  const Controller& controller);

/// Terminal-level variant over an optional sample of ordered pairs; with no
/// sample every ordered pair is probed.
ComplianceReport check_rspm_compliance(const Rspm& rspm,
                                       const Network& network,
                                       const Controller& controller,
                                       std::optional<std::span<const TerminalPair>> sample = {});

} // namespace sdnguard
