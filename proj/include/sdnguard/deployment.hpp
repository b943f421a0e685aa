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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdnguard/compliance.hpp"
#include "sdnguard/controller.hpp"
#include "sdnguard/dataplane.hpp"
#include "sdnguard/model.hpp"
#include "sdnguard/policy.hpp"

namespace sdnguard {

struct ServiceCatalog {
    std::vector<WebService> services;
    std::vector<ServiceConsumer> consumers;
    std::optional<Wsc> composition;
};

struct PolicyEntry {
    std::string src;  // service or consumer id
    std::string dst;  // service id
};

/// Policy as written by the composition owner: principal ids only. With
/// `derive_from_composition`, every service invocation of the composition is
/// allowed in addition to the listed pairs.
struct PolicyDocument {
    std::vector<PolicyEntry> allow;
    std::vector<PolicyEntry> deny;
    std::vector<std::string> malicious;
    bool derive_from_composition = false;
};

struct Fixture {
    std::string name;
    TopologySpec topology;
    ServiceCatalog catalog;
    PolicyDocument policy;
};

/// Resolves principal ids and builds the SPM. Throws
/// Error(UndeclaredPrincipal) / Error(GrantToMaliciousConsumer).
Spm build_spm(const PolicyDocument& policy, const ServiceCatalog& catalog);

/// Two switches, five attached terminals: t1..t3 on sw1, t5 and t6 on sw2.
/// s1..s3 run on t1..t3 and consumer sc1 uses t5; s1 may reach s2 and s3,
/// sc1 may reach s3, s2 may not reach s3.
Fixture fig2_fixture();

/// Like fig2 but with t4 (unknown consumer) attached to sw2, sc1 on t6 and
/// the malicious consumer sc2 on t5.
Fixture fig4_fixture();

/// Physiological monitoring composition: login, monitoring, heart rate,
/// temperature and alarming services on t1..t5, with patient and physician
/// consumers granted the login service.
Fixture spms_fixture();

/// "fig2", "fig4" or "spms". Throws Error(InvalidArgument).
Fixture builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

/// A fixture brought to life: validated model, compiled policy, simulated
/// network and controller.
class Deployment {
public:
    explicit Deployment(Fixture fixture);

    const Fixture& fixture() const noexcept { return fixture_; }
    const std::shared_ptr<const TopologyGraph>& graph() const noexcept { return graph_; }

    /// Model, composition and policy invariants in one report.
    ValidationReport validate() const;

    /// Compiles the policy and uploads it. Throws Error(InvalidModel) when
    /// validate() is not clean.
    void deploy();
    bool deployed() const noexcept { return deployed_; }

    const Spm& spm() const;
    const Rspm& rspm() const;

    /// Eager rule image of the current policy (needs no deploy()).
    RuleSet compiled_rules() const;

    /// Packet from `src` to `dst` (by terminal headers) injected at `at`.
    TraceResult inject(const TerminalId& at, const TerminalId& src, const TerminalId& dst,
                       const std::string& payload = {});
    TraceResult inject(const TerminalId& at, const Packet& packet);

    /// Replaces the policy and pushes the rule delta into the switches.
    RuleDelta update_policy(const PolicyDocument& policy);

    /// Sends one packet along every allowed pair, in sorted order.
    std::vector<TraceResult> exercise_allowed();

    ComplianceReport verify() const;

    Network& network() { return network_; }
    const Network& network() const { return network_; }
    Controller& controller() { return controller_; }
    const Controller& controller() const { return controller_; }

private:
    void require_deployed() const;

    Fixture fixture_;
    std::shared_ptr<const TopologyGraph> graph_;
    std::optional<Spm> spm_;
    std::optional<Rspm> rspm_;
    Network network_;
    Controller controller_;
    bool deployed_ = false;
};

} // namespace sdnguard
