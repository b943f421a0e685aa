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

#include "sdnguard/flow.hpp"

#include <algorithm>

namespace sdnguard {

bool FlowMatch::matches(const PacketHeaders& headers, PortNo port) const
{
    return (!src_mac || *src_mac == headers.src_mac)
        && (!src_ip || *src_ip == headers.src_ip)
        && (!dst_mac || *dst_mac == headers.dst_mac)
        && (!dst_ip || *dst_ip == headers.dst_ip)
        && (!in_port || *in_port == port);
}

bool FlowMatch::fully_specified() const
{
    return src_mac && src_ip && dst_mac && dst_ip && in_port;
}

bool FlowTable::install(const FlowRule& rule)
{
    if (!index_.insert(rule).second)
        return false;
    entries_.push_back({rule, 0});
    return true;
}

bool FlowTable::remove(const FlowRule& rule)
{
    if (!index_.count(rule))
        return false;
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const FlowEntry& e) { return e.rule == rule; });
    if (it == entries_.end())
        return false;
    entries_.erase(it);
    index_.erase(rule);
    return true;
}

bool FlowTable::contains(const FlowRule& rule) const
{
    return index_.count(rule) > 0;
}

std::size_t FlowTable::find_index(const PacketHeaders& headers, PortNo in_port) const
{
    std::size_t first_forward = entries_.size();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& rule = entries_[i].rule;
        if (!rule.match.matches(headers, in_port))
            continue;
        if (rule.action.is_drop())
            return i;
        if (first_forward == entries_.size())
            first_forward = i;
    }
    return first_forward;
}

std::optional<FlowRule> FlowTable::match(const PacketHeaders& headers, PortNo in_port)
{
    const std::size_t i = find_index(headers, in_port);
    if (i == entries_.size())
        return std::nullopt;
    ++entries_[i].counter;
    return entries_[i].rule;
}

const FlowEntry* FlowTable::peek(const PacketHeaders& headers, PortNo in_port) const
{
    const std::size_t i = find_index(headers, in_port);
    return i == entries_.size() ? nullptr : &entries_[i];
}

std::uint64_t FlowTable::counter(const FlowRule& rule) const
{
    for (const auto& e : entries_)
        if (e.rule == rule)
            return e.counter;
    return 0;
}

std::size_t rule_count(const RuleSet& rules)
{
    std::size_t n = 0;
    for (const auto& [sw, set] : rules)
        n += set.size();
    return n;
}

RuleDelta diff_rules(const RuleSet& before, const RuleSet& after)
{
    RuleDelta delta;
    static const std::set<FlowRule> none;
    auto side = [](const RuleSet& rs, const SwitchId& id) -> const std::set<FlowRule>& {
        auto it = rs.find(id);
        return it == rs.end() ? none : it->second;
    };
    std::set<SwitchId> switches;
    for (const auto& [id, _] : before)
        switches.insert(id);
    for (const auto& [id, _] : after)
        switches.insert(id);
    for (const auto& id : switches) {
        const auto& old_rules = side(before, id);
        const auto& new_rules = side(after, id);
        std::set<FlowRule> added;
        std::set<FlowRule> removed;
        std::set_difference(new_rules.begin(), new_rules.end(), old_rules.begin(), old_rules.end(),
                            std::inserter(added, added.end()));
        std::set_difference(old_rules.begin(), old_rules.end(), new_rules.begin(), new_rules.end(),
                            std::inserter(removed, removed.end()));
        if (!added.empty())
            delta.added.emplace(id, std::move(added));
        if (!removed.empty())
            delta.removed.emplace(id, std::move(removed));
    }
    return delta;
}

RuleSet apply_rule_delta(RuleSet rules, const RuleDelta& delta)
{
    for (const auto& [id, removed] : delta.removed) {
        auto it = rules.find(id);
        if (it == rules.end())
            continue;
        for (const auto& r : removed)
            it->second.erase(r);
        if (it->second.empty())
            rules.erase(it);
    }
    for (const auto& [id, added] : delta.added)
        rules[id].insert(added.begin(), added.end());
    return rules;
}

} // namespace sdnguard
