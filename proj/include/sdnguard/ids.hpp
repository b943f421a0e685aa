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
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace sdnguard {

// Opaque textual identifier; the tag keeps terminal ids, switch ids and
// service ids from being mixed up.
template <class Tag>
class BasicId {
public:
    BasicId() = default;
    explicit BasicId(std::string value) : value_(std::move(value)) { }

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    friend auto operator<=>(const BasicId&, const BasicId&) = default;
    friend bool operator==(const BasicId&, const BasicId&) = default;

    friend std::ostream& operator<<(std::ostream& os, const BasicId& id)
    { return os << id.value_; }

private:
    std::string value_;
};

using TerminalId = BasicId<struct TerminalTag>;
using SwitchId = BasicId<struct SwitchTag>;
using ServiceId = BasicId<struct ServiceTag>;
using ConsumerId = BasicId<struct ConsumerTag>;
using EventId = BasicId<struct EventTag>;

using PortNo = std::uint32_t;

} // namespace sdnguard

template <class Tag>
struct std::hash<sdnguard::BasicId<Tag>> {
    std::size_t operator()(const sdnguard::BasicId<Tag>& id) const noexcept
    { return std::hash<std::string>{}(id.str()); }
};
