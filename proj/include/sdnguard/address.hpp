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
#include <string>
#include <string_view>

namespace sdnguard {

/// 48-bit Ethernet address, stored in the low bits of a 64-bit word.
class MacAddress {
public:
    constexpr MacAddress() = default;
    constexpr explicit MacAddress(std::uint64_t raw) : raw_(raw & kMask) { }

    /// Accepts "aa:bb:cc:dd:ee:ff" (case-insensitive). Throws Error(Parse).
    static MacAddress parse(std::string_view text);

    constexpr std::uint64_t raw() const { return raw_; }
    std::string to_string() const;

    friend constexpr auto operator<=>(const MacAddress&, const MacAddress&) = default;

private:
    static constexpr std::uint64_t kMask = 0xffffffffffffULL;
    std::uint64_t raw_ = 0;
};

class Ipv4Address {
public:
    constexpr Ipv4Address() = default;
    constexpr explicit Ipv4Address(std::uint32_t raw) : raw_(raw) { }

    /// Dotted quad only. Throws Error(Parse).
    static Ipv4Address parse(std::string_view text);

    constexpr std::uint32_t raw() const { return raw_; }
    std::string to_string() const;

    friend constexpr auto operator<=>(const Ipv4Address&, const Ipv4Address&) = default;

private:
    std::uint32_t raw_ = 0;
};

} // namespace sdnguard
