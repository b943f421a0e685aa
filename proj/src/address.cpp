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

#include "sdnguard/address.hpp"

#include <charconv>
#include <cstdio>

#include "sdnguard/error.hpp"

namespace sdnguard {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownTerminal: return "UnknownTerminal";
    case ErrorCode::UnknownSwitch: return "UnknownSwitch";
    case ErrorCode::UnknownPort: return "UnknownPort";
    case ErrorCode::UndeclaredPrincipal: return "UndeclaredPrincipal";
    case ErrorCode::GrantToMaliciousConsumer: return "GrantToMaliciousConsumer";
    case ErrorCode::MappingIncomplete: return "MappingIncomplete";
    case ErrorCode::NoPolicyUploaded: return "NoPolicyUploaded";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ForwardingLoop: return "ForwardingLoop";
    case ErrorCode::FixtureMismatch: return "FixtureMismatch";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    }
    return "Unknown";
}

namespace {

int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

[[noreturn]] void bad_address(std::string_view kind, std::string_view text)
{
    throw Error(ErrorCode::Parse,
                "malformed " + std::string(kind) + " address '" + std::string(text) + "'");
}

} // namespace

MacAddress MacAddress::parse(std::string_view text)
{
    // six two-digit groups separated by ':'
    if (text.size() != 17)
        bad_address("MAC", text);
    std::uint64_t raw = 0;
    for (std::size_t group = 0; group < 6; ++group) {
        const std::size_t at = group * 3;
        const int hi = hex_value(text[at]);
        const int lo = hex_value(text[at + 1]);
        if (hi < 0 || lo < 0)
            bad_address("MAC", text);
        if (group < 5 && text[at + 2] != ':')
            bad_address("MAC", text);
        raw = (raw << 8) | static_cast<std::uint64_t>(hi * 16 + lo);
    }
    return MacAddress(raw);
}

std::string MacAddress::to_string() const
{
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x",
                  static_cast<unsigned>((raw_ >> 40) & 0xff),
                  static_cast<unsigned>((raw_ >> 32) & 0xff),
                  static_cast<unsigned>((raw_ >> 24) & 0xff),
                  static_cast<unsigned>((raw_ >> 16) & 0xff),
                  static_cast<unsigned>((raw_ >> 8) & 0xff),
                  static_cast<unsigned>(raw_ & 0xff));
    return buf;
}

Ipv4Address Ipv4Address::parse(std::string_view text)
{
    std::uint32_t raw = 0;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int octet = 0; octet < 4; ++octet) {
        if (octet > 0) {
            if (p == end || *p != '.')
                bad_address("IPv4", text);
            ++p;
        }
        // reject signs, blanks and leading zeros ("01")
        if (p == end || *p < '0' || *p > '9')
            bad_address("IPv4", text);
        if (*p == '0' && p + 1 != end && p[1] >= '0' && p[1] <= '9')
            bad_address("IPv4", text);
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || value > 255)
            bad_address("IPv4", text);
        raw = (raw << 8) | value;
        p = next;
    }
    if (p != end)
        bad_address("IPv4", text);
    return Ipv4Address(raw);
}

std::string Ipv4Address::to_string() const
{
    return std::to_string((raw_ >> 24) & 0xff) + '.' + std::to_string((raw_ >> 16) & 0xff) + '.'
        + std::to_string((raw_ >> 8) & 0xff) + '.' + std::to_string(raw_ & 0xff);
}

} // namespace sdnguard
