//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file util/Hash.cc
//---------------------------------------------------------------------------//
#include "qcloak/util/Hash.hh"

#include <fmt/format.h>

namespace qcloak
{
std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::string_view bytes)
{
    return fmt::format("{:016x}", fnv1a64(bytes));
}

std::string format_double(double value)
{
    return fmt::format("{:.17g}", value);
}
}  // namespace qcloak
